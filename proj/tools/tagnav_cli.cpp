// tagnav: command-line front end for building, querying and serving a tagged corpus.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tagnav/api.h"
#include "tagnav/engine.h"
#include "tagnav/error.h"
#include "tagnav/server.h"

namespace fs = std::filesystem;
using namespace tagnav;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct InputFlags {
  std::string data = ".";
  std::string articles;
  std::string tags;
  std::string relations;
  std::string blacklist = "wikipedia,reference,wiki";
  std::size_t min_users = kDefaultMinUsers;
};

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    auto item = csv.substr(start, end - start);
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
    start = end + 1;
  }
  return out;
}

void add_input_flags(CLI::App* cmd, InputFlags& f, bool tag_pipeline = true,
                     const std::string& tags_flag = "--tags") {
  cmd->add_option("--data", f.data, "Directory holding articles.jsonl, tags.jsonl, relations.txt");
  cmd->add_option("--articles", f.articles, "Articles file (default <data>/articles.jsonl)");
  if (!tag_pipeline) return;
  cmd->add_option(tags_flag, f.tags, "Tag assignments file (default <data>/tags.jsonl)");
  cmd->add_option("--relations", f.relations, "Synonym relations (default <data>/relations.txt)");
  cmd->add_option("--blacklist", f.blacklist, "Comma-separated tags to drop")->capture_default_str();
  cmd->add_option("--min-users", f.min_users, "Minimum distinct annotators per article")
      ->capture_default_str();
}

fs::path articles_path(const InputFlags& f) {
  return f.articles.empty() ? fs::path(f.data) / "articles.jsonl" : fs::path(f.articles);
}

fs::path relations_path(const InputFlags& f) {
  return f.relations.empty() ? fs::path(f.data) / "relations.txt" : fs::path(f.relations);
}

BuildOptions build_options(const InputFlags& f) {
  BuildOptions opts;
  opts.articles_path = articles_path(f);
  opts.tags_path = f.tags.empty() ? fs::path(f.data) / "tags.jsonl" : fs::path(f.tags);
  const fs::path rel = relations_path(f);
  // an explicitly named relations file must exist; the default one is optional
  if (!f.relations.empty() || fs::exists(rel)) opts.relations_path = rel;
  opts.blacklist = split_csv(f.blacklist);
  opts.min_users = f.min_users;
  return opts;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + out_path);
  out << text;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::EmptyTag:
    case ErrorCode::EmptyFilter:
    case ErrorCode::ConflictingFilter:
    case ErrorCode::EmptyQuery:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    default:
      return kExitData;
  }
}

std::string format_score(double score) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", score);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tag-augmented navigation and search over wiki-style corpora"};
  app.require_subcommand(1);

  InputFlags in;

  auto* ingest = app.add_subcommand("ingest", "Load and validate articles");
  add_input_flags(ingest, in, false);

  auto* import_tags = app.add_subcommand("import-tags", "Run the tag pipeline and print a build report");
  add_input_flags(import_tags, in);

  std::string relate_tags;
  auto* relate = app.add_subcommand("relate", "Declare two tags synonymous and rebuild");
  // --tags names the pair here, so the assignments file moves to --tags-file
  add_input_flags(relate, in, true, "--tags-file");
  relate->add_option("--tags", relate_tags, "Two tags, comma-separated")->required();

  auto* analyze = app.add_subcommand("analyze", "Tag-presence analytics");
  analyze->require_subcommand(1);
  std::string analyze_out;
  auto* presence = analyze->add_subcommand("presence", "Presence counts per scope (CSV)");
  auto* curve = analyze->add_subcommand("curve", "Presence by tag count (CSV)");
  for (auto* sub : {presence, curve}) {
    add_input_flags(sub, in);
    sub->add_option("--out", analyze_out, "Output file (default stdout)");
  }

  std::size_t top = kDefaultTop;
  int min_font = kDefaultMinFont;
  int max_font = kDefaultMaxFont;
  std::string cloud_out;
  auto* cloud = app.add_subcommand("cloud", "Global tag cloud (JSON)");
  add_input_flags(cloud, in);
  cloud->add_option("--top", top)->capture_default_str();
  cloud->add_option("--min-font", min_font)->capture_default_str();
  cloud->add_option("--max-font", max_font)->capture_default_str();
  cloud->add_option("--out", cloud_out, "Output file (default stdout)");

  std::string query;
  std::string fields = "title,content,categories,tags";
  auto* search = app.add_subcommand("search", "Field-weighted keyword search");
  add_input_flags(search, in);
  search->add_option("query", query)->required();
  search->add_option("--fields", fields)->capture_default_str();
  search->add_option("--top", top)->capture_default_str();

  std::string tag;
  auto* pivot = app.add_subcommand("pivot", "Tags co-occurring with a tag");
  add_input_flags(pivot, in);
  pivot->add_option("tag", tag)->required();
  pivot->add_option("--top", top)->capture_default_str();

  bool all_articles = false;
  auto* popular = app.add_subcommand("popular", "Articles where a tag is top-weighted");
  add_input_flags(popular, in);
  popular->add_option("tag", tag)->required();
  popular->add_option("--top", top)->capture_default_str();
  popular->add_flag("--all", all_articles, "List every article carrying the tag");

  std::string include;
  std::string exclude;
  auto* filter = app.add_subcommand("filter", "Articles with all included and no excluded tags");
  add_input_flags(filter, in);
  filter->add_option("--include", include);
  filter->add_option("--exclude", exclude);

  std::string addr = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  add_input_flags(serve, in);
  serve->add_option("--addr", addr, "Listen address (TAGNAV_ADDR overrides)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (ingest->parsed()) {
      const ArticleSet set = load_articles(articles_path(in));
      const ValidationReport r = validate(set);
      std::cout << "articles " << set.size() << "\n"
                << "dangling_links " << r.dangling_links << "\n"
                << "empty_content " << r.empty_content << "\n"
                << "empty_title " << r.empty_title << "\n";
      return 0;
    }
    if (top == 0) throw Error(ErrorCode::InvalidArgument, "--top must be at least 1");

    if (relate->parsed()) {
      const auto pair = split_csv(relate_tags);
      if (pair.size() != 2) throw Error(ErrorCode::InvalidArgument, "--tags needs exactly two tags");
      const TagRelation relation{normalize(pair[0]), normalize(pair[1])};
      const fs::path rel = relations_path(in);
      append_relation(rel, relation);
      InputFlags with_file = in;
      with_file.relations = rel.string();
      const auto state = build_engine(build_options(with_file));
      std::cout << "related " << format_relation(relation) << "\n"
                << "canonical " << state->graph.canonical(relation.first) << "\n"
                << format_report(state->report);
      return 0;
    }

    const auto state = build_engine(build_options(in));
    const Navigator& nav = *state->navigator;

    if (import_tags->parsed()) {
      std::cout << format_report(state->report);
    } else if (presence->parsed()) {
      emit(analyze_out, presence_csv(state->presence));
    } else if (curve->parsed()) {
      emit(analyze_out, curve_csv(state->curve));
    } else if (cloud->parsed()) {
      emit(cloud_out, canonical_dump(to_json(build_cloud(state->global, top, min_font, max_font))) + "\n");
    } else if (search->parsed()) {
      const auto results = state->index.search(query, FieldConfig::parse(fields));
      for (std::size_t i = 0; i < results.size() && i < top; ++i) {
        std::cout << results[i].article << " " << format_score(results[i].score) << "\n";
      }
    } else if (pivot->parsed()) {
      for (const auto& r : nav.pivot(state->canonical_tag(tag), top)) {
        std::cout << r.tag << " " << r.cooccurrence << "\n";
      }
    } else if (popular->parsed()) {
      const auto canonical = state->canonical_tag(tag);
      const auto ranked = all_articles ? nav.articles_with_tag(canonical, top)
                                       : nav.popular(canonical, top);
      for (const auto& r : ranked) {
        std::cout << r.article << " " << static_cast<std::size_t>(r.score) << "\n";
      }
    } else if (filter->parsed()) {
      std::set<std::string> inc;
      std::set<std::string> exc;
      for (const auto& t : split_csv(include)) inc.insert(state->canonical_tag(t));
      for (const auto& t : split_csv(exclude)) exc.insert(state->canonical_tag(t));
      for (const auto& id : nav.filter_articles(inc, exc)) std::cout << id << "\n";
    } else if (serve->parsed()) {
      if (const char* env = std::getenv("TAGNAV_ADDR"); env != nullptr && *env != '\0') addr = env;
      const Address address = parse_address(addr);
      Service service(state);
      HttpServer server(service);
      std::cerr << "serving generation " << state->generation << " on " << address.host << ":"
                << address.port << "\n";
      server.run(address);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
