#include "tagnav/corpus.h"

#include <json.hpp>

#include "io_util.h"
#include "tagnav/error.h"
#include "unicode.h"

namespace tagnav {

using nlohmann::json;

void ArticleSet::insert(Article article) {
  if (article.id.empty()) {
    throw Error(ErrorCode::InvalidArgument, "article id must be non-empty");
  }
  auto [it, inserted] = articles_.try_emplace(article.id, std::move(article));
  if (!inserted) {
    throw Error(ErrorCode::DuplicateId, "duplicate article id: " + it->first);
  }
}

const Article* ArticleSet::find(std::string_view id) const {
  auto it = articles_.find(id);
  return it == articles_.end() ? nullptr : &it->second;
}

TermSequence tokenize(std::string_view text) {
  TermSequence terms;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = unicode::decode_next(text, pos);
    if (unicode::is_alnum(cp)) {
      unicode::append_utf8(current, unicode::fold_case(cp));
    } else if (!current.empty()) {
      terms.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) terms.push_back(std::move(current));
  return terms;
}

ValidationReport validate(const ArticleSet& set) {
  ValidationReport report;
  for (const auto& [id, article] : set) {
    for (const auto& link : article.links) {
      if (!set.contains(link)) ++report.dangling_links;
    }
    if (article.content.empty()) ++report.empty_content;
    if (article.title.empty()) ++report.empty_title;
  }
  return report;
}

namespace {

std::vector<std::string> string_list(const json& obj, const char* key) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw std::invalid_argument(std::string(key) + " must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  return it->get<std::string>();
}

}  // namespace

ArticleSet parse_articles(std::string_view jsonl, const std::string& source) {
  ArticleSet set;
  const auto lines = detail::split_lines(jsonl);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::is_blank(lines[i])) continue;
    Article article;
    try {
      const json obj = json::parse(lines[i]);
      if (!obj.is_object()) throw std::invalid_argument("expected a JSON object");
      article.id = optional_string(obj, "id");
      if (article.id.empty()) throw std::invalid_argument("missing id");
      article.title = optional_string(obj, "title");
      article.content = optional_string(obj, "content");
      article.categories = string_list(obj, "categories");
      article.links = string_list(obj, "links");
    } catch (const json::exception& e) {
      throw MalformedLineError(source, i + 1, e.what());
    } catch (const std::invalid_argument& e) {
      throw MalformedLineError(source, i + 1, e.what());
    }
    set.insert(std::move(article));
  }
  return set;
}

ArticleSet load_articles(const std::filesystem::path& path) {
  return parse_articles(detail::read_file(path), path.string());
}

std::string serialize_articles(const ArticleSet& set) {
  std::string out;
  for (const auto& [id, a] : set) {
    json obj = {{"id", a.id},
                {"title", a.title},
                {"content", a.content},
                {"categories", a.categories},
                {"links", a.links}};
    out += obj.dump();
    out += '\n';
  }
  return out;
}

void save_articles(const ArticleSet& set, const std::filesystem::path& path) {
  detail::write_file(path, serialize_articles(set));
}

}  // namespace tagnav
