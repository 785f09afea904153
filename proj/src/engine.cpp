#include "tagnav/engine.h"

#include <set>

#include "tagnav/error.h"

namespace tagnav {

std::string EngineState::canonical_tag(std::string_view raw) const {
  return graph.canonical(normalize(raw));
}

std::shared_ptr<const EngineState> build_engine(const BuildOptions& options,
                                                std::uint64_t generation) {
  auto state = std::make_shared<EngineState>();
  state->generation = generation;
  state->options = options;
  state->built_at = std::chrono::system_clock::now();
  auto& report = state->report;

  state->articles = load_articles(options.articles_path);
  report.articles = state->articles.size();
  report.dangling_links = validate(state->articles).dangling_links;

  AssignmentSet raw = import_assignments(options.tags_path);
  report.raw_assignments = raw.size();
  std::erase_if(raw, [&](const TagAssignment& a) { return !state->articles.contains(a.article); });
  report.unmatched_assignments = report.raw_assignments - raw.size();

  AssignmentSet cleaned = apply_blacklist(raw, options.blacklist);
  report.after_blacklist = cleaned.size();
  cleaned = prune_min_annotators(cleaned, options.min_users);
  report.after_threshold = cleaned.size();

  std::vector<TagRelation> relations;
  if (options.relations_path) relations = load_relations(*options.relations_path);
  relations.insert(relations.end(), options.extra_relations.begin(), options.extra_relations.end());
  for (const auto& [a, b] : relations) state->graph.relate(a, b);
  report.relations = relations.size();
  record_usage(state->graph, cleaned);

  report.deduplicated = deduplicate(cleaned, state->graph).size();
  state->assignments = std::move(cleaned);
  state->taglists = aggregate(state->assignments, state->graph);
  state->global = global_weights(state->taglists);
  report.tagged_articles = state->taglists.size();
  report.distinct_tags = state->global.size();

  state->navigator = std::make_unique<Navigator>(state->articles, state->taglists);
  state->index = Index::build(state->articles, state->taglists, options.index_fields);

  const auto per_article = kernels::presence(state->articles, state->taglists,
                                             kernels::Execution::Parallel);
  state->presence = summarize_presence(per_article);
  state->curve = summarize_curve(per_article);
  return state;
}

std::string format_report(const BuildReport& r) {
  std::string out;
  auto line = [&](const char* key, std::size_t v) {
    out += key;
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  };
  line("articles", r.articles);
  line("dangling_links", r.dangling_links);
  line("raw_assignments", r.raw_assignments);
  line("unmatched_assignments", r.unmatched_assignments);
  line("after_blacklist", r.after_blacklist);
  line("after_threshold", r.after_threshold);
  line("deduplicated", r.deduplicated);
  line("tagged_articles", r.tagged_articles);
  line("distinct_tags", r.distinct_tags);
  line("relations", r.relations);
  return out;
}

}  // namespace tagnav
