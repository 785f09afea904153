#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tagnav/normalizer.h"

namespace tagnav {

// One user assigning one raw tag to one article.
struct TagAssignment {
  std::string user;
  std::string article;
  std::string raw_tag;

  bool operator==(const TagAssignment&) const = default;
};

using AssignmentSet = std::vector<TagAssignment>;

// Per-article canonical tag -> number of distinct users who assigned it.
struct WeightedTagList {
  std::string article;
  std::map<std::string, std::size_t> weights;

  std::size_t max_weight() const;
  bool operator==(const WeightedTagList&) const = default;
};

using TagLists = std::map<std::string, WeightedTagList, std::less<>>;
using GlobalTagWeights = std::map<std::string, std::size_t>;

inline const std::vector<std::string> kDefaultBlacklist = {"wikipedia", "reference", "wiki"};
inline constexpr std::size_t kDefaultMinUsers = 10;

// tags.jsonl: {"user", "article", "tag"} per line; no cleaning applied.
AssignmentSet import_assignments(const std::filesystem::path& path);
AssignmentSet parse_assignments(std::string_view jsonl, const std::string& source = "<memory>");

// Drops assignments whose normalized tag is in the normalized blacklist.
// Order of survivors is preserved.
AssignmentSet apply_blacklist(const AssignmentSet& set, const std::vector<std::string>& blacklist);

// Keeps assignments of articles with at least `k` distinct users in `set`.
AssignmentSet prune_min_annotators(const AssignmentSet& set, std::size_t k);

std::size_t annotator_count(const AssignmentSet& set, std::string_view article);

// One entry per (user, article, canonical tag); first occurrence wins.
AssignmentSet deduplicate(const AssignmentSet& set, const SynonymGraph& graph);

// Adds one usage per assignment to each normalized tag, for representative election.
void record_usage(SynonymGraph& graph, const AssignmentSet& set);

TagLists aggregate(const AssignmentSet& set, const SynonymGraph& graph);

GlobalTagWeights global_weights(const TagLists& lists);

}  // namespace tagnav
