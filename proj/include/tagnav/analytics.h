#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagnav/corpus.h"
#include "tagnav/kernels.h"
#include "tagnav/tag_store.h"

namespace tagnav {

enum class Scope { Document, Content, Categories };

std::string_view scope_name(Scope scope);

// True iff `needle` is non-empty and occurs as a contiguous run of `haystack`.
bool contains_sequence(std::span<const std::string> needle, std::span<const std::string> haystack);

// True iff tokenize(tag) occurs contiguously in `terms`.
bool tag_found_in(std::string_view tag, std::span<const std::string> terms);

// 100 * found / (found + not_found), rounded half-up to two decimals.
// Throws Error(NoPairs) when both counts are zero.
double percent(std::size_t found, std::size_t not_found);

struct ScopeCount {
  std::size_t found = 0;
  std::size_t not_found = 0;

  bool operator==(const ScopeCount&) const = default;
};

// One unit per (article, distinct canonical tag). The document scope is
// title, content and categories together.
struct PresenceStats {
  ScopeCount document;
  ScopeCount content;
  ScopeCount categories;
  std::size_t total_pairs = 0;

  const ScopeCount& scope(Scope s) const;
  // nullopt when there are no pairs
  std::optional<double> percent_found(Scope s) const;

  bool operator==(const PresenceStats&) const = default;
};

PresenceStats presence_stats(const ArticleSet& articles, const TagLists& lists,
                             kernels::Execution exec = kernels::Execution::Parallel);

struct CurveRow {
  std::size_t tag_count = 0;
  std::size_t articles = 0;
  std::size_t pairs = 0;
  double pct_document = 0;
  double pct_content = 0;
  double pct_categories = 0;

  bool operator==(const CurveRow&) const = default;
};

// Articles grouped by their number of distinct tags, ascending.
std::vector<CurveRow> presence_by_tag_count(const ArticleSet& articles, const TagLists& lists,
                                            kernels::Execution exec = kernels::Execution::Parallel);

PresenceStats summarize_presence(const std::vector<kernels::ArticlePresence>& per_article);
std::vector<CurveRow> summarize_curve(const std::vector<kernels::ArticlePresence>& per_article);

struct CloudEntry {
  std::string tag;
  std::size_t weight = 0;
  int font = 0;

  bool operator==(const CloudEntry&) const = default;
};

struct TagCloud {
  std::vector<CloudEntry> entries;  // weight desc, then tag
  int min_font = 0;
  int max_font = 0;
};

// Keeps the top_n heaviest tags and scales fonts logarithmically between the
// lightest and heaviest kept weights. All-equal weights map to max_font.
TagCloud build_cloud(const std::map<std::string, std::size_t>& weights, std::size_t top_n,
                     int min_font, int max_font);

std::string presence_csv(const PresenceStats& stats);
std::string curve_csv(const std::vector<CurveRow>& rows);

}  // namespace tagnav
