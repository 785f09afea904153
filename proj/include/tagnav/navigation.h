#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tagnav/corpus.h"
#include "tagnav/kernels.h"
#include "tagnav/tag_store.h"

namespace tagnav {

inline constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

struct RelatedTag {
  std::string tag;
  std::size_t cooccurrence = 0;

  bool operator==(const RelatedTag&) const = default;
};

struct RankedArticle {
  std::string article;
  double score = 0;

  bool operator==(const RankedArticle&) const = default;
};

// Read-only tag, category and link navigation over one build of the corpus.
// All tag arguments are expected in canonical form.
class Navigator {
 public:
  Navigator(const ArticleSet& articles, const TagLists& lists,
            kernels::Execution exec = kernels::Execution::Parallel);

  // Co-occurring tags, count desc then tag asc.
  std::vector<RelatedTag> pivot(const std::string& tag, std::size_t n = kAll) const;

  // Articles carrying `tag`, weight desc then id asc.
  std::vector<RankedArticle> articles_with_tag(const std::string& tag,
                                               std::size_t n = kAll) const;

  // The subset of articles_with_tag where `tag` ties the article's top weight.
  std::vector<RankedArticle> popular(const std::string& tag, std::size_t n = kAll) const;

  // Articles holding every include tag and no exclude tag, in id order.
  // Throws Error(EmptyFilter) or Error(ConflictingFilter).
  std::vector<std::string> filter_articles(const std::set<std::string>& include,
                                           const std::set<std::string>& exclude) const;

  // Case-insensitive, trimmed category name match, in id order.
  std::vector<std::string> category_members(std::string_view category) const;

  // Resolved links in original order. Throws Error(UnknownArticle).
  std::vector<std::string> linked_articles(const std::string& article) const;

  std::size_t annotated_articles() const { return lists_.size(); }
  std::size_t distinct_tags() const { return incidence_.tags.size(); }

 private:
  const WeightedTagList* list(const std::string& article) const;

  const ArticleSet* articles_;
  TagLists lists_;
  kernels::TagIncidence incidence_;
  std::map<std::string, std::uint32_t, std::less<>> tag_ids_;
  std::vector<kernels::CooccurrenceRow> cooccurrence_;
  std::vector<std::vector<std::string>> tag_articles_;  // tag id -> article ids (sorted)
  std::map<std::string, std::vector<std::string>, std::less<>> categories_;
};

// Category key used for matching: trimmed and case-folded.
std::string category_key(std::string_view name);

}  // namespace tagnav
