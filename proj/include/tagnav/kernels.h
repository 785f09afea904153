#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used in
// production and a serial reference that the tests hold it to.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tagnav/corpus.h"
#include "tagnav/tag_store.h"

namespace tagnav::kernels {

enum class Execution { Serial, Parallel };

// Tags interned to dense ids (ids follow sorted tag order) and, per article,
// the sorted ids of its tags.
struct TagIncidence {
  std::vector<std::string> tags;
  std::vector<std::string> articles;
  std::vector<std::vector<std::uint32_t>> article_tags;
};

TagIncidence make_incidence(const TagLists& lists);

// Row t lists (other tag id, number of articles holding both), ascending by id.
using CooccurrenceRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::vector<CooccurrenceRow> cooccurrence_serial(const TagIncidence& incidence);
std::vector<CooccurrenceRow> cooccurrence_parallel(const TagIncidence& incidence);
std::vector<CooccurrenceRow> cooccurrence(const TagIncidence& incidence, Execution exec);

struct ArticlePresence {
  std::string article;
  std::size_t tag_count = 0;
  std::size_t found_document = 0;
  std::size_t found_content = 0;
  std::size_t found_categories = 0;

  bool operator==(const ArticlePresence&) const = default;
};

// One record per tagged article, in article id order. Throws
// Error(MissingArticle) if a tag list names an article not in `articles`.
std::vector<ArticlePresence> presence_serial(const ArticleSet& articles, const TagLists& lists);
std::vector<ArticlePresence> presence_parallel(const ArticleSet& articles, const TagLists& lists);
std::vector<ArticlePresence> presence(const ArticleSet& articles, const TagLists& lists,
                                      Execution exec);

}  // namespace tagnav::kernels
