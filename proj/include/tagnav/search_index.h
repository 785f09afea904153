#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tagnav/corpus.h"
#include "tagnav/tag_store.h"

namespace tagnav {

enum class Field : std::uint8_t { Title = 0, Content = 1, Categories = 2, Tags = 3 };
inline constexpr std::size_t kFieldCount = 4;
inline constexpr std::array<Field, kFieldCount> kAllFields = {Field::Title, Field::Content,
                                                              Field::Categories, Field::Tags};

std::string_view field_name(Field f);

struct FieldConfig {
  std::array<bool, kFieldCount> enabled{true, true, true, true};
  std::array<double, kFieldCount> weight{2.0, 1.0, 1.5, 1.5};

  bool is_enabled(Field f) const { return enabled[static_cast<std::size_t>(f)]; }
  double weight_of(Field f) const { return weight[static_cast<std::size_t>(f)]; }

  // Throws Error(InvalidArgument) if no field is enabled or a weight is not positive.
  void validate() const;

  // Default weights with only the listed fields enabled, e.g. "content,tags".
  static FieldConfig parse(std::string_view fields);
};

struct Posting {
  std::uint32_t doc;
  std::uint32_t tf;
};

struct SearchResult {
  std::string article;
  double score = 0;
  // query term -> fields in which it matched
  std::map<std::string, std::vector<Field>> matched_fields;
};

struct Explanation {
  std::array<std::uint32_t, kFieldCount> tf{};
  std::vector<Field> fields;  // fields with tf > 0

  std::uint32_t tf_of(Field f) const { return tf[static_cast<std::size_t>(f)]; }
};

// Field-separated inverted index. Tag tokens carry the tag's user-count weight
// as their frequency. Document frequency counts articles containing the term
// in any field enabled at build time and stays fixed for every query.
class Index {
 public:
  static Index build(const ArticleSet& articles, const TagLists& lists,
                     const FieldConfig& config = {});

  // Disjunctive tf-idf over the fields enabled in both `config` and the index.
  // Throws Error(EmptyQuery) if the query has no terms.
  std::vector<SearchResult> search(std::string_view query, const FieldConfig& config) const;

  // Per-field frequency of a single term for one article. Throws
  // Error(UnknownArticle).
  Explanation explain(std::string_view article, std::string_view term) const;

  std::size_t doc_count() const { return doc_ids_.size(); }
  std::size_t df(std::string_view term) const;
  double idf(std::string_view term) const;
  const FieldConfig& config() const { return config_; }

  // Postings of `term` in one field, sorted by document.
  const std::vector<Posting>* postings(Field f, std::string_view term) const;
  const std::string& doc_id(std::uint32_t doc) const { return doc_ids_[doc]; }

 private:
  using PostingMap = std::unordered_map<std::string, std::vector<Posting>>;

  FieldConfig config_;
  std::vector<std::string> doc_ids_;  // sorted
  std::array<PostingMap, kFieldCount> fields_;
  std::unordered_map<std::string, std::uint32_t> df_;
};

}  // namespace tagnav
