#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tagnav {

struct Article {
  std::string id;
  std::string title;
  std::string content;
  std::vector<std::string> categories;
  std::vector<std::string> links;

  bool operator==(const Article&) const = default;
};

// Id-keyed, id-ordered collection of articles. Immutable once loaded.
class ArticleSet {
 public:
  using Map = std::map<std::string, Article, std::less<>>;
  using const_iterator = Map::const_iterator;

  // Throws Error(DuplicateId) if the id is already present, Error(InvalidArgument)
  // for an empty id.
  void insert(Article article);

  const Article* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }

  const_iterator begin() const { return articles_.begin(); }
  const_iterator end() const { return articles_.end(); }

  bool operator==(const ArticleSet&) const = default;

 private:
  Map articles_;
};

using TermSequence = std::vector<std::string>;

// Case-folds and splits on every maximal run of non-alphanumeric code points.
TermSequence tokenize(std::string_view text);

struct ValidationReport {
  std::size_t dangling_links = 0;
  std::size_t empty_content = 0;
  std::size_t empty_title = 0;

  bool operator==(const ValidationReport&) const = default;
};

ValidationReport validate(const ArticleSet& set);

// articles.jsonl: {"id", "title", "content", "categories": [..], "links": [..]}
// per line. Blank lines are skipped.
ArticleSet load_articles(const std::filesystem::path& path);
ArticleSet parse_articles(std::string_view jsonl, const std::string& source = "<memory>");
void save_articles(const ArticleSet& set, const std::filesystem::path& path);
std::string serialize_articles(const ArticleSet& set);

}  // namespace tagnav
