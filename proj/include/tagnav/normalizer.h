#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tagnav {

// Case-folds, trims, and collapses every run of whitespace, '-' and '_' into a
// single space. Idempotent. Throws Error(EmptyTag) when nothing remains.
std::string normalize(std::string_view raw);

using TagRelation = std::pair<std::string, std::string>;

struct SynonymClass {
  std::string representative;
  std::vector<std::string> members;  // sorted

  bool operator==(const SynonymClass&) const = default;
};

// Equivalence classes over normalized tags. Each class elects as its
// representative the member with the highest usage count, ties going to the
// lexicographically smallest member. Tags never seen are singleton classes.
class SynonymGraph {
 public:
  void relate(const std::string& a, const std::string& b);

  std::string canonical(const std::string& tag) const;
  bool same_class(const std::string& a, const std::string& b) const;

  void set_usage(const std::string& tag, std::size_t count);
  void add_usage(const std::string& tag, std::size_t count = 1);
  std::size_t usage(const std::string& tag) const;

  // Non-singleton classes ordered by representative.
  std::vector<SynonymClass> classes() const;

 private:
  std::size_t node(const std::string& tag);
  std::size_t root(std::size_t n) const;
  void elect(std::size_t root);

  std::map<std::string, std::size_t, std::less<>> ids_;
  std::vector<std::string> names_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> usage_;
  std::vector<std::vector<std::size_t>> members_;  // populated on roots only
  std::vector<std::size_t> representative_;        // valid on roots only
};

// relations.txt: "a = b" per line. Blank lines and lines starting with '#'
// are ignored. Both sides are normalized on read.
std::vector<TagRelation> parse_relations(std::string_view text,
                                         const std::string& source = "<memory>");
std::vector<TagRelation> load_relations(const std::filesystem::path& path);
std::string format_relation(const TagRelation& relation);
void append_relation(const std::filesystem::path& path, const TagRelation& relation);

}  // namespace tagnav
