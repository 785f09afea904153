#include "tagnav/tag_store.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "io_util.h"
#include "tagnav/error.h"

namespace tagnav {

using nlohmann::json;

std::size_t WeightedTagList::max_weight() const {
  std::size_t best = 0;
  for (const auto& [tag, w] : weights) best = std::max(best, w);
  return best;
}

namespace {

std::string required_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument(std::string("missing ") + key);
  if (!it->is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  auto value = it->get<std::string>();
  if (detail::is_blank(value)) throw std::invalid_argument(std::string(key) + " is empty");
  return value;
}

}  // namespace

AssignmentSet parse_assignments(std::string_view jsonl, const std::string& source) {
  AssignmentSet set;
  const auto lines = detail::split_lines(jsonl);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::is_blank(lines[i])) continue;
    try {
      const json obj = json::parse(lines[i]);
      if (!obj.is_object()) throw std::invalid_argument("expected a JSON object");
      TagAssignment a{required_field(obj, "user"), required_field(obj, "article"),
                      required_field(obj, "tag")};
      normalize(a.raw_tag);  // reject tags made only of separators
      set.push_back(std::move(a));
    } catch (const json::exception& e) {
      throw MalformedLineError(source, i + 1, e.what());
    } catch (const std::invalid_argument& e) {
      throw MalformedLineError(source, i + 1, e.what());
    } catch (const Error& e) {
      throw MalformedLineError(source, i + 1, e.what());
    }
  }
  return set;
}

AssignmentSet import_assignments(const std::filesystem::path& path) {
  return parse_assignments(detail::read_file(path), path.string());
}

AssignmentSet apply_blacklist(const AssignmentSet& set, const std::vector<std::string>& blacklist) {
  std::unordered_set<std::string> banned;
  for (const auto& b : blacklist) banned.insert(normalize(b));
  AssignmentSet out;
  out.reserve(set.size());
  for (const auto& a : set) {
    if (!banned.contains(normalize(a.raw_tag))) out.push_back(a);
  }
  return out;
}

namespace {

std::unordered_map<std::string, std::size_t> annotators_per_article(const AssignmentSet& set) {
  std::unordered_map<std::string, std::unordered_set<std::string>> users;
  for (const auto& a : set) users[a.article].insert(a.user);
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& [article, u] : users) counts.emplace(article, u.size());
  return counts;
}

}  // namespace

AssignmentSet prune_min_annotators(const AssignmentSet& set, std::size_t k) {
  if (k == 0) return set;
  const auto counts = annotators_per_article(set);
  AssignmentSet out;
  for (const auto& a : set) {
    if (counts.at(a.article) >= k) out.push_back(a);
  }
  return out;
}

std::size_t annotator_count(const AssignmentSet& set, std::string_view article) {
  std::unordered_set<std::string_view> users;
  for (const auto& a : set) {
    if (a.article == article) users.insert(a.user);
  }
  return users.size();
}

AssignmentSet deduplicate(const AssignmentSet& set, const SynonymGraph& graph) {
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  AssignmentSet out;
  for (const auto& a : set) {
    if (seen.emplace(a.user, a.article, graph.canonical(normalize(a.raw_tag))).second) {
      out.push_back(a);
    }
  }
  return out;
}

void record_usage(SynonymGraph& graph, const AssignmentSet& set) {
  std::map<std::string, std::size_t> counts;
  for (const auto& a : set) ++counts[normalize(a.raw_tag)];
  for (const auto& [tag, n] : counts) graph.add_usage(tag, n);
}

TagLists aggregate(const AssignmentSet& set, const SynonymGraph& graph) {
  // article -> canonical tag -> users
  std::map<std::string, std::map<std::string, std::set<std::string>>> users;
  for (const auto& a : set) {
    users[a.article][graph.canonical(normalize(a.raw_tag))].insert(a.user);
  }
  TagLists lists;
  for (auto& [article, tags] : users) {
    WeightedTagList list{article, {}};
    for (const auto& [tag, u] : tags) list.weights.emplace(tag, u.size());
    lists.emplace(article, std::move(list));
  }
  return lists;
}

GlobalTagWeights global_weights(const TagLists& lists) {
  GlobalTagWeights out;
  for (const auto& [article, list] : lists) {
    for (const auto& [tag, w] : list.weights) out[tag] += w;
  }
  return out;
}

}  // namespace tagnav
