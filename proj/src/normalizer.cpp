#include "tagnav/normalizer.h"

#include <algorithm>
#include <fstream>

#include "io_util.h"
#include "tagnav/error.h"
#include "unicode.h"

namespace tagnav {

std::string normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_separator = false;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const char32_t cp = unicode::decode_next(raw, pos);
    if (cp == '-' || cp == '_' || unicode::is_space(cp)) {
      pending_separator = true;
      continue;
    }
    if (pending_separator && !out.empty()) out.push_back(' ');
    pending_separator = false;
    unicode::append_utf8(out, unicode::fold_case(cp));
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptyTag, "tag is empty after normalization: '" +
                                         std::string(raw) + "'");
  }
  return out;
}

std::size_t SynonymGraph::node(const std::string& tag) {
  auto it = ids_.find(tag);
  if (it != ids_.end()) return it->second;
  const std::size_t id = names_.size();
  ids_.emplace(tag, id);
  names_.push_back(tag);
  parent_.push_back(id);
  usage_.push_back(0);
  members_.push_back({id});
  representative_.push_back(id);
  return id;
}

std::size_t SynonymGraph::root(std::size_t n) const {
  while (parent_[n] != n) n = parent_[n];
  return n;
}

void SynonymGraph::elect(std::size_t r) {
  std::size_t best = r;
  for (std::size_t m : members_[r]) {
    if (usage_[m] > usage_[best] ||
        (usage_[m] == usage_[best] && names_[m] < names_[best])) {
      best = m;
    }
  }
  representative_[r] = best;
}

void SynonymGraph::relate(const std::string& a, const std::string& b) {
  std::size_t ra = root(node(a));
  std::size_t rb = root(node(b));
  if (ra == rb) return;
  if (members_[ra].size() < members_[rb].size()) std::swap(ra, rb);
  parent_[rb] = ra;
  members_[ra].insert(members_[ra].end(), members_[rb].begin(), members_[rb].end());
  members_[rb].clear();
  members_[rb].shrink_to_fit();
  elect(ra);
}

std::string SynonymGraph::canonical(const std::string& tag) const {
  auto it = ids_.find(tag);
  if (it == ids_.end()) return tag;
  return names_[representative_[root(it->second)]];
}

bool SynonymGraph::same_class(const std::string& a, const std::string& b) const {
  return canonical(a) == canonical(b);
}

void SynonymGraph::set_usage(const std::string& tag, std::size_t count) {
  const std::size_t n = node(tag);
  usage_[n] = count;
  elect(root(n));
}

void SynonymGraph::add_usage(const std::string& tag, std::size_t count) {
  const std::size_t n = node(tag);
  usage_[n] += count;
  elect(root(n));
}

std::size_t SynonymGraph::usage(const std::string& tag) const {
  auto it = ids_.find(tag);
  return it == ids_.end() ? 0 : usage_[it->second];
}

std::vector<SynonymClass> SynonymGraph::classes() const {
  std::vector<SynonymClass> out;
  for (std::size_t n = 0; n < names_.size(); ++n) {
    if (parent_[n] != n || members_[n].size() < 2) continue;
    SynonymClass cls;
    cls.representative = names_[representative_[n]];
    for (std::size_t m : members_[n]) cls.members.push_back(names_[m]);
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.representative < y.representative;
  });
  return out;
}

std::vector<TagRelation> parse_relations(std::string_view text, const std::string& source) {
  std::vector<TagRelation> relations;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (detail::is_blank(line)) continue;
    if (line.front() == '#') continue;
    const auto sep = line.find(" = ");
    if (sep == std::string_view::npos) {
      throw MalformedLineError(source, i + 1, "expected 'a = b'");
    }
    try {
      relations.emplace_back(normalize(line.substr(0, sep)), normalize(line.substr(sep + 3)));
    } catch (const Error& e) {
      throw MalformedLineError(source, i + 1, e.what());
    }
  }
  return relations;
}

std::vector<TagRelation> load_relations(const std::filesystem::path& path) {
  return parse_relations(detail::read_file(path), path.string());
}

std::string format_relation(const TagRelation& relation) {
  return relation.first + " = " + relation.second;
}

void append_relation(const std::filesystem::path& path, const TagRelation& relation) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::Io, "cannot append to " + path.string());
  out << format_relation(relation) << '\n';
}

}  // namespace tagnav
