#include "tagnav/navigation.h"

#include <algorithm>

#include "tagnav/error.h"
#include "unicode.h"

namespace tagnav {

std::string category_key(std::string_view name) {
  std::string folded;
  std::size_t pos = 0;
  while (pos < name.size()) {
    unicode::append_utf8(folded, unicode::fold_case(unicode::decode_next(name, pos)));
  }
  const auto first = folded.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = folded.find_last_not_of(" \t\r\n");
  return folded.substr(first, last - first + 1);
}

Navigator::Navigator(const ArticleSet& articles, const TagLists& lists, kernels::Execution exec)
    : articles_(&articles), lists_(lists), incidence_(kernels::make_incidence(lists)) {
  for (std::size_t i = 0; i < incidence_.tags.size(); ++i) {
    tag_ids_.emplace(incidence_.tags[i], static_cast<std::uint32_t>(i));
  }
  cooccurrence_ = kernels::cooccurrence(incidence_, exec);
  tag_articles_.resize(incidence_.tags.size());
  for (std::size_t a = 0; a < incidence_.articles.size(); ++a) {
    for (auto t : incidence_.article_tags[a]) tag_articles_[t].push_back(incidence_.articles[a]);
  }
  for (const auto& [id, article] : articles) {
    for (const auto& c : article.categories) {
      auto& members = categories_[category_key(c)];
      if (members.empty() || members.back() != id) members.push_back(id);
    }
  }
}

const WeightedTagList* Navigator::list(const std::string& article) const {
  auto it = lists_.find(article);
  return it == lists_.end() ? nullptr : &it->second;
}

std::vector<RelatedTag> Navigator::pivot(const std::string& tag, std::size_t n) const {
  auto it = tag_ids_.find(tag);
  if (it == tag_ids_.end()) return {};
  std::vector<RelatedTag> out;
  for (const auto& [other, count] : cooccurrence_[it->second]) {
    out.push_back({incidence_.tags[other], count});
  }
  // ids follow tag order, so stable sort leaves ties alphabetical
  std::stable_sort(out.begin(), out.end(), [](const RelatedTag& a, const RelatedTag& b) {
    return a.cooccurrence > b.cooccurrence;
  });
  if (out.size() > n) out.resize(n);
  return out;
}

namespace {

void rank(std::vector<RankedArticle>& items, std::size_t n) {
  std::sort(items.begin(), items.end(), [](const RankedArticle& a, const RankedArticle& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.article < b.article;
  });
  if (items.size() > n) items.resize(n);
}

}  // namespace

std::vector<RankedArticle> Navigator::articles_with_tag(const std::string& tag,
                                                        std::size_t n) const {
  auto it = tag_ids_.find(tag);
  if (it == tag_ids_.end()) return {};
  std::vector<RankedArticle> out;
  for (const auto& id : tag_articles_[it->second]) {
    out.push_back({id, static_cast<double>(list(id)->weights.at(tag))});
  }
  rank(out, n);
  return out;
}

std::vector<RankedArticle> Navigator::popular(const std::string& tag, std::size_t n) const {
  auto it = tag_ids_.find(tag);
  if (it == tag_ids_.end()) return {};
  std::vector<RankedArticle> out;
  for (const auto& id : tag_articles_[it->second]) {
    const WeightedTagList* l = list(id);
    const std::size_t w = l->weights.at(tag);
    if (w == l->max_weight()) out.push_back({id, static_cast<double>(w)});
  }
  rank(out, n);
  return out;
}

std::vector<std::string> Navigator::filter_articles(const std::set<std::string>& include,
                                                    const std::set<std::string>& exclude) const {
  if (include.empty() && exclude.empty()) {
    throw Error(ErrorCode::EmptyFilter, "filter needs at least one include or exclude tag");
  }
  for (const auto& t : include) {
    if (exclude.contains(t)) {
      throw Error(ErrorCode::ConflictingFilter, "tag both included and excluded: " + t);
    }
  }
  std::vector<std::string> out;
  for (const auto& [id, l] : lists_) {
    const bool has_all = std::all_of(include.begin(), include.end(),
                                     [&](const std::string& t) { return l.weights.contains(t); });
    const bool has_none = std::none_of(exclude.begin(), exclude.end(),
                                       [&](const std::string& t) { return l.weights.contains(t); });
    if (has_all && has_none) out.push_back(id);
  }
  return out;
}

std::vector<std::string> Navigator::category_members(std::string_view category) const {
  auto it = categories_.find(category_key(category));
  return it == categories_.end() ? std::vector<std::string>{} : it->second;
}

std::vector<std::string> Navigator::linked_articles(const std::string& article) const {
  const Article* a = articles_->find(article);
  if (a == nullptr) throw Error(ErrorCode::UnknownArticle, "unknown article: " + article);
  std::vector<std::string> out;
  for (const auto& link : a->links) {
    if (articles_->contains(link)) out.push_back(link);
  }
  return out;
}

}  // namespace tagnav
