#include "tagnav/search_index.h"

#include <algorithm>
#include <cmath>

#include "tagnav/error.h"

namespace tagnav {

std::string_view field_name(Field f) {
  switch (f) {
    case Field::Title: return "title";
    case Field::Content: return "content";
    case Field::Categories: return "categories";
    case Field::Tags: return "tags";
  }
  return "";
}

void FieldConfig::validate() const {
  if (std::none_of(enabled.begin(), enabled.end(), [](bool b) { return b; })) {
    throw Error(ErrorCode::InvalidArgument, "at least one search field must be enabled");
  }
  for (double w : weight) {
    if (!(w > 0)) throw Error(ErrorCode::InvalidArgument, "field weights must be positive");
  }
}

FieldConfig FieldConfig::parse(std::string_view fields) {
  FieldConfig cfg;
  cfg.enabled.fill(false);
  std::size_t start = 0;
  while (start <= fields.size()) {
    auto end = fields.find(',', start);
    if (end == std::string_view::npos) end = fields.size();
    auto name = fields.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      bool known = false;
      for (Field f : kAllFields) {
        if (field_name(f) == name) {
          cfg.enabled[static_cast<std::size_t>(f)] = true;
          known = true;
        }
      }
      if (!known) {
        throw Error(ErrorCode::InvalidArgument, "unknown field: " + std::string(name));
      }
    }
    start = end + 1;
  }
  cfg.validate();
  return cfg;
}

Index Index::build(const ArticleSet& articles, const TagLists& lists, const FieldConfig& config) {
  config.validate();
  Index index;
  index.config_ = config;
  index.doc_ids_.reserve(articles.size());

  auto add = [&](Field f, std::uint32_t doc, const std::string& term, std::uint32_t tf) {
    auto& plist = index.fields_[static_cast<std::size_t>(f)][term];
    if (!plist.empty() && plist.back().doc == doc) {
      plist.back().tf += tf;
    } else {
      plist.push_back({doc, tf});
    }
  };

  // Articles iterate in id order, so postings come out sorted by doc.
  for (const auto& [id, article] : articles) {
    const auto doc = static_cast<std::uint32_t>(index.doc_ids_.size());
    index.doc_ids_.push_back(id);
    for (const auto& t : tokenize(article.title)) add(Field::Title, doc, t, 1);
    for (const auto& t : tokenize(article.content)) add(Field::Content, doc, t, 1);
    for (const auto& c : article.categories) {
      for (const auto& t : tokenize(c)) add(Field::Categories, doc, t, 1);
    }
    if (auto it = lists.find(id); it != lists.end()) {
      for (const auto& [tag, w] : it->second.weights) {
        for (const auto& t : tokenize(tag)) add(Field::Tags, doc, t, static_cast<std::uint32_t>(w));
      }
    }
  }

  std::unordered_map<std::string, std::vector<std::uint32_t>> docs_per_term;
  for (Field f : kAllFields) {
    if (!config.is_enabled(f)) continue;
    for (const auto& [term, plist] : index.fields_[static_cast<std::size_t>(f)]) {
      auto& docs = docs_per_term[term];
      for (const auto& p : plist) docs.push_back(p.doc);
    }
  }
  for (auto& [term, docs] : docs_per_term) {
    std::sort(docs.begin(), docs.end());
    docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
    index.df_.emplace(term, static_cast<std::uint32_t>(docs.size()));
  }
  for (Field f : kAllFields) {
    if (!config.is_enabled(f)) index.fields_[static_cast<std::size_t>(f)].clear();
  }
  return index;
}

std::size_t Index::df(std::string_view term) const {
  auto it = df_.find(std::string(term));
  return it == df_.end() ? 0 : it->second;
}

double Index::idf(std::string_view term) const {
  const double n = static_cast<double>(doc_count());
  return std::log((n + 1.0) / (static_cast<double>(df(term)) + 1.0)) + 1.0;
}

const std::vector<Posting>* Index::postings(Field f, std::string_view term) const {
  const auto& map = fields_[static_cast<std::size_t>(f)];
  auto it = map.find(std::string(term));
  return it == map.end() ? nullptr : &it->second;
}

std::vector<SearchResult> Index::search(std::string_view query, const FieldConfig& config) const {
  const TermSequence terms = tokenize(query);
  if (terms.empty()) throw Error(ErrorCode::EmptyQuery, "query has no searchable terms");
  config.validate();

  std::vector<double> scores(doc_count(), 0.0);
  std::map<std::uint32_t, std::map<std::string, std::vector<Field>>> matches;
  for (const auto& q : terms) {
    const double q_idf = idf(q);
    for (Field f : kAllFields) {
      if (!config.is_enabled(f) || !config_.is_enabled(f)) continue;
      const auto* plist = postings(f, q);
      if (plist == nullptr) continue;
      for (const auto& p : *plist) {
        scores[p.doc] += config.weight_of(f) * p.tf * q_idf;
        auto& fields = matches[p.doc][q];
        if (std::find(fields.begin(), fields.end(), f) == fields.end()) fields.push_back(f);
      }
    }
  }

  std::vector<SearchResult> results;
  for (auto& [doc, fields] : matches) {
    if (scores[doc] <= 0) continue;
    results.push_back({doc_ids_[doc], scores[doc], std::move(fields)});
  }
  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.article < b.article;
  });
  return results;
}

Explanation Index::explain(std::string_view article, std::string_view term) const {
  auto it = std::lower_bound(doc_ids_.begin(), doc_ids_.end(), article);
  if (it == doc_ids_.end() || *it != article) {
    throw Error(ErrorCode::UnknownArticle, "unknown article: " + std::string(article));
  }
  const auto doc = static_cast<std::uint32_t>(it - doc_ids_.begin());
  Explanation ex;
  const TermSequence folded = tokenize(term);
  if (folded.size() != 1) return ex;  // only single tokens are index terms
  for (Field f : kAllFields) {
    const auto* plist = postings(f, folded.front());
    if (plist == nullptr) continue;
    auto p = std::lower_bound(plist->begin(), plist->end(), doc,
                              [](const Posting& x, std::uint32_t d) { return x.doc < d; });
    if (p != plist->end() && p->doc == doc) {
      ex.tf[static_cast<std::size_t>(f)] = p->tf;
      ex.fields.push_back(f);
    }
  }
  return ex;
}

}  // namespace tagnav
