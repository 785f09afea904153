#include "tagnav/kernels.h"

#include <algorithm>
#include <map>

#include "tagnav/analytics.h"
#include "tagnav/error.h"

namespace tagnav::kernels {

TagIncidence make_incidence(const TagLists& lists) {
  TagIncidence inc;
  std::map<std::string, std::uint32_t> ids;
  for (const auto& [article, list] : lists) {
    for (const auto& [tag, w] : list.weights) ids.emplace(tag, 0);
  }
  inc.tags.reserve(ids.size());
  for (auto& [tag, id] : ids) {
    id = static_cast<std::uint32_t>(inc.tags.size());
    inc.tags.push_back(tag);
  }
  for (const auto& [article, list] : lists) {
    inc.articles.push_back(article);
    auto& row = inc.article_tags.emplace_back();
    // weights is ordered by tag, so ids come out sorted
    for (const auto& [tag, w] : list.weights) row.push_back(ids.at(tag));
  }
  return inc;
}

std::vector<CooccurrenceRow> cooccurrence_serial(const TagIncidence& inc) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pairs;
  for (const auto& tags : inc.article_tags) {
    for (std::size_t i = 0; i < tags.size(); ++i) {
      for (std::size_t j = i + 1; j < tags.size(); ++j) {
        ++pairs[{tags[i], tags[j]}];
      }
    }
  }
  std::vector<CooccurrenceRow> rows(inc.tags.size());
  for (const auto& [pair, count] : pairs) {
    rows[pair.first].emplace_back(pair.second, count);
    rows[pair.second].emplace_back(pair.first, count);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return rows;
}

std::vector<CooccurrenceRow> cooccurrence_parallel(const TagIncidence& inc) {
  const std::size_t num_tags = inc.tags.size();
  std::vector<std::vector<std::uint32_t>> postings(num_tags);
  for (std::size_t a = 0; a < inc.article_tags.size(); ++a) {
    for (auto t : inc.article_tags[a]) postings[t].push_back(static_cast<std::uint32_t>(a));
  }

  std::vector<CooccurrenceRow> rows(num_tags);
  const auto n = static_cast<std::int64_t>(num_tags);
#pragma omp parallel
  {
    std::vector<std::uint32_t> counts(num_tags, 0);
    std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < n; ++t) {
      const auto self = static_cast<std::uint32_t>(t);
      for (auto a : postings[self]) {
        for (auto other : inc.article_tags[a]) {
          if (other == self) continue;
          if (counts[other]++ == 0) touched.push_back(other);
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = rows[self];
      row.reserve(touched.size());
      for (auto other : touched) {
        row.emplace_back(other, counts[other]);
        counts[other] = 0;
      }
      touched.clear();
    }
  }
  return rows;
}

std::vector<CooccurrenceRow> cooccurrence(const TagIncidence& inc, Execution exec) {
  return exec == Execution::Parallel ? cooccurrence_parallel(inc) : cooccurrence_serial(inc);
}

namespace {

struct ArticleText {
  TermSequence title;
  TermSequence content;
  std::vector<TermSequence> categories;
};

ArticleText tokenize_article(const Article& a) {
  ArticleText text{tokenize(a.title), tokenize(a.content), {}};
  text.categories.reserve(a.categories.size());
  for (const auto& c : a.categories) text.categories.push_back(tokenize(c));
  return text;
}

ArticlePresence scan_article(const Article& article, const WeightedTagList& list) {
  const ArticleText text = tokenize_article(article);
  ArticlePresence p{list.article, list.weights.size(), 0, 0, 0};
  for (const auto& [tag, w] : list.weights) {
    const TermSequence needle = tokenize(tag);
    const bool in_title = contains_sequence(needle, text.title);
    const bool in_content = contains_sequence(needle, text.content);
    const bool in_categories =
        std::any_of(text.categories.begin(), text.categories.end(),
                    [&](const TermSequence& c) { return contains_sequence(needle, c); });
    p.found_content += in_content;
    p.found_categories += in_categories;
    p.found_document += (in_title || in_content || in_categories);
  }
  return p;
}

std::vector<std::pair<const Article*, const WeightedTagList*>> resolve(
    const ArticleSet& articles, const TagLists& lists) {
  std::vector<std::pair<const Article*, const WeightedTagList*>> work;
  work.reserve(lists.size());
  for (const auto& [id, list] : lists) {
    const Article* a = articles.find(id);
    if (a == nullptr) {
      throw Error(ErrorCode::MissingArticle, "tagged article not in corpus: " + id);
    }
    work.emplace_back(a, &list);
  }
  return work;
}

}  // namespace

std::vector<ArticlePresence> presence_serial(const ArticleSet& articles, const TagLists& lists) {
  std::vector<ArticlePresence> out;
  for (const auto& [article, list] : resolve(articles, lists)) {
    out.push_back(scan_article(*article, *list));
  }
  return out;
}

std::vector<ArticlePresence> presence_parallel(const ArticleSet& articles, const TagLists& lists) {
  const auto work = resolve(articles, lists);
  std::vector<ArticlePresence> out(work.size());
  const auto n = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = scan_article(*work[i].first, *work[i].second);
  }
  return out;
}

std::vector<ArticlePresence> presence(const ArticleSet& articles, const TagLists& lists,
                                      Execution exec) {
  return exec == Execution::Parallel ? presence_parallel(articles, lists)
                                     : presence_serial(articles, lists);
}

}  // namespace tagnav::kernels
