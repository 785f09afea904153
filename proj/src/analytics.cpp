#include "tagnav/analytics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tagnav/error.h"

namespace tagnav {

std::string_view scope_name(Scope scope) {
  switch (scope) {
    case Scope::Document: return "document";
    case Scope::Content: return "content";
    case Scope::Categories: return "categories";
  }
  return "";
}

bool contains_sequence(std::span<const std::string> needle,
                       std::span<const std::string> haystack) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

bool tag_found_in(std::string_view tag, std::span<const std::string> terms) {
  const TermSequence needle = tokenize(tag);
  return contains_sequence(needle, terms);
}

double percent(std::size_t found, std::size_t not_found) {
  const std::size_t total = found + not_found;
  if (total == 0) throw Error(ErrorCode::NoPairs, "percent of zero pairs is undefined");
  // integer arithmetic keeps the half-up rounding exact
  const unsigned long long scaled = (20000ULL * found + total) / (2ULL * total);
  return static_cast<double>(scaled) / 100.0;
}

const ScopeCount& PresenceStats::scope(Scope s) const {
  switch (s) {
    case Scope::Content: return content;
    case Scope::Categories: return categories;
    case Scope::Document: break;
  }
  return document;
}

std::optional<double> PresenceStats::percent_found(Scope s) const {
  if (total_pairs == 0) return std::nullopt;
  const auto& c = scope(s);
  return percent(c.found, c.not_found);
}

PresenceStats summarize_presence(const std::vector<kernels::ArticlePresence>& per_article) {
  PresenceStats s;
  for (const auto& p : per_article) {
    s.total_pairs += p.tag_count;
    s.document.found += p.found_document;
    s.content.found += p.found_content;
    s.categories.found += p.found_categories;
  }
  s.document.not_found = s.total_pairs - s.document.found;
  s.content.not_found = s.total_pairs - s.content.found;
  s.categories.not_found = s.total_pairs - s.categories.found;
  return s;
}

std::vector<CurveRow> summarize_curve(const std::vector<kernels::ArticlePresence>& per_article) {
  struct Group {
    std::size_t articles = 0;
    std::size_t pairs = 0;
    std::size_t document = 0;
    std::size_t content = 0;
    std::size_t categories = 0;
  };
  std::map<std::size_t, Group> groups;
  for (const auto& p : per_article) {
    if (p.tag_count == 0) continue;
    auto& g = groups[p.tag_count];
    ++g.articles;
    g.pairs += p.tag_count;
    g.document += p.found_document;
    g.content += p.found_content;
    g.categories += p.found_categories;
  }
  std::vector<CurveRow> rows;
  rows.reserve(groups.size());
  for (const auto& [count, g] : groups) {
    rows.push_back({count, g.articles, g.pairs, percent(g.document, g.pairs - g.document),
                    percent(g.content, g.pairs - g.content),
                    percent(g.categories, g.pairs - g.categories)});
  }
  return rows;
}

PresenceStats presence_stats(const ArticleSet& articles, const TagLists& lists,
                             kernels::Execution exec) {
  return summarize_presence(kernels::presence(articles, lists, exec));
}

std::vector<CurveRow> presence_by_tag_count(const ArticleSet& articles, const TagLists& lists,
                                            kernels::Execution exec) {
  return summarize_curve(kernels::presence(articles, lists, exec));
}

TagCloud build_cloud(const std::map<std::string, std::size_t>& weights, std::size_t top_n,
                     int min_font, int max_font) {
  if (min_font > max_font) {
    throw Error(ErrorCode::InvalidArgument, "min_font must not exceed max_font");
  }
  if (top_n == 0) throw Error(ErrorCode::InvalidArgument, "top_n must be at least 1");

  TagCloud cloud{{}, min_font, max_font};
  for (const auto& [tag, w] : weights) {
    if (w > 0) cloud.entries.push_back({tag, w, 0});
  }
  // weights iterate in tag order, so a stable sort keeps ties alphabetical
  std::stable_sort(cloud.entries.begin(), cloud.entries.end(),
                   [](const CloudEntry& a, const CloudEntry& b) { return a.weight > b.weight; });
  if (cloud.entries.size() > top_n) cloud.entries.resize(top_n);
  if (cloud.entries.empty()) return cloud;

  const double w_max = static_cast<double>(cloud.entries.front().weight);
  const double w_min = static_cast<double>(cloud.entries.back().weight);
  const double span = std::log(w_max) - std::log(w_min);
  for (auto& e : cloud.entries) {
    if (span <= 0) {
      e.font = max_font;
      continue;
    }
    const double t = (std::log(static_cast<double>(e.weight)) - std::log(w_min)) / span;
    e.font = min_font + static_cast<int>(std::lround((max_font - min_font) * t));
    e.font = std::clamp(e.font, min_font, max_font);
  }
  return cloud;
}

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string presence_csv(const PresenceStats& stats) {
  std::string out = "scope,found,not_found,percent\n";
  for (Scope s : {Scope::Document, Scope::Content, Scope::Categories}) {
    const auto& c = stats.scope(s);
    const auto pct = stats.percent_found(s);
    out += std::string(scope_name(s)) + "," + std::to_string(c.found) + "," +
           std::to_string(c.not_found) + "," + (pct ? fixed2(*pct) : "") + "\n";
  }
  return out;
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = "tag_count,articles,pairs,pct_document,pct_content,pct_categories\n";
  for (const auto& r : rows) {
    out += std::to_string(r.tag_count) + "," + std::to_string(r.articles) + "," +
           std::to_string(r.pairs) + "," + fixed2(r.pct_document) + "," +
           fixed2(r.pct_content) + "," + fixed2(r.pct_categories) + "\n";
  }
  return out;
}

}  // namespace tagnav
