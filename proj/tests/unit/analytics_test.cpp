#include <doctest.h>

#include "fixtures.h"
#include "oracles.h"
#include "tagnav/analytics.h"
#include "tagnav/error.h"

using namespace tagnav;
using tagnav::testing::fixture;

TEST_CASE("tag_found_in needs a contiguous match") {
  const TermSequence terms{"great", "science", "fiction", "books"};
  CHECK(tag_found_in("science fiction", terms));
  CHECK_FALSE(tag_found_in("science fiction", TermSequence{"science", "and", "fiction"}));
  CHECK_FALSE(tag_found_in("science", TermSequence{}));
  CHECK(tag_found_in("books", terms));
  CHECK_FALSE(tag_found_in("art", TermSequence{"artificial"}));
  CHECK(tag_found_in("Science-Fiction", terms));
}

TEST_CASE("percent rounds half-up to two decimals") {
  CHECK(percent(35237, 422471) == 7.70);
  CHECK(percent(0, 5) == 0.00);
  CHECK(percent(202151, 255557) == 44.17);
  CHECK(percent(251139, 206569) == 54.87);
  CHECK(percent(2, 1) == 66.67);
  CHECK(percent(1, 6) == 14.29);
  CHECK(percent(1, 7) == 12.50);
  CHECK(percent(1, 199999) == 0.00);
  // exact halves round up: 1/160 = 0.625%, 1/16000 = 0.00625%
  CHECK(percent(1, 159) == 0.63);
  CHECK(percent(1, 1599) == 0.06);
  CHECK(percent(1, 15999) == 0.01);
  try {
    percent(0, 0);
    FAIL("expected NoPairs");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPairs);
  }
}

TEST_CASE("presence per scope on a hand-built article") {
  ArticleSet set;
  set.insert({"a", "", "alpha beta", {"Beta Things"}, {}});
  TagLists lists;
  lists.emplace("a", WeightedTagList{"a", {{"alpha", 1}, {"gamma", 1}, {"beta things", 1}}});
  const auto stats = presence_stats(set, lists);
  CHECK(stats.total_pairs == 3);
  CHECK(stats.content == ScopeCount{1, 2});
  CHECK(stats.categories == ScopeCount{1, 2});
  CHECK(stats.document == ScopeCount{2, 1});
}

TEST_CASE("categories never match across names; titles count for document") {
  ArticleSet set;
  set.insert({"a", "Gamma ray", "", {"Alpha", "Beta"}, {}});
  TagLists lists;
  lists.emplace("a", WeightedTagList{"a", {{"alpha beta", 1}, {"gamma", 1}}});
  const auto stats = presence_stats(set, lists);
  CHECK(stats.categories.found == 0);
  CHECK(stats.content.found == 0);
  CHECK(stats.document.found == 1);
}

TEST_CASE("presence edge cases") {
  const auto empty = presence_stats(ArticleSet{}, TagLists{});
  CHECK(empty == PresenceStats{});
  CHECK_FALSE(empty.percent_found(Scope::Document).has_value());
  CHECK(presence_by_tag_count(ArticleSet{}, TagLists{}).empty());

  TagLists ghost;
  ghost.emplace("ghost", WeightedTagList{"ghost", {{"x", 1}}});
  CHECK_THROWS_AS(presence_stats(ArticleSet{}, ghost), Error);
}

TEST_CASE("curve row for one article") {
  ArticleSet set;
  set.insert({"a", "", "red green", {}, {}});
  TagLists lists;
  lists.emplace("a", WeightedTagList{"a", {{"red", 1}, {"green", 1}, {"blue", 1}}});
  const auto rows = presence_by_tag_count(set, lists);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].tag_count == 3);
  CHECK(rows[0].articles == 1);
  CHECK(rows[0].pairs == 3);
  CHECK(rows[0].pct_document == 66.67);
}

TEST_CASE("presence and curve match brute force on random instances") {
  oracle::Random r(1234);
  for (int i = 0; i < 100; ++i) {
    auto [articles, lists] = oracle::random_presence_instance(r, 10, 8);
    const auto tl = oracle::to_taglists(lists);
    for (auto exec : {kernels::Execution::Serial, kernels::Execution::Parallel}) {
      const auto stats = presence_stats(articles, tl, exec);
      const auto expected = oracle::presence(articles, lists);
      CHECK(stats.total_pairs == expected.pairs);
      CHECK(stats.document.found == expected.document);
      CHECK(stats.content.found == expected.content);
      CHECK(stats.categories.found == expected.categories);
      for (Scope s : {Scope::Document, Scope::Content, Scope::Categories}) {
        CHECK(stats.scope(s).found + stats.scope(s).not_found == stats.total_pairs);
      }
      CHECK(stats.document.found >= std::max(stats.content.found, stats.categories.found));

      const auto rows = presence_by_tag_count(articles, tl, exec);
      const auto expected_rows = oracle::curve(articles, lists);
      REQUIRE(rows.size() == expected_rows.size());
      std::size_t pairs = 0;
      auto it = expected_rows.begin();
      for (const auto& row : rows) {
        const auto& [n, acc] = it->second;
        CHECK(row.tag_count == it->first);
        CHECK(row.articles == n);
        CHECK(row.pairs == acc.pairs);
        CHECK(row.pct_document == oracle::pct(acc.document, acc.pairs));
        CHECK(row.pct_content == oracle::pct(acc.content, acc.pairs));
        CHECK(row.pct_categories == oracle::pct(acc.categories, acc.pairs));
        pairs += row.pairs;
        ++it;
      }
      CHECK(pairs == stats.total_pairs);
    }
  }
}

TEST_CASE("cloud fonts scale logarithmically") {
  const auto cloud = build_cloud({{"a", 1}, {"b", 10}, {"c", 100}}, 10, 10, 30);
  REQUIRE(cloud.entries.size() == 3);
  CHECK(cloud.entries[0] == CloudEntry{"c", 100, 30});
  CHECK(cloud.entries[1] == CloudEntry{"b", 10, 20});
  CHECK(cloud.entries[2] == CloudEntry{"a", 1, 10});

  const auto single = build_cloud({{"only", 7}}, 5, 10, 30);
  REQUIRE(single.entries.size() == 1);
  CHECK(single.entries[0].font == 30);

  const auto equal = build_cloud({{"x", 4}, {"y", 4}}, 5, 8, 16);
  CHECK(equal.entries[0].font == 16);
  CHECK(equal.entries[1].font == 16);

  CHECK(build_cloud({}, 5, 10, 30).entries.empty());
  CHECK_THROWS_AS(build_cloud({{"a", 1}}, 0, 10, 30), Error);
  CHECK_THROWS_AS(build_cloud({{"a", 1}}, 1, 31, 30), Error);
}

TEST_CASE("cloud top_n keeps heaviest with alphabetical ties") {
  const auto cloud = build_cloud({{"d", 5}, {"b", 5}, {"a", 1}, {"c", 9}}, 3, 10, 20);
  REQUIRE(cloud.entries.size() == 3);
  CHECK(cloud.entries[0].tag == "c");
  CHECK(cloud.entries[1].tag == "b");
  CHECK(cloud.entries[2].tag == "d");
  CHECK(cloud.entries[2].font == 10);  // lightest kept entry
}

TEST_CASE("cloud invariants on random weights") {
  oracle::Random r(8);
  for (int i = 0; i < 200; ++i) {
    std::map<std::string, std::size_t> weights;
    const std::size_t n = 1 + r.below(30);
    for (std::size_t k = 0; k < n; ++k) weights["t" + std::to_string(k)] = 1 + r.below(1000);
    const int lo = static_cast<int>(r.below(20));
    const int hi = lo + static_cast<int>(r.below(40));
    const auto cloud = build_cloud(weights, 1 + r.below(40), lo, hi);
    const auto& e = cloud.entries;
    for (std::size_t a = 0; a < e.size(); ++a) {
      CHECK(e[a].font >= lo);
      CHECK(e[a].font <= hi);
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (e[a].weight >= e[b].weight) CHECK(e[a].font >= e[b].font);
      }
    }
    if (e.front().weight != e.back().weight) {
      CHECK(e.front().font == hi);
      CHECK(e.back().font == lo);
    } else {
      for (const auto& x : e) CHECK(x.font == hi);
    }
  }
}

TEST_CASE("csv emitters") {
  PresenceStats s;
  s.total_pairs = 4;
  s.document = {3, 1};
  s.content = {2, 2};
  s.categories = {0, 4};
  CHECK(presence_csv(s) ==
        "scope,found,not_found,percent\n"
        "document,3,1,75.00\n"
        "content,2,2,50.00\n"
        "categories,0,4,0.00\n");
  CHECK(presence_csv(PresenceStats{}) ==
        "scope,found,not_found,percent\n"
        "document,0,0,\n"
        "content,0,0,\n"
        "categories,0,0,\n");
  CHECK(curve_csv({{2, 1, 2, 50, 50, 0}}) ==
        "tag_count,articles,pairs,pct_document,pct_content,pct_categories\n"
        "2,1,2,50.00,50.00,0.00\n");
}
