#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "oracles.h"
#include "tagnav/error.h"
#include "tagnav/search_index.h"

using namespace tagnav;
using tagnav::testing::fixture;

namespace {

struct Corpus {
  ArticleSet articles;
  TagLists lists;
};

Corpus two_doc_corpus() {
  Corpus c{load_articles(fixture("search-two.jsonl")), {}};
  c.lists = aggregate(import_assignments(fixture("search-two-tags.jsonl")), SynonymGraph{});
  return c;
}

double score_of(const std::vector<SearchResult>& results, const std::string& id) {
  for (const auto& r : results) {
    if (r.article == id) return r.score;
  }
  return 0;
}

FieldConfig from_plus(const std::string& fields) {
  std::string csv = fields;
  std::replace(csv.begin(), csv.end(), '+', ',');
  return FieldConfig::parse(csv);
}

}  // namespace

TEST_CASE("tag postings carry user-count weight") {
  ArticleSet set;
  set.insert({"a", "A", "", {}, {}});
  TagLists lists;
  lists.emplace("a", WeightedTagList{"a", {{"programming", 2}, {"science fiction", 3}}});
  const auto index = Index::build(set, lists);
  const auto* p = index.postings(Field::Tags, "programming");
  REQUIRE(p != nullptr);
  REQUIRE(p->size() == 1);
  CHECK(p->front().tf == 2);
  CHECK(index.postings(Field::Tags, "science")->front().tf == 3);
  CHECK(index.postings(Field::Tags, "fiction")->front().tf == 3);

  const auto text_only = Index::build(set, {});
  CHECK(text_only.postings(Field::Tags, "programming") == nullptr);
  CHECK(text_only.postings(Field::Title, "a") != nullptr);
}

TEST_CASE("scores equal the frozen two-document oracle") {
  const auto c = two_doc_corpus();
  const auto index = Index::build(c.articles, c.lists);

  std::ifstream in(fixture("search-two-expected.csv"));
  REQUIRE(in);
  std::string line;
  std::getline(in, line);  // header
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>> expected;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string query, fields, article, score;
    std::getline(ss, query, ',');
    std::getline(ss, fields, ',');
    std::getline(ss, article, ',');
    std::getline(ss, score, ',');
    expected[{query, fields}][article] = std::stod(score);
  }
  REQUIRE(expected.size() == 10);
  CHECK(index.search("programming", FieldConfig::parse("content")).empty());
  for (const auto& [key, docs] : expected) {
    const auto results = index.search(key.first, from_plus(key.second));
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK(results.size() == docs.size());
    for (const auto& [id, s] : docs) CHECK(score_of(results, id) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("search ordering and errors") {
  const auto c = two_doc_corpus();
  const auto index = Index::build(c.articles, c.lists);
  const auto results = index.search("programming", FieldConfig{});
  REQUIRE(results.size() == 2);
  // equal scores fall back to id order
  CHECK(results[0].article == "d1");
  CHECK(results[1].article == "d2");
  CHECK(results[0].matched_fields.at("programming") == std::vector<Field>{Field::Categories});

  for (const char* q : {"", "  ...  "}) {
    try {
      index.search(q, FieldConfig{});
      FAIL("expected EmptyQuery");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyQuery);
    }
  }
  CHECK(index.search("nothingmatches", FieldConfig{}).empty());
}

TEST_CASE("field config parsing") {
  const auto cfg = FieldConfig::parse("content, tags");
  CHECK_FALSE(cfg.is_enabled(Field::Title));
  CHECK(cfg.is_enabled(Field::Content));
  CHECK(cfg.is_enabled(Field::Tags));
  CHECK(cfg.weight_of(Field::Title) == 2.0);
  CHECK(cfg.weight_of(Field::Categories) == 1.5);
  CHECK_THROWS_AS(FieldConfig::parse(""), Error);
  CHECK_THROWS_AS(FieldConfig::parse("body"), Error);
  FieldConfig bad;
  bad.weight[0] = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("explain reports per-field frequencies") {
  const auto c = two_doc_corpus();
  const auto index = Index::build(c.articles, c.lists);
  const auto rust = index.explain("d1", "rust");
  CHECK(rust.tf_of(Field::Title) == 1);
  CHECK(rust.tf_of(Field::Content) == 2);
  CHECK(rust.tf_of(Field::Tags) == 3);
  CHECK(rust.fields == std::vector<Field>{Field::Title, Field::Content, Field::Tags});
  CHECK(index.explain("d1", "RUST").tf == rust.tf);

  const auto none = index.explain("d2", "rust");
  CHECK(none.fields.empty());
  CHECK(none.tf == std::array<std::uint32_t, kFieldCount>{});
  CHECK(index.explain("d1", "rust compiler").fields.empty());
  CHECK_THROWS_AS(index.explain("missing", "rust"), Error);
}

TEST_CASE("search properties on random corpora") {
  oracle::Random r(31);
  for (int i = 0; i < 60; ++i) {
    auto [articles, lists] = oracle::random_presence_instance(r, 10, 6);
    const auto tl = oracle::to_taglists(lists);
    const auto index = Index::build(articles, tl);

    // stored df equals a brute scan over all fields
    for (const std::string term : {"alpha", "beta", "gamma", "zeta", "of", "omega"}) {
      std::size_t df = 0;
      for (const auto& [id, a] : articles) {
        bool hit = false;
        for (const auto& t : oracle::ascii_tokens(a.title + " " + a.content)) hit = hit || t == term;
        for (const auto& cat : a.categories) {
          for (const auto& t : oracle::ascii_tokens(cat)) hit = hit || t == term;
        }
        if (lists.contains(id)) {
          for (const auto& [tag, w] : lists.at(id)) {
            for (const auto& t : oracle::ascii_tokens(tag)) hit = hit || t == term;
          }
        }
        df += hit;
      }
      CHECK(index.df(term) == df);
    }

    const std::string query = r.coin() ? "alpha zeta" : "beta gamma omega";
    const auto without = index.search(query, FieldConfig::parse("title,content,categories"));
    const auto with = index.search(query, FieldConfig{});
    for (const auto& res : without) {
      CHECK(score_of(with, res.article) >= res.score);
    }
    CHECK(index.search(query, FieldConfig{}).size() == with.size());
    for (std::size_t k = 0; k < with.size(); ++k) {
      CHECK(with[k].score > 0);
      if (k > 0) {
        CHECK((with[k - 1].score > with[k].score ||
               (with[k - 1].score == with[k].score && with[k - 1].article < with[k].article)));
      }
      bool explained = false;
      for (const auto& q : tokenize(query)) explained = explained || !index.explain(with[k].article, q).fields.empty();
      CHECK(explained);
    }
  }
}
