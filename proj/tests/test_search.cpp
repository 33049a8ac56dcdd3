#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cloneseek/annotate.hpp"
#include "cloneseek/dataset.hpp"
#include "cloneseek/docbuild.hpp"
#include "cloneseek/error.hpp"
#include "cloneseek/index.hpp"
#include "cloneseek/search.hpp"
#include "cloneseek/stopwords.hpp"
#include "oracles.hpp"

using namespace cloneseek;

namespace {

using Words = std::vector<std::string>;

Query text_query(Words terms) {
  Query q;
  q.mode = QueryMode::text;
  q.terms = std::move(terms);
  return q;
}

Words random_query(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, 21);  // two slots past the pool are unknown terms
  Words q;
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = pick(rng);
    q.push_back(j < 20 ? oracle::pool_term(j) : "unknown" + std::to_string(j));
  }
  return q;
}

bool has_terms(const oracle::Corpus& c) {
  return std::any_of(c.docs.begin(), c.docs.end(), [](const auto& d) { return !d.terms.empty(); });
}

}  // namespace

TEST(PrepareQuery, ModesUseTheirPipelines) {
  auto q = prepare_query("With Java reflection how to instantiate a new object, then call a method on it?",
                         QueryMode::text);
  EXPECT_EQ(q.terms, (Words{"with", "java", "reflect", "instanti", "new", "object", "call", "method"}));
  EXPECT_TRUE(prepare_query("???", QueryMode::text).terms.empty());
  q = prepare_query("String s = \"new\"; // new", QueryMode::code);
  EXPECT_EQ(q.terms, (Words{"string"}));
  EXPECT_EQ(parse_query_mode("code"), QueryMode::code);
  EXPECT_FALSE(parse_query_mode("prose").has_value());
}

TEST(Search, MatchesDenseOracleOnRandomCorpora) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> qlen(1, 5);
  for (int round = 0; round < 150; ++round) {
    auto c = oracle::random_corpus(rng, 20, 12, 20);
    if (!has_terms(c)) continue;
    const auto idx = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
    const oracle::DenseCosine dense(c.docs);
    for (int qi = 0; qi < 10; ++qi) {
      const auto terms = random_query(rng, qlen(rng));
      const auto expected = dense.rank(terms);
      const std::size_t top = 1 + static_cast<std::size_t>(qi) * 3;
      const auto got = search(idx, text_query(terms), top);
      ASSERT_EQ(got.size(), std::min(top, expected.size()));
      for (std::size_t r = 0; r < got.size(); ++r) {
        EXPECT_EQ(got[r].rank, r + 1);
        EXPECT_EQ(got[r].doc_id, expected[r].doc_id) << "round " << round << " rank " << r;
        EXPECT_NEAR(got[r].score, expected[r].score, 1e-9);
      }
    }
  }
}

TEST(Search, SelfQueryScoresOne) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 50; ++round) {
    auto c = oracle::random_corpus(rng);
    c.docs.push_back(NaturalLanguageDocument{static_cast<DocId>(c.docs.size()), 9, {"unique1", "unique2"}});
    c.refs.push_back(CloneMethodRef{c.docs.back().doc_id, 9, "U.java", 1, 1});
    const auto idx = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
    const auto res = search(idx, text_query(c.docs.back().terms), 5);
    ASSERT_FALSE(res.empty());
    EXPECT_EQ(res[0].doc_id, c.docs.back().doc_id);
    EXPECT_NEAR(res[0].score, 1.0, 1e-9);
    EXPECT_LE(res[0].score, 1.0);
  }
}

TEST(Search, NoOverlapMeansNoResults) {
  oracle::Corpus c;
  c.docs = {{0, 1, {"a1", "b2"}}, {1, 1, {"b2", "c3"}}};
  c.refs = {{0, 1, "A.java", 1, 1}, {1, 1, "A.java", 2, 2}};
  const auto idx = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
  EXPECT_TRUE(search(idx, text_query({"zz"}), 10).empty());
  // b2 occurs everywhere: zero idf, so nothing scores above zero.
  EXPECT_TRUE(search(idx, text_query({"b2"}), 10).empty());
  EXPECT_THROW(search(idx, text_query({"a1"}), 0), InvariantError);
}

TEST(Search, TermOrderAndTopKPrefix) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 100; ++round) {
    auto c = oracle::random_corpus(rng);
    if (!has_terms(c)) continue;
    const auto idx = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
    auto terms = random_query(rng, 6);
    const auto full = search(idx, text_query(terms), 1000);
    for (int p = 0; p < 3; ++p) {
      std::shuffle(terms.begin(), terms.end(), rng);
      const auto shuffled = search(idx, text_query(terms), 1000);
      ASSERT_EQ(shuffled.size(), full.size());
      for (std::size_t i = 0; i < full.size(); ++i) {
        EXPECT_EQ(shuffled[i].doc_id, full[i].doc_id);
        EXPECT_EQ(shuffled[i].score, full[i].score);
      }
    }
    for (std::size_t k = 1; k <= full.size(); ++k) {
      const auto part = search(idx, text_query(terms), k);
      ASSERT_EQ(part.size(), k);
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(part[i].doc_id, full[i].doc_id);
    }
  }
}

TEST(Search, LogBaseDoesNotChangeRanking) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 60; ++round) {
    auto c = oracle::random_corpus(rng);
    if (!has_terms(c)) continue;
    const auto e = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
    const auto ten = build_index(c.docs, c.refs, AnnotationStrategy::baseline(), WeightingOptions{10.0});
    const auto terms = random_query(rng, 4);
    const auto a = search(e, text_query(terms), 50);
    const auto b = search(ten, text_query(terms), 50);
    ASSERT_EQ(a.size(), b.size());
    // Groups of equal scores must hold the same documents; order inside a
    // group may only differ through last-bit rounding.
    for (std::size_t i = 0; i < a.size();) {
      std::size_t j = i;
      while (j < a.size() && std::abs(a[j].score - a[i].score) <= 1e-12) ++j;
      std::vector<DocId> ga, gb;
      for (std::size_t t = i; t < j; ++t) {
        EXPECT_NEAR(a[t].score, b[t].score, 1e-12);
        ga.push_back(a[t].doc_id);
        gb.push_back(b[t].doc_id);
      }
      std::sort(ga.begin(), ga.end());
      std::sort(gb.begin(), gb.end());
      EXPECT_EQ(ga, gb);
      i = j;
    }
  }
}

TEST(Search, TiesBreakByDocId) {
  oracle::Corpus c;
  for (DocId i = 0; i < 6; ++i) {
    c.docs.push_back({i, 1, i < 5 ? Words{"same", "pair"} : Words{"other"}});
    c.refs.push_back({i, 1, "T.java", i + 1, i + 1});
  }
  const auto idx = build_index(c.docs, c.refs, AnnotationStrategy::baseline());
  const auto res = search(idx, text_query({"same"}), 3);
  ASSERT_EQ(res.size(), 3u);
  EXPECT_EQ(res[0].doc_id, 0u);
  EXPECT_EQ(res[1].doc_id, 1u);
  EXPECT_EQ(res[2].doc_id, 2u);
}

TEST(Search, ReflectionMethodsRankFirst) {
  const auto ds = load_manifest(oracle::fixture("reflection/manifest.tsv"), oracle::fixture("reflection/annotations.tsv"));
  const auto idents = extract_dataset_identifiers(ds, oracle::fixture("reflection/src"));
  const auto strategy = AnnotationStrategy::manual();
  const auto ann = annotate_dataset(ds, idents, strategy, StopwordSet::english());
  const auto idx = build_index(build_documents(ds, idents, ann), ds.refs, strategy);
  const auto q = prepare_query("With Java reflection how to instantiate a new object, then call a method on it?",
                               QueryMode::text);
  const auto res = search(idx, q, 10);
  ASSERT_GE(res.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(res[i].ref.class_id, 35u) << i;
  for (std::size_t i = 3; i < res.size(); ++i) EXPECT_NE(res[i].ref.class_id, 35u) << i;
}

TEST(Search, ResultTsvFormat) {
  std::vector<SearchResult> rows{{1, 3, {3, 35, "src/Reflection.java", 10, 20}, 0.5},
                                 {2, 0, {0, 4, "a b.java", 1, 2}, 1.0 / 3.0}};
  EXPECT_EQ(format_results_tsv(rows),
            "1\t0.500000\t35\tsrc/Reflection.java\t10\t20\n2\t0.333333\t4\ta b.java\t1\t2\n");
}
