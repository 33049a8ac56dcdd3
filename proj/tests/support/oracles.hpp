#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here shares code with the library beyond its public types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cloneseek/dataset.hpp"
#include "cloneseek/docbuild.hpp"

namespace oracle {

inline std::string fixture(const std::string& rel) { return std::string(CLONESEEK_FIXTURES_DIR) + "/" + rel; }
inline std::string test_data(const std::string& rel) { return std::string(CLONESEEK_TEST_DATA_DIR) + "/" + rel; }

struct Corpus {
  std::vector<cloneseek::NaturalLanguageDocument> docs;
  std::vector<cloneseek::CloneMethodRef> refs;
};

// Terms drawn from a small pool so that df collisions and exact ties are common.
inline std::string pool_term(std::size_t i) {
  static const char* const kPool[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta",
                                      "iota", "kappa", "lam", "mu", "nu", "xi", "omicron", "pi",
                                      "rho", "sigma", "tau", "ups"};
  return kPool[i % std::size(kPool)];
}

inline Corpus random_corpus(std::mt19937_64& rng, std::size_t max_docs = 30, std::size_t max_terms = 12,
                            std::size_t pool = 20) {
  Corpus c;
  std::uniform_int_distribution<std::size_t> n_docs(1, max_docs);
  std::uniform_int_distribution<std::size_t> n_terms(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  const std::size_t J = n_docs(rng);
  for (std::size_t i = 0; i < J; ++i) {
    cloneseek::NaturalLanguageDocument d;
    d.doc_id = static_cast<cloneseek::DocId>(i);
    d.class_id = static_cast<cloneseek::ClassId>(i % 4 + 1);
    if (i > 0 && coin(rng) == 0) {
      d.terms = c.docs[i - 1].terms;  // exact duplicate
    } else {
      const std::size_t n = n_terms(rng);
      std::set<std::string> seen;
      for (std::size_t t = 0; t < n; ++t) {
        std::string term = pool_term(pick(rng));
        if (seen.insert(term).second) d.terms.push_back(term);
      }
    }
    c.docs.push_back(d);
    c.refs.push_back(cloneseek::CloneMethodRef{d.doc_id, d.class_id, "F" + std::to_string(i) + ".java", 1, 1});
  }
  return c;
}

// Dense brute-force TF-IDF cosine ranking over the non-empty documents.
class DenseCosine {
 public:
  explicit DenseCosine(const std::vector<cloneseek::NaturalLanguageDocument>& docs) {
    std::set<std::string> terms;
    for (const auto& d : docs) {
      if (d.terms.empty()) continue;
      kept_.push_back(d.doc_id);
      terms.insert(d.terms.begin(), d.terms.end());
    }
    vocab_.assign(terms.begin(), terms.end());
    df_.assign(vocab_.size(), 0);
    for (const auto& d : docs) {
      for (std::size_t t = 0; t < vocab_.size(); ++t) {
        if (std::find(d.terms.begin(), d.terms.end(), vocab_[t]) != d.terms.end()) ++df_[t];
      }
    }
    for (const auto& d : docs) {
      if (!d.terms.empty()) matrix_.push_back(vectorize(d.terms));
    }
  }

  std::size_t J() const { return kept_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<std::uint32_t>& df() const { return df_; }

  std::vector<double> vectorize(const std::vector<std::string>& terms) const {
    std::vector<double> v(vocab_.size(), 0.0);
    for (std::size_t t = 0; t < vocab_.size(); ++t) {
      const auto tf = std::count(terms.begin(), terms.end(), vocab_[t]);
      if (tf == 0) continue;
      v[t] = (1.0 + std::log(static_cast<double>(tf))) *
             std::log(static_cast<double>(J()) / static_cast<double>(df_[t]));
    }
    double sum = 0.0;
    for (double w : v) sum += w * w;
    if (sum > 0.0) {
      const double norm = std::sqrt(sum);
      for (double& w : v) w /= norm;
    }
    return v;
  }

  struct Hit {
    cloneseek::DocId doc_id;
    double score;
  };

  // Every document with a positive score, best first, equal scores by doc_id.
  std::vector<Hit> rank(const std::vector<std::string>& query) const {
    const auto q = vectorize(query);
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      double s = 0.0;
      for (std::size_t t = 0; t < q.size(); ++t) s += q[t] * matrix_[i][t];
      if (s > 0.0) hits.push_back({kept_[i], std::min(s, 1.0)});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
      return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
    });
    return hits;
  }

 private:
  std::vector<cloneseek::DocId> kept_;
  std::vector<std::string> vocab_;
  std::vector<std::uint32_t> df_;
  std::vector<std::vector<double>> matrix_;
};

// Full (-count, term) ordered count table.
inline std::vector<std::pair<std::string, std::uint32_t>> brute_force_counts(
    const std::vector<cloneseek::TokenDocument>& docs) {
  std::map<std::string, std::uint32_t> counts;
  for (const auto& d : docs)
    for (const auto& t : d.terms) ++counts[t];
  std::vector<std::pair<std::string, std::uint32_t>> table(counts.begin(), counts.end());
  std::stable_sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return table;
}

}  // namespace oracle
