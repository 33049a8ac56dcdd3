#include "cloneseek/search.hpp"

#include <algorithm>
#include <cstdio>

#include "cloneseek/error.hpp"
#include "cloneseek/lexnorm.hpp"

namespace cloneseek {

std::string_view to_string(QueryMode mode) { return mode == QueryMode::code ? "code" : "text"; }

std::optional<QueryMode> parse_query_mode(std::string_view text) {
  if (text == "code") return QueryMode::code;
  if (text == "text") return QueryMode::text;
  return std::nullopt;
}

Query prepare_query(std::string raw, QueryMode mode, const StopwordSet& stopwords) {
  Query q{mode, std::move(raw), {}};
  q.terms = mode == QueryMode::code ? extract_identifiers(q.raw).terms : extract_words(q.raw, stopwords);
  return q;
}

std::vector<ScoredDocument> rank_documents(const IndexedCorpus& corpus, const WeightedVector& query,
                                           std::size_t top_k) {
  if (top_k == 0) throw InvariantError("top_k must be >= 1");
  std::vector<double> acc(corpus.documents().size(), 0.0);
  std::vector<char> seen(corpus.documents().size(), 0);
  std::vector<std::uint32_t> touched;
  // Query entries ascend by term id, so each document's score is summed in
  // term-id order regardless of how many documents share a term.
  for (const auto& [term, q_weight] : query.entries) {
    if (q_weight == 0.0) continue;
    for (const auto& posting : corpus.postings(term)) {
      if (!seen[posting.doc_pos]) {
        seen[posting.doc_pos] = 1;
        touched.push_back(posting.doc_pos);
      }
      acc[posting.doc_pos] += q_weight * posting.weight;
    }
  }

  std::vector<ScoredDocument> scored;
  scored.reserve(touched.size());
  for (const auto pos : touched) {
    if (acc[pos] > 0.0) scored.push_back(ScoredDocument{pos, std::min(acc[pos], 1.0)});
  }
  // Document positions ascend with doc_id, so this is the doc_id tie-break.
  const auto better = [](const ScoredDocument& a, const ScoredDocument& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc_pos < b.doc_pos;
  };
  if (scored.size() > top_k) {
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(top_k), scored.end(), better);
    scored.resize(top_k);
  } else {
    std::sort(scored.begin(), scored.end(), better);
  }
  return scored;
}

std::vector<SearchResult> search(const IndexedCorpus& corpus, const Query& query, std::size_t top_k) {
  if (top_k == 0) throw InvariantError("top_k must be >= 1");
  const auto ranked = rank_documents(corpus, corpus.vectorize(query.terms), top_k);
  std::vector<SearchResult> results;
  results.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& doc = corpus.documents()[ranked[i].doc_pos];
    results.push_back(SearchResult{static_cast<std::uint32_t>(i + 1), doc.ref.doc_id, doc.ref, ranked[i].score});
  }
  return results;
}

std::string format_results_tsv(std::span<const SearchResult> results) {
  std::string out;
  char score[32];
  for (const auto& r : results) {
    std::snprintf(score, sizeof score, "%.6f", r.score);
    out += std::to_string(r.rank);
    out += '\t';
    out += score;
    out += '\t';
    out += std::to_string(r.ref.class_id);
    out += '\t';
    out += r.ref.path;
    out += '\t';
    out += std::to_string(r.ref.start_line);
    out += '\t';
    out += std::to_string(r.ref.end_line);
    out += '\n';
  }
  return out;
}

}  // namespace cloneseek
