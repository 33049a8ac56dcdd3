#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneseek/index.hpp"
#include "cloneseek/stopwords.hpp"

namespace cloneseek {

inline constexpr std::size_t kDefaultTextTopK = 10;
inline constexpr std::size_t kDefaultEvalTopK = 900;

enum class QueryMode { code, text };

std::string_view to_string(QueryMode mode);
std::optional<QueryMode> parse_query_mode(std::string_view text);

struct Query {
  QueryMode mode = QueryMode::text;
  std::string raw;
  /// extract_identifiers(raw) for code, extract_words(raw, stopwords) for text.
  std::vector<std::string> terms;
};

Query prepare_query(std::string raw, QueryMode mode, const StopwordSet& stopwords = StopwordSet::english());

struct SearchResult {
  std::uint32_t rank = 0;
  DocId doc_id = 0;
  CloneMethodRef ref;
  double score = 0.0;
};

/// A scored document, identified by its position in IndexedCorpus::documents().
struct ScoredDocument {
  std::uint32_t doc_pos;
  double score;
};

/// Cosine ranking of every document sharing a weighted term with `query`,
/// best first, ties by doc_id ascending, truncated to top_k. Zero scores are
/// never returned.
std::vector<ScoredDocument> rank_documents(const IndexedCorpus& corpus, const WeightedVector& query,
                                           std::size_t top_k);

/// Throws InvariantError when top_k == 0. An empty result means no document
/// shares a weighted term with the query.
std::vector<SearchResult> search(const IndexedCorpus& corpus, const Query& query, std::size_t top_k);

/// `rank<TAB>score<TAB>class_id<TAB>path<TAB>start<TAB>end` per line, score
/// with six decimals.
std::string format_results_tsv(std::span<const SearchResult> results);

}  // namespace cloneseek
