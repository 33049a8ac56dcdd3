#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneseek/index.hpp"
#include "cloneseek/lexnorm.hpp"
#include "cloneseek/stopwords.hpp"

namespace cloneseek {

/// Clone types, in report order. T1/T2 are categorical; the T3 variants and
/// WT3_4 are similarity buckets.
enum class PairType { T1, T2, VST3, ST3, MT3, WT3_4 };

inline constexpr PairType kAllPairTypes[] = {PairType::T1,  PairType::T2,  PairType::VST3,
                                             PairType::ST3, PairType::MT3, PairType::WT3_4};

std::string_view to_string(PairType type);
std::optional<PairType> parse_pair_type(std::string_view text);

/// VST3 [0.9, 1), ST3 [0.7, 0.9), MT3 [0.5, 0.7), WT3_4 [0, 0.5).
/// Throws InvariantError outside [0, 1).
PairType bucket_type(double similarity);

struct ClonePairLabel {
  DocId doc_a = 0;
  DocId doc_b = 0;
  PairType type = PairType::T1;
  std::optional<double> similarity;
};

/// `doc_a<TAB>doc_b<TAB>ptype[<TAB>similarity]`, `#` comments. Throws
/// ParseError on malformed rows, self pairs, or a similarity that
/// contradicts a bucketed type.
std::vector<ClonePairLabel> parse_pairs(std::string_view text, std::string_view origin = "<pairs>");
std::vector<ClonePairLabel> load_pairs(const std::filesystem::path& path);

struct RecallRow {
  PairType type;
  std::size_t found = 0;
  std::size_t total = 0;
  double recall = 0.0;
};

struct RecallReport {
  /// Only types with at least one labeled pair, in kAllPairTypes order.
  std::vector<RecallRow> rows;
  /// Pairs that could not be found because a member was excluded.
  std::vector<std::string> diagnostics;

  const RecallRow* find(PairType type) const;
};

/// Code-to-code recall. Every retained document is issued as a query using
/// its identifier terms (`code_queries[doc_id]`); each result other than the
/// query itself forms an unordered candidate pair. Recall per type is the
/// fraction of labeled pairs among the union of candidates.
///
/// Throws EvalError when a pair names an unknown doc_id or a retained
/// document has no query; both checks run before any search.
RecallReport eval_recall(const IndexedCorpus& corpus, const std::map<DocId, TokenDocument>& code_queries,
                         std::span<const ClonePairLabel> pairs, std::size_t top_k = 900,
                         std::size_t threads = 1);

/// `ptype,found,total,recall` with four-decimal recall.
std::string format_recall_csv(const RecallReport& report);

/// Class ids of one query's results, best first.
using RankedClasses = std::vector<ClassId>;

/// Mean over queries of relevant-in-top-k / k. Missing slots count as
/// non-relevant. Throws EvalError on an empty query set or mismatched sizes,
/// InvariantError when k == 0.
double precision_at_k(std::span<const RankedClasses> results, std::span<const ClassId> truth, std::size_t k);

/// Mean reciprocal rank of the first relevant result; 0 for a query with
/// none. Throws EvalError on an empty query set or mismatched sizes.
double mrr(std::span<const RankedClasses> results, std::span<const ClassId> truth);

struct NLQueryCase {
  std::string query_id;
  ClassId class_id = 0;
  std::string text;
};

/// `query_id<TAB>class_id<TAB>text`, `#` comments.
std::vector<NLQueryCase> parse_queries(std::string_view text, std::string_view origin = "<queries>");
std::vector<NLQueryCase> load_queries(const std::filesystem::path& path);

struct QueryMetrics {
  std::string query_id;
  double reciprocal_rank = 0.0;
  /// One value per EvalReport::k_values entry.
  std::vector<double> precision;
};

struct EvalReport {
  std::vector<std::size_t> k_values;
  std::vector<QueryMetrics> rows;
  double mean_reciprocal_rank = 0.0;
  std::vector<double> mean_precision;
};

/// Natural-language query evaluation: each case is prepared in text mode and
/// searched with top_k = max(k_values). Throws EvalError before any search
/// if a case names a class absent from the corpus or `cases` is empty.
EvalReport eval_nlq(const IndexedCorpus& corpus, std::span<const NLQueryCase> cases,
                    const StopwordSet& stopwords = StopwordSet::english(),
                    std::vector<std::size_t> k_values = {1, 5, 10});

/// `query_id,mrr,p1,p5,p10` rows plus a final `average` row; four decimals.
std::string format_nlq_csv(const EvalReport& report);

}  // namespace cloneseek
