#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cloneseek/annotate.hpp"
#include "cloneseek/dataset.hpp"
#include "cloneseek/docbuild.hpp"

namespace cloneseek {

using TermId = std::uint32_t;

/// (1 + log tf) * log(J / df) with the natural logarithm.
/// Requires tf >= 1 and 1 <= df <= J; throws InvariantError otherwise.
double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t corpus_size);

/// Same weighting with the IDF logarithm taken in base `log_base` (> 1).
double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t corpus_size, double log_base);

struct VocabularyEntry {
  std::string term;
  /// Number of indexed documents containing the term.
  std::uint32_t df = 0;

  bool operator==(const VocabularyEntry&) const = default;
};

/// Lexicographically sorted term table; a term's id is its position.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws InvariantError unless entries are strictly ascending by term.
  explicit Vocabulary(std::vector<VocabularyEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& term(TermId id) const { return entries_.at(id).term; }
  std::uint32_t df(TermId id) const { return entries_.at(id).df; }
  std::optional<TermId> find(std::string_view term) const;
  const std::vector<VocabularyEntry>& entries() const noexcept { return entries_; }

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<VocabularyEntry> entries_;
};

/// Sparse non-negative vector, entries ascending by term id. L2-normalized
/// unless every weight is zero.
struct WeightedVector {
  std::vector<std::pair<TermId, double>> entries;

  /// True when no entry carries a nonzero weight ("no vocabulary overlap"
  /// or only zero-idf terms).
  bool is_zero() const noexcept;
  double norm() const noexcept;
  double weight(TermId id) const noexcept;
};

double dot(const WeightedVector& a, const WeightedVector& b) noexcept;

struct IndexedDocument {
  CloneMethodRef ref;
  /// Strictly ascending.
  std::vector<TermId> term_ids;

  bool operator==(const IndexedDocument&) const = default;
};

struct ExcludedDocument {
  CloneMethodRef ref;
  std::string reason;

  bool operator==(const ExcludedDocument&) const = default;
};

inline constexpr std::string_view kEmptyDocumentReason = "empty after normalization";

struct WeightingOptions {
  /// Base of the IDF logarithm. Persisted indexes always use e; other bases
  /// only rescale every IDF and leave cosine rankings unchanged.
  double idf_log_base = std::numbers::e;
};

/// Immutable TF-IDF vector space over natural language documents.
class IndexedCorpus {
 public:
  struct Posting {
    std::uint32_t doc_pos;
    double weight;
  };

  /// Validates every structural invariant (sorted vocabulary, df equals the
  /// recomputed document frequency, ascending term ids, documents ordered
  /// by doc_id) and precomputes document vectors. Throws InvariantError.
  IndexedCorpus(AnnotationStrategy strategy, Vocabulary vocabulary, std::vector<IndexedDocument> documents,
                std::vector<ExcludedDocument> excluded, WeightingOptions options = {});

  /// Number of retained (non-excluded) documents.
  std::uint32_t corpus_size() const noexcept { return static_cast<std::uint32_t>(documents_.size()); }
  const AnnotationStrategy& strategy() const noexcept { return strategy_; }
  const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
  std::span<const IndexedDocument> documents() const noexcept { return documents_; }
  std::span<const ExcludedDocument> excluded() const noexcept { return excluded_; }
  const WeightingOptions& options() const noexcept { return options_; }

  const WeightedVector& document_vector(std::size_t pos) const { return vectors_.at(pos); }
  std::span<const Posting> postings(TermId id) const { return postings_.at(id); }
  double idf(TermId id) const { return idf_.at(id); }

  /// Position of a retained document in documents(), if any.
  std::optional<std::size_t> position_of(DocId doc_id) const;
  const ExcludedDocument* find_excluded(DocId doc_id) const;
  /// Reference of a retained or excluded document.
  const CloneMethodRef* find_ref(DocId doc_id) const;
  bool has_class(ClassId class_id) const;

  /// Normalized TF-IDF vector of an arbitrary term sequence. Unknown terms
  /// are ignored; tf is the occurrence count within `terms`.
  WeightedVector vectorize(std::span<const std::string> terms) const;

  /// Structural equality: strategy, vocabulary, documents, excluded.
  bool operator==(const IndexedCorpus& other) const;

 private:
  AnnotationStrategy strategy_;
  Vocabulary vocabulary_;
  std::vector<IndexedDocument> documents_;
  std::vector<ExcludedDocument> excluded_;
  WeightingOptions options_;

  std::vector<double> idf_;
  std::vector<WeightedVector> vectors_;
  std::vector<std::vector<Posting>> postings_;
};

/// Builds the vocabulary and per-document term ids. `refs[i]` must be the
/// reference of doc_id i and every document's doc_id must index into it.
/// Empty documents are moved to excluded(); throws BuildError when nothing
/// remains or doc_ids are not dense and unique.
IndexedCorpus build_index(const std::vector<NaturalLanguageDocument>& documents,
                          std::span<const CloneMethodRef> refs, const AnnotationStrategy& strategy,
                          WeightingOptions options = {});

}  // namespace cloneseek
