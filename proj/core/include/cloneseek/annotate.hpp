#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cloneseek/dataset.hpp"
#include "cloneseek/lexnorm.hpp"
#include "cloneseek/stopwords.hpp"

namespace cloneseek {

enum class AnnotationKind { baseline, manual, automatic };

std::string_view to_string(AnnotationKind kind);
/// Accepts `baseline`, `manual`, and `automatic` (alias `auto`).
std::optional<AnnotationKind> parse_annotation_kind(std::string_view text);

/// How class-level keywords are produced. `k` is set iff kind is automatic.
class AnnotationStrategy {
 public:
  static constexpr std::uint32_t kDefaultTopK = 10;

  static AnnotationStrategy baseline() { return AnnotationStrategy{AnnotationKind::baseline, std::nullopt}; }
  static AnnotationStrategy manual() { return AnnotationStrategy{AnnotationKind::manual, std::nullopt}; }
  /// Throws InvariantError when k == 0.
  static AnnotationStrategy automatic(std::uint32_t k = kDefaultTopK);

  AnnotationKind kind() const noexcept { return kind_; }
  std::optional<std::uint32_t> k() const noexcept { return k_; }

  bool operator==(const AnnotationStrategy&) const = default;

 private:
  AnnotationStrategy(AnnotationKind kind, std::optional<std::uint32_t> k) : kind_(kind), k_(k) {}

  AnnotationKind kind_;
  std::optional<std::uint32_t> k_;
};

struct AnnotationSet {
  ClassId class_id = 0;
  std::vector<std::string> words;

  bool operator==(const AnnotationSet&) const = default;
};

struct TermCount {
  std::string term;
  std::uint32_t count = 0;

  bool operator==(const TermCount&) const = default;
};

/// Word extraction over the class description. Throws InvariantError if the
/// class carries no description.
AnnotationSet annotate_manual(const CloneClass& cls, const StopwordSet& stopwords);

/// Occurrence counts of every term across the class documents, ordered by
/// count descending then term ascending.
std::vector<TermCount> count_terms(std::span<const TokenDocument> class_docs);

/// The k most recurrent terms of the class documents, ties broken by term
/// ascending. No stopword filtering is applied. Throws InvariantError when
/// k == 0.
AnnotationSet annotate_automatic(ClassId class_id, std::span<const TokenDocument> class_docs,
                                 std::uint32_t k);

}  // namespace cloneseek
