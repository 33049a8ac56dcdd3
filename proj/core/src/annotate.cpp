#include "cloneseek/annotate.hpp"

#include <algorithm>
#include <unordered_map>

#include "cloneseek/error.hpp"

namespace cloneseek {

std::string_view to_string(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::baseline: return "baseline";
    case AnnotationKind::manual: return "manual";
    case AnnotationKind::automatic: return "automatic";
  }
  return "unknown";
}

std::optional<AnnotationKind> parse_annotation_kind(std::string_view text) {
  if (text == "baseline") return AnnotationKind::baseline;
  if (text == "manual") return AnnotationKind::manual;
  if (text == "automatic" || text == "auto") return AnnotationKind::automatic;
  return std::nullopt;
}

AnnotationStrategy AnnotationStrategy::automatic(std::uint32_t k) {
  if (k == 0) throw InvariantError("automatic annotation requires k >= 1");
  return AnnotationStrategy{AnnotationKind::automatic, k};
}

AnnotationSet annotate_manual(const CloneClass& cls, const StopwordSet& stopwords) {
  if (!cls.description) {
    throw InvariantError("class " + std::to_string(cls.class_id) + " has no manual annotation");
  }
  return AnnotationSet{cls.class_id, extract_words(*cls.description, stopwords)};
}

std::vector<TermCount> count_terms(std::span<const TokenDocument> class_docs) {
  std::unordered_map<std::string, std::uint32_t> counts;
  for (const auto& doc : class_docs) {
    for (const auto& term : doc.terms) ++counts[term];
  }
  std::vector<TermCount> table;
  table.reserve(counts.size());
  for (auto& [term, count] : counts) table.push_back(TermCount{term, count});
  std::sort(table.begin(), table.end(), [](const TermCount& a, const TermCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.term < b.term;
  });
  return table;
}

AnnotationSet annotate_automatic(ClassId class_id, std::span<const TokenDocument> class_docs,
                                 std::uint32_t k) {
  if (k == 0) throw InvariantError("automatic annotation requires k >= 1");
  auto table = count_terms(class_docs);
  if (table.size() > k) table.resize(k);
  AnnotationSet set{class_id, {}};
  set.words.reserve(table.size());
  for (auto& entry : table) set.words.push_back(std::move(entry.term));
  return set;
}

}  // namespace cloneseek
