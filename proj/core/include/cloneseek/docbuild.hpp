#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cloneseek/annotate.hpp"
#include "cloneseek/dataset.hpp"
#include "cloneseek/lexnorm.hpp"

namespace cloneseek {

/// The term list stored in the index for one clone method: class annotation
/// words first, then identifier words not already present.
struct NaturalLanguageDocument {
  DocId doc_id = 0;
  ClassId class_id = 0;
  std::vector<std::string> terms;

  bool operator==(const NaturalLanguageDocument&) const = default;
};

NaturalLanguageDocument build_document(DocId doc_id, ClassId class_id, const AnnotationSet& annotation,
                                       const TokenDocument& idents);

/// Identifier documents for every method of a dataset, in doc_id order.
/// Tracing runs on `threads` workers; output order is independent of it.
std::vector<TokenDocument> extract_dataset_identifiers(const Dataset& dataset,
                                                       const std::filesystem::path& source_root,
                                                       std::size_t threads = 1);

/// Per-class annotation under `strategy`. Manual mode throws InvariantError
/// naming the first class without a description.
std::map<ClassId, AnnotationSet> annotate_dataset(const Dataset& dataset,
                                                  const std::vector<TokenDocument>& identifier_docs,
                                                  const AnnotationStrategy& strategy,
                                                  const StopwordSet& stopwords);

/// Augments every method's identifier document with its class annotation.
std::vector<NaturalLanguageDocument> build_documents(const Dataset& dataset,
                                                     const std::vector<TokenDocument>& identifier_docs,
                                                     const std::map<ClassId, AnnotationSet>& annotations);

}  // namespace cloneseek
