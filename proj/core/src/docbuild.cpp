#include "cloneseek/docbuild.hpp"

#include "cloneseek/error.hpp"
#include "cloneseek/text.hpp"
#include "parallel.hpp"

namespace cloneseek {

NaturalLanguageDocument build_document(DocId doc_id, ClassId class_id, const AnnotationSet& annotation,
                                       const TokenDocument& idents) {
  NaturalLanguageDocument doc{doc_id, class_id, {}};
  append_unique(doc.terms, annotation.words);
  append_unique(doc.terms, idents.terms);
  return doc;
}

std::vector<TokenDocument> extract_dataset_identifiers(const Dataset& dataset,
                                                       const std::filesystem::path& source_root,
                                                       std::size_t threads) {
  std::vector<TokenDocument> docs(dataset.refs.size());
  detail::parallel_for(dataset.refs.size(), threads, [&](std::size_t i) {
    docs[i] = extract_identifiers(trace(dataset.refs[i], source_root).source);
  });
  return docs;
}

std::map<ClassId, AnnotationSet> annotate_dataset(const Dataset& dataset,
                                                  const std::vector<TokenDocument>& identifier_docs,
                                                  const AnnotationStrategy& strategy,
                                                  const StopwordSet& stopwords) {
  if (identifier_docs.size() != dataset.refs.size()) {
    throw InvariantError("identifier documents do not match the dataset");
  }
  std::map<ClassId, AnnotationSet> out;
  switch (strategy.kind()) {
    case AnnotationKind::baseline:
      for (const auto& cls : dataset.classes) out.emplace(cls.class_id, AnnotationSet{cls.class_id, {}});
      break;
    case AnnotationKind::manual:
      for (const auto& cls : dataset.classes) out.emplace(cls.class_id, annotate_manual(cls, stopwords));
      break;
    case AnnotationKind::automatic: {
      std::map<ClassId, std::vector<TokenDocument>> by_class;
      for (const auto& cls : dataset.classes) by_class[cls.class_id];
      for (std::size_t i = 0; i < dataset.refs.size(); ++i) {
        by_class[dataset.refs[i].class_id].push_back(identifier_docs[i]);
      }
      for (const auto& [id, docs] : by_class) out.emplace(id, annotate_automatic(id, docs, *strategy.k()));
      break;
    }
  }
  return out;
}

std::vector<NaturalLanguageDocument> build_documents(const Dataset& dataset,
                                                     const std::vector<TokenDocument>& identifier_docs,
                                                     const std::map<ClassId, AnnotationSet>& annotations) {
  if (identifier_docs.size() != dataset.refs.size()) {
    throw InvariantError("identifier documents do not match the dataset");
  }
  std::vector<NaturalLanguageDocument> docs;
  docs.reserve(dataset.refs.size());
  const AnnotationSet none;
  for (std::size_t i = 0; i < dataset.refs.size(); ++i) {
    const auto& ref = dataset.refs[i];
    const auto it = annotations.find(ref.class_id);
    docs.push_back(build_document(ref.doc_id, ref.class_id, it == annotations.end() ? none : it->second,
                                  identifier_docs[i]));
  }
  return docs;
}

}  // namespace cloneseek
