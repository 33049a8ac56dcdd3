#include "cloneseek/index.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cloneseek/error.hpp"

namespace cloneseek {

namespace {

double checked_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t corpus_size, double log_base) {
  if (tf == 0) throw InvariantError("tf must be >= 1 (absent terms have no weight)");
  if (df == 0 || df > corpus_size) {
    throw InvariantError("df must satisfy 1 <= df <= J (df=" + std::to_string(df) +
                         ", J=" + std::to_string(corpus_size) + ")");
  }
  if (!(log_base > 1.0)) throw InvariantError("log base must be > 1");
  const double tf_part = 1.0 + std::log(static_cast<double>(tf));
  double idf_part = std::log(static_cast<double>(corpus_size) / static_cast<double>(df));
  if (log_base != std::numbers::e) idf_part /= std::log(log_base);
  return tf_part * idf_part;
}

void normalize(WeightedVector& v) {
  double sum = 0.0;
  for (const auto& [id, w] : v.entries) sum += w * w;
  if (sum == 0.0) return;
  const double norm = std::sqrt(sum);
  for (auto& [id, w] : v.entries) w /= norm;
}

}  // namespace

double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t corpus_size) {
  return checked_weight(tf, df, corpus_size, std::numbers::e);
}

double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t corpus_size, double log_base) {
  return checked_weight(tf, df, corpus_size, log_base);
}

Vocabulary::Vocabulary(std::vector<VocabularyEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1].term < entries_[i].term)) {
      throw InvariantError("vocabulary terms must be strictly ascending (at '" + entries_[i].term + "')");
    }
  }
}

std::optional<TermId> Vocabulary::find(std::string_view term) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), term,
                                   [](const VocabularyEntry& e, std::string_view t) { return e.term < t; });
  if (it == entries_.end() || it->term != term) return std::nullopt;
  return static_cast<TermId>(it - entries_.begin());
}

bool WeightedVector::is_zero() const noexcept {
  return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.second != 0.0; });
}

double WeightedVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& [id, w] : entries) sum += w * w;
  return std::sqrt(sum);
}

double WeightedVector::weight(TermId id) const noexcept {
  const auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const auto& e, TermId v) { return e.first < v; });
  return it != entries.end() && it->first == id ? it->second : 0.0;
}

double dot(const WeightedVector& a, const WeightedVector& b) noexcept {
  double sum = 0.0;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

IndexedCorpus::IndexedCorpus(AnnotationStrategy strategy, Vocabulary vocabulary,
                             std::vector<IndexedDocument> documents, std::vector<ExcludedDocument> excluded,
                             WeightingOptions options)
    : strategy_(strategy),
      vocabulary_(std::move(vocabulary)),
      documents_(std::move(documents)),
      excluded_(std::move(excluded)),
      options_(options) {
  if (documents_.empty()) throw InvariantError("an index needs at least one document");
  auto check_ref = [](const CloneMethodRef& ref) {
    if (ref.class_id == 0 || ref.start_line == 0 || ref.start_line > ref.end_line) {
      throw InvariantError("invalid method reference for doc " + std::to_string(ref.doc_id));
    }
  };
  for (const auto& doc : documents_) check_ref(doc.ref);
  for (const auto& ex : excluded_) check_ref(ex.ref);

  const std::size_t n_terms = vocabulary_.size();
  std::vector<std::uint32_t> df(n_terms, 0);
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    const auto& doc = documents_[d];
    if (d > 0 && !(documents_[d - 1].ref.doc_id < doc.ref.doc_id)) {
      throw InvariantError("documents must be ordered by ascending doc_id");
    }
    if (doc.term_ids.empty()) {
      throw InvariantError("document " + std::to_string(doc.ref.doc_id) + " has no terms");
    }
    for (std::size_t t = 0; t < doc.term_ids.size(); ++t) {
      const TermId id = doc.term_ids[t];
      if (id >= n_terms) throw InvariantError("term id out of range in document " + std::to_string(doc.ref.doc_id));
      if (t > 0 && !(doc.term_ids[t - 1] < id)) {
        throw InvariantError("term ids must be strictly ascending in document " + std::to_string(doc.ref.doc_id));
      }
      ++df[id];
    }
  }
  for (TermId id = 0; id < n_terms; ++id) {
    if (df[id] != vocabulary_.df(id)) {
      throw InvariantError("stored df of '" + vocabulary_.term(id) + "' does not match the documents");
    }
  }
  for (std::size_t e = 1; e < excluded_.size(); ++e) {
    if (!(excluded_[e - 1].ref.doc_id < excluded_[e].ref.doc_id)) {
      throw InvariantError("excluded documents must be ordered by ascending doc_id");
    }
  }
  for (const auto& ex : excluded_) {
    if (position_of(ex.ref.doc_id)) {
      throw InvariantError("doc " + std::to_string(ex.ref.doc_id) + " is both indexed and excluded");
    }
  }

  const std::uint32_t J = corpus_size();
  idf_.resize(n_terms);
  for (TermId id = 0; id < n_terms; ++id) idf_[id] = tfidf_weight(1, df[id], J, options_.idf_log_base);

  // Documents are duplicate-free, so every in-document tf is 1.
  vectors_.resize(documents_.size());
  postings_.assign(n_terms, {});
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    auto& v = vectors_[d];
    v.entries.reserve(documents_[d].term_ids.size());
    for (const TermId id : documents_[d].term_ids) v.entries.emplace_back(id, idf_[id]);
    normalize(v);
    for (const auto& [id, w] : v.entries) {
      if (w != 0.0) postings_[id].push_back(Posting{static_cast<std::uint32_t>(d), w});
    }
  }
}

std::optional<std::size_t> IndexedCorpus::position_of(DocId doc_id) const {
  const auto it = std::lower_bound(documents_.begin(), documents_.end(), doc_id,
                                   [](const IndexedDocument& d, DocId v) { return d.ref.doc_id < v; });
  if (it == documents_.end() || it->ref.doc_id != doc_id) return std::nullopt;
  return static_cast<std::size_t>(it - documents_.begin());
}

const ExcludedDocument* IndexedCorpus::find_excluded(DocId doc_id) const {
  const auto it = std::lower_bound(excluded_.begin(), excluded_.end(), doc_id,
                                   [](const ExcludedDocument& d, DocId v) { return d.ref.doc_id < v; });
  return it != excluded_.end() && it->ref.doc_id == doc_id ? &*it : nullptr;
}

const CloneMethodRef* IndexedCorpus::find_ref(DocId doc_id) const {
  if (const auto pos = position_of(doc_id)) return &documents_[*pos].ref;
  if (const auto* ex = find_excluded(doc_id)) return &ex->ref;
  return nullptr;
}

bool IndexedCorpus::has_class(ClassId class_id) const {
  return std::any_of(documents_.begin(), documents_.end(), [&](const auto& d) { return d.ref.class_id == class_id; }) ||
         std::any_of(excluded_.begin(), excluded_.end(), [&](const auto& d) { return d.ref.class_id == class_id; });
}

WeightedVector IndexedCorpus::vectorize(std::span<const std::string> terms) const {
  std::map<TermId, std::uint32_t> tf;
  for (const auto& term : terms) {
    if (const auto id = vocabulary_.find(term)) ++tf[*id];
  }
  WeightedVector v;
  v.entries.reserve(tf.size());
  for (const auto& [id, count] : tf) {
    v.entries.emplace_back(id, tfidf_weight(count, vocabulary_.df(id), corpus_size(), options_.idf_log_base));
  }
  normalize(v);
  return v;
}

bool IndexedCorpus::operator==(const IndexedCorpus& other) const {
  return strategy_ == other.strategy_ && vocabulary_ == other.vocabulary_ && documents_ == other.documents_ &&
         excluded_ == other.excluded_;
}

IndexedCorpus build_index(const std::vector<NaturalLanguageDocument>& documents,
                          std::span<const CloneMethodRef> refs, const AnnotationStrategy& strategy,
                          WeightingOptions options) {
  if (documents.size() != refs.size()) {
    throw BuildError("expected one document per method reference (" + std::to_string(refs.size()) +
                     " refs, " + std::to_string(documents.size()) + " documents)");
  }
  std::vector<const NaturalLanguageDocument*> by_id(documents.size(), nullptr);
  for (const auto& doc : documents) {
    if (doc.doc_id >= by_id.size() || by_id[doc.doc_id] != nullptr) {
      throw BuildError("doc_ids must be dense and unique (offending doc_id " + std::to_string(doc.doc_id) + ")");
    }
    if (refs[doc.doc_id].doc_id != doc.doc_id) {
      throw BuildError("reference for doc_id " + std::to_string(doc.doc_id) + " is out of place");
    }
    by_id[doc.doc_id] = &doc;
  }

  std::map<std::string, std::uint32_t> df;
  for (const auto* doc : by_id) {
    // Terms may arrive with duplicates from a foreign pipeline; count each once.
    std::vector<std::string_view> unique(doc->terms.begin(), doc->terms.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (const auto term : unique) ++df[std::string(term)];
  }

  std::vector<VocabularyEntry> entries;
  entries.reserve(df.size());
  for (const auto& [term, count] : df) entries.push_back(VocabularyEntry{term, count});
  Vocabulary vocabulary(std::move(entries));

  std::vector<IndexedDocument> indexed;
  std::vector<ExcludedDocument> excluded;
  for (const auto* doc : by_id) {
    const auto& ref = refs[doc->doc_id];
    if (doc->terms.empty()) {
      excluded.push_back(ExcludedDocument{ref, std::string(kEmptyDocumentReason)});
      continue;
    }
    IndexedDocument entry{ref, {}};
    entry.term_ids.reserve(doc->terms.size());
    for (const auto& term : doc->terms) entry.term_ids.push_back(*vocabulary.find(term));
    std::sort(entry.term_ids.begin(), entry.term_ids.end());
    entry.term_ids.erase(std::unique(entry.term_ids.begin(), entry.term_ids.end()), entry.term_ids.end());
    indexed.push_back(std::move(entry));
  }
  if (indexed.empty()) throw BuildError("every document is empty after normalization; nothing to index");

  return IndexedCorpus(strategy, std::move(vocabulary), std::move(indexed), std::move(excluded), options);
}

}  // namespace cloneseek
