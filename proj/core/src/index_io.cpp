#include "cloneseek/index_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>

#include "cloneseek/error.hpp"
#include "cloneseek/text.hpp"
#include <nlohmann/json.hpp>

namespace cloneseek {

namespace {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0x0F]);
  }
  return hex;
}

Json ref_fields(const CloneMethodRef& ref) {
  Json j;
  j["doc_id"] = ref.doc_id;
  j["class_id"] = ref.class_id;
  j["path"] = ref.path;
  j["start"] = ref.start_line;
  j["end"] = ref.end_line;
  return j;
}

Json to_json(const IndexedCorpus& corpus) {
  Json root;
  root["version"] = kIndexFormatVersion;
  root["strategy"] = std::string(to_string(corpus.strategy().kind()));
  if (const auto k = corpus.strategy().k()) {
    root["k"] = *k;
  } else {
    root["k"] = nullptr;
  }
  root["J"] = corpus.corpus_size();

  Json vocabulary = Json::array();
  for (const auto& entry : corpus.vocabulary().entries()) {
    vocabulary.push_back(Json{{"term", entry.term}, {"df", entry.df}});
  }
  root["vocabulary"] = std::move(vocabulary);

  Json docs = Json::array();
  for (const auto& doc : corpus.documents()) {
    Json j = ref_fields(doc.ref);
    j["term_ids"] = doc.term_ids;
    docs.push_back(std::move(j));
  }
  root["docs"] = std::move(docs);

  Json excluded = Json::array();
  for (const auto& ex : corpus.excluded()) {
    Json j = ref_fields(ex.ref);
    j["reason"] = ex.reason;
    excluded.push_back(std::move(j));
  }
  root["excluded"] = std::move(excluded);
  return root;
}

CloneMethodRef ref_from_json(const Json& j) {
  CloneMethodRef ref;
  ref.doc_id = j.at("doc_id").get<DocId>();
  ref.class_id = j.at("class_id").get<ClassId>();
  ref.path = j.at("path").get<std::string>();
  ref.start_line = j.at("start").get<std::uint32_t>();
  ref.end_line = j.at("end").get<std::uint32_t>();
  if (ref.class_id == 0 || ref.start_line == 0 || ref.start_line > ref.end_line) {
    throw IndexLoadError("invalid method reference for doc " + std::to_string(ref.doc_id));
  }
  return ref;
}

AnnotationStrategy strategy_from_json(const Json& root) {
  const auto kind = parse_annotation_kind(root.at("strategy").get<std::string>());
  if (!kind) throw IndexLoadError("unknown strategy " + root.at("strategy").dump());
  const Json& k = root.at("k");
  switch (*kind) {
    case AnnotationKind::baseline:
    case AnnotationKind::manual:
      if (!k.is_null()) throw IndexLoadError("k is only valid for the automatic strategy");
      return *kind == AnnotationKind::baseline ? AnnotationStrategy::baseline() : AnnotationStrategy::manual();
    case AnnotationKind::automatic:
      if (!k.is_number_unsigned() || k.get<std::uint64_t>() == 0) {
        throw IndexLoadError("automatic strategy requires a positive k");
      }
      return AnnotationStrategy::automatic(k.get<std::uint32_t>());
  }
  throw IndexLoadError("unknown strategy");
}

IndexedCorpus from_json(const Json& root) {
  if (!root.is_object()) throw IndexLoadError("index root is not a JSON object");
  const Json& version = root.at("version");
  if (!version.is_number_integer() || version.get<int>() != kIndexFormatVersion) {
    throw IndexLoadError("unsupported index version " + version.dump() + " (expected " +
                         std::to_string(kIndexFormatVersion) + ")");
  }

  std::vector<VocabularyEntry> entries;
  for (const auto& v : root.at("vocabulary")) {
    entries.push_back(VocabularyEntry{v.at("term").get<std::string>(), v.at("df").get<std::uint32_t>()});
  }
  std::vector<IndexedDocument> docs;
  for (const auto& d : root.at("docs")) {
    docs.push_back(IndexedDocument{ref_from_json(d), d.at("term_ids").get<std::vector<TermId>>()});
  }
  std::vector<ExcludedDocument> excluded;
  for (const auto& e : root.at("excluded")) {
    excluded.push_back(ExcludedDocument{ref_from_json(e), e.at("reason").get<std::string>()});
  }
  if (root.at("J").get<std::uint64_t>() != docs.size()) {
    throw IndexLoadError("J does not match the number of documents");
  }
  return IndexedCorpus(strategy_from_json(root), Vocabulary(std::move(entries)), std::move(docs),
                       std::move(excluded));
}

}  // namespace

std::string serialize_index(const IndexedCorpus& corpus) {
  Json root = to_json(corpus);
  const std::string canonical = root.dump();
  root["sha256"] = sha256_hex(canonical);
  return root.dump() + "\n";
}

IndexedCorpus parse_index(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw IndexLoadError(std::string("malformed index file: ") + e.what());
  }
  try {
    if (!root.is_object() || !root.contains("sha256") || !root["sha256"].is_string()) {
      throw IndexLoadError("index file has no sha256 field");
    }
    // Report a foreign version as such rather than as a checksum failure.
    if (const auto v = root.find("version"); v == root.end() || *v != kIndexFormatVersion) {
      throw IndexLoadError("unsupported index version " + (v == root.end() ? std::string("(missing)") : v->dump()) +
                           " (expected " + std::to_string(kIndexFormatVersion) + ")");
    }
    const auto stored = root["sha256"].get<std::string>();
    // sha256 must be the last field; everything before it is covered.
    if (root.items().begin() == root.items().end() || std::prev(root.end()).key() != "sha256") {
      throw IndexLoadError("sha256 must be the final field");
    }
    root.erase("sha256");
    if (sha256_hex(root.dump()) != stored) throw IndexLoadError("checksum mismatch");
    return from_json(root);
  } catch (const IndexLoadError&) {
    throw;
  } catch (const Json::exception& e) {
    throw IndexLoadError(std::string("malformed index file: ") + e.what());
  } catch (const Error& e) {
    throw IndexLoadError(std::string("inconsistent index file: ") + e.what());
  }
}

void save_index(const IndexedCorpus& corpus, const std::filesystem::path& path) {
  const std::string text = serialize_index(corpus);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error("cannot move index into place at " + path.string() + ": " + ec.message());
  }
}

IndexedCorpus load_index(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path.string());
  } catch (const Error& e) {
    throw IndexLoadError(e.what());
  }
  try {
    return parse_index(text);
  } catch (const IndexLoadError& e) {
    throw IndexLoadError(path.string() + ": " + e.what());
  }
}

}  // namespace cloneseek
