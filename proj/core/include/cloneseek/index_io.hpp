#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cloneseek/index.hpp"

namespace cloneseek {

inline constexpr int kIndexFormatVersion = 1;

/// Canonical JSON form of an index, terminated by a newline. A pure function
/// of the corpus: equal corpora serialize to identical bytes.
///
/// Fields, in order: version, strategy, k, J, vocabulary [{term, df}],
/// docs [{doc_id, class_id, path, start, end, term_ids}],
/// excluded [{doc_id, class_id, path, start, end, reason}], sha256.
/// sha256 is the hex digest of the compact serialization of all preceding
/// fields.
std::string serialize_index(const IndexedCorpus& corpus);

/// Inverse of serialize_index. Weights are recomputed, never read. Throws
/// IndexLoadError on malformed JSON, checksum or version mismatch, or any
/// violated invariant.
IndexedCorpus parse_index(std::string_view text);

/// Writes to a sibling temporary file and renames it into place, so a
/// failed save never leaves a partial index behind.
void save_index(const IndexedCorpus& corpus, const std::filesystem::path& path);
IndexedCorpus load_index(const std::filesystem::path& path);

}  // namespace cloneseek
