#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cloneseek {

using ClassId = std::uint32_t;
using DocId = std::uint32_t;

/// A group of methods implementing one functionality.
struct CloneClass {
  ClassId class_id = 0;
  /// Curated natural-language description; source of manual annotation.
  std::optional<std::string> description;

  bool operator==(const CloneClass&) const = default;
};

/// Pointer into a source tree: a 1-based inclusive line range of one file.
struct CloneMethodRef {
  DocId doc_id = 0;
  ClassId class_id = 0;
  std::string path;
  std::uint32_t start_line = 0;
  std::uint32_t end_line = 0;

  bool operator==(const CloneMethodRef&) const = default;
};

struct RawMethod {
  CloneMethodRef ref;
  std::string source;
};

struct Dataset {
  /// Sorted by class_id.
  std::vector<CloneClass> classes;
  /// In manifest row order; refs[i].doc_id == i.
  std::vector<CloneMethodRef> refs;

  const CloneClass* find_class(ClassId id) const;
};

/// Parses a manifest (`class_id<TAB>path<TAB>start<TAB>end`, `#` comments)
/// and an optional annotations file (`class_id<TAB>description`).
///
/// Classes are the union of the ids named by either file. Throws ParseError
/// on a malformed row, an inverted line range, or a class annotated twice.
Dataset load_manifest(const std::filesystem::path& manifest_path,
                      const std::optional<std::filesystem::path>& annotations_path = std::nullopt);

/// Same as load_manifest but over in-memory text; `origin` names the
/// source in error messages.
Dataset parse_manifest(std::string_view manifest_text, std::string_view annotations_text = {},
                       std::string_view origin = "<manifest>");

/// Returns lines start_line..end_line of `source_root / ref.path`, joined by
/// LF. Invalid UTF-8 is replaced with U+FFFD; CRLF is accepted.
/// Throws TraceError if the file is missing or the range runs past its end.
RawMethod trace(const CloneMethodRef& ref, const std::filesystem::path& source_root);

/// Slices already-loaded file text; shared by trace() and tests.
std::string slice_lines(std::string_view file_text, std::uint32_t start_line, std::uint32_t end_line);

}  // namespace cloneseek
