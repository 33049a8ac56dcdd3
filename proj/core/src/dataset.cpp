#include "cloneseek/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "cloneseek/error.hpp"
#include "cloneseek/text.hpp"

namespace cloneseek {

namespace {

template <typename Int>
std::optional<Int> parse_uint(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool is_skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

const CloneClass* Dataset::find_class(ClassId id) const {
  const auto it = std::lower_bound(classes.begin(), classes.end(), id,
                                   [](const CloneClass& c, ClassId v) { return c.class_id < v; });
  return it != classes.end() && it->class_id == id ? &*it : nullptr;
}

namespace {

Dataset parse_sources(std::string_view manifest_text, const std::string& manifest_origin,
                      std::string_view annotations_text, const std::string& annotations_origin) {
  Dataset dataset;
  std::map<ClassId, CloneClass> classes;

  const auto lines = split_lines(manifest_text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (is_skippable(lines[i])) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 4) {
      throw ParseError(manifest_origin, line_no, "expected class_id<TAB>path<TAB>start_line<TAB>end_line");
    }
    const auto class_id = parse_uint<ClassId>(fields[0]);
    if (!class_id || *class_id == 0) {
      throw ParseError(manifest_origin, line_no, "class_id must be a positive integer");
    }
    const auto path = trim(fields[1]);
    if (path.empty()) throw ParseError(manifest_origin, line_no, "empty path");
    const auto start = parse_uint<std::uint32_t>(fields[2]);
    const auto end = parse_uint<std::uint32_t>(fields[3]);
    if (!start || !end || *start == 0 || *end == 0) {
      throw ParseError(manifest_origin, line_no, "line numbers must be positive integers");
    }
    if (*start > *end) throw ParseError(manifest_origin, line_no, "inverted line range");

    CloneMethodRef ref;
    ref.doc_id = static_cast<DocId>(dataset.refs.size());
    ref.class_id = *class_id;
    ref.path = std::string(path);
    ref.start_line = *start;
    ref.end_line = *end;
    dataset.refs.push_back(std::move(ref));
    classes.try_emplace(*class_id, CloneClass{*class_id, std::nullopt});
  }

  const auto rows = split_lines(annotations_text);
  std::map<ClassId, std::size_t> annotated_at;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (is_skippable(rows[i])) continue;
    const auto tab = rows[i].find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(annotations_origin, line_no, "expected class_id<TAB>description");
    }
    const auto class_id = parse_uint<ClassId>(rows[i].substr(0, tab));
    if (!class_id || *class_id == 0) {
      throw ParseError(annotations_origin, line_no, "class_id must be a positive integer");
    }
    const auto description = trim(rows[i].substr(tab + 1));
    if (description.empty()) throw ParseError(annotations_origin, line_no, "empty description");
    if (const auto [it, inserted] = annotated_at.emplace(*class_id, line_no); !inserted) {
      throw ParseError(annotations_origin, line_no,
                       "duplicate class_id " + std::to_string(*class_id) + " (first on line " +
                           std::to_string(it->second) + ")");
    }
    auto& cls = classes.try_emplace(*class_id, CloneClass{*class_id, std::nullopt}).first->second;
    cls.description = std::string(description);
  }

  dataset.classes.reserve(classes.size());
  for (auto& [id, cls] : classes) dataset.classes.push_back(std::move(cls));
  return dataset;
}

}  // namespace

Dataset parse_manifest(std::string_view manifest_text, std::string_view annotations_text,
                       std::string_view origin) {
  const std::string where(origin);
  return parse_sources(manifest_text, where, annotations_text, where + " (annotations)");
}

Dataset load_manifest(const std::filesystem::path& manifest_path,
                      const std::optional<std::filesystem::path>& annotations_path) {
  const std::string manifest = sanitize_utf8(read_file(manifest_path.string()));
  std::string annotations;
  std::string annotations_origin;
  if (annotations_path) {
    annotations = sanitize_utf8(read_file(annotations_path->string()));
    annotations_origin = annotations_path->string();
  }
  return parse_sources(manifest, manifest_path.string(), annotations, annotations_origin);
}

std::string slice_lines(std::string_view file_text, std::uint32_t start_line, std::uint32_t end_line) {
  if (start_line == 0 || start_line > end_line) throw TraceError("invalid line range");
  const auto lines = split_lines(file_text);
  if (end_line > lines.size()) {
    throw TraceError("line range " + std::to_string(start_line) + ".." + std::to_string(end_line) +
                     " exceeds file length " + std::to_string(lines.size()));
  }
  std::string out;
  for (std::uint32_t n = start_line; n <= end_line; ++n) {
    if (n != start_line) out.push_back('\n');
    out.append(lines[n - 1]);
  }
  return out;
}

RawMethod trace(const CloneMethodRef& ref, const std::filesystem::path& source_root) {
  const auto file = source_root / ref.path;
  const auto describe = [&] {
    return "doc " + std::to_string(ref.doc_id) + " (" + ref.path + ":" + std::to_string(ref.start_line) +
           "-" + std::to_string(ref.end_line) + ")";
  };
  std::error_code ec;
  if (!std::filesystem::is_regular_file(file, ec)) {
    throw TraceError(describe() + ": missing file " + file.string());
  }
  std::string text;
  try {
    text = sanitize_utf8(read_file(file.string()));
  } catch (const Error& e) {
    throw TraceError(describe() + ": " + e.what());
  }
  try {
    return RawMethod{ref, slice_lines(text, ref.start_line, ref.end_line)};
  } catch (const TraceError& e) {
    throw TraceError(describe() + ": " + e.what());
  }
}

}  // namespace cloneseek
