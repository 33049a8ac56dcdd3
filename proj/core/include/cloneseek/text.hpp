#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cloneseek {

/// Replaces every ill-formed UTF-8 sequence with U+FFFD. Well-formed input
/// is returned unchanged.
std::string sanitize_utf8(std::string_view bytes);

/// Splits text into lines, accepting LF and CRLF terminators. A trailing
/// terminator does not produce an empty final line.
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split_tabs(std::string_view line);

std::string to_lower_ascii(std::string_view s);

/// Appends `terms` to `out`, skipping any term already present in `out`.
void append_unique(std::vector<std::string>& out, const std::vector<std::string>& terms);

/// Reads a whole file; throws cloneseek::Error naming the path on failure.
std::string read_file(const std::string& path);

}  // namespace cloneseek
