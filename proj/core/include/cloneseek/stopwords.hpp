#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace cloneseek {

/// Case-insensitive set of words removed by word extraction.
class StopwordSet {
 public:
  StopwordSet() = default;

  /// The embedded English list (core/data/english_stopwords.txt).
  static const StopwordSet& english();

  /// Parses one word per line; `#` starts a comment; blank lines ignored.
  static StopwordSet parse(std::string_view text);
  static StopwordSet from_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  void insert(std::string_view word);

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace cloneseek
