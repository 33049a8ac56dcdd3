#include "cloneseek/stopwords.hpp"

#include "cloneseek/text.hpp"

namespace cloneseek {

namespace detail {
extern const std::string_view kDefaultStopwordsText;
}  // namespace detail

const StopwordSet& StopwordSet::english() {
  static const StopwordSet kEnglish = parse(detail::kDefaultStopwordsText);
  return kEnglish;
}

StopwordSet StopwordSet::parse(std::string_view text) {
  StopwordSet set;
  for (auto line : split_lines(text)) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) set.insert(line);
  }
  return set;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
  return parse(sanitize_utf8(read_file(path.string())));
}

bool StopwordSet::contains(std::string_view word) const { return words_.contains(to_lower_ascii(word)); }

void StopwordSet::insert(std::string_view word) { words_.insert(to_lower_ascii(word)); }

}  // namespace cloneseek
