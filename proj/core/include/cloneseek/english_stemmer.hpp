#pragma once

#include <string>
#include <string_view>

namespace cloneseek {

/// Snowball English ("Porter2") stemmer for lowercase ASCII words.
///
/// Uses the gener/commun/arsen region exceptions. Words shorter than three
/// characters are returned unchanged.
std::string english_stem(std::string_view word);

}  // namespace cloneseek
