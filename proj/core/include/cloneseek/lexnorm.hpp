#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cloneseek/stopwords.hpp"

namespace cloneseek {

/// Ordered, duplicate-free list of stemmed terms describing one method or
/// annotation. Every term is at least two characters of [a-z0-9].
struct TokenDocument {
  std::vector<std::string> terms;

  bool empty() const noexcept { return terms.empty(); }
  bool operator==(const TokenDocument&) const = default;
};

/// Splits one identifier into lowercase words.
///
///   copyFile           -> copy, file
///   IOException        -> io, exception
///   getHTTPStatus_code -> get, http, status, code
///   e1                 -> e1
///
/// Any character other than an ASCII letter or digit (`_`, `$`, non-ASCII)
/// is a hard boundary and is dropped. Letter/digit transitions are kept
/// together; a digit followed by an uppercase letter starts a new word.
std::vector<std::string> split_identifier(std::string_view ident);

/// Snowball English stem of a lowercase word.
std::string stem(std::string_view word);

/// lex -> keep identifiers -> split -> drop single characters -> stem ->
/// deduplicate in first-occurrence order.
TokenDocument extract_identifiers(std::string_view source);

/// Prose pipeline: split on non-alphanumerics, lowercase, drop stopwords
/// (matched before stemming) and single characters, stem, deduplicate.
std::vector<std::string> extract_words(std::string_view prose, const StopwordSet& stopwords);

}  // namespace cloneseek
