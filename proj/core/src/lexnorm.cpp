#include "cloneseek/lexnorm.hpp"

#include <unordered_set>

#include "cloneseek/java_lexer.hpp"
#include "cloneseek/english_stemmer.hpp"

namespace cloneseek {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_lower(c) || is_upper(c) || is_digit(c); }

char lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

// Splits one run of ASCII letters and digits on case boundaries.
void split_run(std::string_view run, std::vector<std::string>& out) {
  std::string current;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const char c = run[i];
    if (i > 0 && is_upper(c)) {
      const char prev = run[i - 1];
      const bool after_lower_or_digit = is_lower(prev) || is_digit(prev);
      // "HTTPStatus": the last capital of an uppercase run opens the next word.
      const bool acronym_end = is_upper(prev) && i + 1 < run.size() && is_lower(run[i + 1]);
      if ((after_lower_or_digit || acronym_end) && !current.empty()) {
        out.push_back(std::move(current));
        current.clear();
      }
    }
    current.push_back(lower(c));
  }
  if (!current.empty()) out.push_back(std::move(current));
}

// Stems and appends `word` unless it is too short or already present.
void add_term(std::string_view word, std::vector<std::string>& terms, std::unordered_set<std::string>& seen) {
  if (word.size() < 2) return;
  std::string stemmed = english_stem(word);
  if (stemmed.size() < 2) return;
  if (seen.insert(stemmed).second) terms.push_back(std::move(stemmed));
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view ident) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < ident.size()) {
    if (!is_alnum(ident[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < ident.size() && is_alnum(ident[i])) ++i;
    split_run(ident.substr(start, i - start), words);
  }
  return words;
}

std::string stem(std::string_view word) { return english_stem(word); }

TokenDocument extract_identifiers(std::string_view source) {
  TokenDocument doc;
  std::unordered_set<std::string> seen;
  for (const auto& token : lex_java(source).tokens) {
    if (token.kind != TokenKind::identifier) continue;
    for (const auto& word : split_identifier(token.text)) add_term(word, doc.terms, seen);
  }
  return doc;
}

std::vector<std::string> extract_words(std::string_view prose, const StopwordSet& stopwords) {
  std::vector<std::string> terms;
  std::unordered_set<std::string> seen;
  std::size_t i = 0;
  while (i < prose.size()) {
    if (!is_alnum(prose[i])) {
      ++i;
      continue;
    }
    std::string word;
    while (i < prose.size() && is_alnum(prose[i])) word.push_back(lower(prose[i++]));
    if (stopwords.contains(word)) continue;
    add_term(word, terms, seen);
  }
  return terms;
}

}  // namespace cloneseek
