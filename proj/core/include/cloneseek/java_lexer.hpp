#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cloneseek {

enum class TokenKind { identifier, keyword, literal, separator_or_operator, comment };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;

  bool operator==(const Token&) const = default;
};

struct LexResult {
  std::vector<Token> tokens;
  /// Recoverable problems such as an unterminated block comment.
  std::vector<std::string> warnings;
};

/// Lenient Java lexer. Accepts arbitrary text and never throws: an
/// unterminated string, char literal or block comment extends to the end
/// of input and is reported in `warnings`.
///
/// Classification:
///  - `//` and `/* */` comments (delimiters included) -> comment
///  - string, text-block, char and numeric literals, `true`, `false`,
///    `null` -> literal
///  - the 50 reserved words -> keyword
///  - other identifier-shaped lexemes (including contextual words such as
///    `var` or `record`) -> identifier
///  - everything else, one operator or separator per token
LexResult lex_java(std::string_view source);

bool is_java_reserved_word(std::string_view word);

}  // namespace cloneseek
