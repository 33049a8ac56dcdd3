#include "cloneseek/java_lexer.hpp"

#include <algorithm>
#include <array>

namespace cloneseek {

namespace {

constexpr std::array<std::string_view, 50> kReservedWords = {
    "abstract", "assert",       "boolean",   "break",      "byte",      "case",      "catch",
    "char",     "class",        "const",     "continue",   "default",   "do",        "double",
    "else",     "enum",         "extends",   "final",      "finally",   "float",     "for",
    "goto",     "if",           "implements", "import",    "instanceof", "int",      "interface",
    "long",     "native",       "new",       "package",    "private",   "protected", "public",
    "return",   "short",        "static",    "strictfp",   "super",     "switch",    "synchronized",
    "this",     "throw",        "throws",    "transient",  "try",       "void",      "volatile",
    "while"};

// Longest first so a linear scan implements maximal munch.
constexpr std::array<std::string_view, 25> kMultiCharOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",   ">=",  "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", ">>"};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      const unsigned char c = peek();
      if (is_space(c)) {
        ++pos_;
      } else if (starts_with("//")) {
        line_comment();
      } else if (starts_with("/*")) {
        block_comment();
      } else if (starts_with("\"\"\"")) {
        text_block();
      } else if (c == '"' || c == '\'') {
        quoted(static_cast<char>(c));
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        number();
      } else if (is_ident_start(c)) {
        word();
      } else {
        op();
      }
    }
    return std::move(result_);
  }

 private:
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? static_cast<unsigned char>(src_[pos_ + ahead]) : 0;
  }

  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  void emit(TokenKind kind, std::size_t start) {
    result_.tokens.push_back(Token{kind, std::string(src_.substr(start, pos_ - start))});
  }

  void warn(std::string message, std::size_t start) {
    result_.warnings.push_back(std::move(message) + " at offset " + std::to_string(start));
  }

  void line_comment() {
    const std::size_t start = pos_;
    const auto nl = src_.find('\n', pos_);
    pos_ = nl == std::string_view::npos ? src_.size() : nl;
    // A CRLF terminator is not part of the comment.
    if (pos_ > start && src_[pos_ - 1] == '\r') --pos_;
    emit(TokenKind::comment, start);
  }

  void block_comment() {
    const std::size_t start = pos_;
    const auto close = src_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) {
      pos_ = src_.size();
      warn("unterminated block comment", start);
    } else {
      pos_ = close + 2;
    }
    emit(TokenKind::comment, start);
  }

  void text_block() {
    const std::size_t start = pos_;
    pos_ += 3;
    while (pos_ < src_.size()) {
      if (peek() == '\\') {
        pos_ += 2;
      } else if (starts_with("\"\"\"")) {
        pos_ += 3;
        emit(TokenKind::literal, start);
        return;
      } else {
        ++pos_;
      }
    }
    pos_ = src_.size();
    warn("unterminated text block", start);
    emit(TokenKind::literal, start);
  }

  void quoted(char quote) {
    const std::size_t start = pos_;
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        pos_ += 2;
      } else if (c == quote) {
        ++pos_;
        emit(TokenKind::literal, start);
        return;
      } else {
        ++pos_;
      }
    }
    pos_ = src_.size();
    warn(quote == '"' ? "unterminated string literal" : "unterminated character literal", start);
    emit(TokenKind::literal, start);
  }

  void number() {
    const std::size_t start = pos_;
    const bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < src_.size()) {
      const unsigned char c = peek();
      if (is_ident_part(c) || c == '.') {
        ++pos_;
      } else if ((c == '+' || c == '-') && pos_ > start) {
        const unsigned char prev = static_cast<unsigned char>(src_[pos_ - 1]);
        const bool exponent = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
        if (!exponent) break;
        ++pos_;
      } else {
        break;
      }
    }
    emit(TokenKind::literal, start);
  }

  void word() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_part(peek())) ++pos_;
    const auto text = src_.substr(start, pos_ - start);
    TokenKind kind = TokenKind::identifier;
    if (text == "true" || text == "false" || text == "null") {
      kind = TokenKind::literal;
    } else if (is_java_reserved_word(text)) {
      kind = TokenKind::keyword;
    }
    emit(kind, start);
  }

  void op() {
    const std::size_t start = pos_;
    for (const auto candidate : kMultiCharOperators) {
      if (starts_with(candidate)) {
        pos_ += candidate.size();
        emit(TokenKind::separator_or_operator, start);
        return;
      }
    }
    ++pos_;
    emit(TokenKind::separator_or_operator, start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  LexResult result_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::keyword: return "keyword";
    case TokenKind::literal: return "literal";
    case TokenKind::separator_or_operator: return "separator_or_operator";
    case TokenKind::comment: return "comment";
  }
  return "unknown";
}

bool is_java_reserved_word(std::string_view word) {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) != kReservedWords.end();
}

LexResult lex_java(std::string_view source) { return Lexer(source).run(); }

}  // namespace cloneseek
