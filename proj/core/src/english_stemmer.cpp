#include "cloneseek/english_stemmer.hpp"

#include <array>
#include <utility>

namespace cloneseek {
namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_double(std::string_view s) {
  return s == "bb" || s == "dd" || s == "ff" || s == "gg" || s == "mm" || s == "nn" ||
         s == "pp" || s == "rr" || s == "tt";
}

bool is_valid_li(char c) {
  return std::string_view("cdeghkmnrt").find(c) != std::string_view::npos;
}

class Word {
 public:
  explicit Word(std::string_view w) : s_(w) {}

  std::string& str() { return s_; }
  std::size_t size() const { return s_.size(); }

  // Longest suffix from `list` that the word ends with, or empty.
  template <std::size_t N>
  std::string_view longest(const std::array<std::string_view, N>& list) const {
    std::string_view best;
    for (std::string_view suf : list)
      if (suf.size() > best.size() && ends(suf)) best = suf;
    return best;
  }

  bool ends(std::string_view suf) const {
    return s_.size() >= suf.size() && std::string_view(s_).substr(s_.size() - suf.size()) == suf;
  }

  void replace_tail(std::size_t n, std::string_view with) {
    s_.replace(s_.size() - n, n, with);
  }

  bool has_vowel_before(std::size_t end) const {
    for (std::size_t i = 0; i < end; ++i)
      if (is_vowel(s_[i])) return true;
    return false;
  }

  // Short syllable ending exactly at `end`.
  bool short_syllable_at(std::size_t end) const {
    if (end >= 3) {
      char c = s_[end - 1];
      if (!is_vowel(c) && c != 'w' && c != 'x' && c != 'Y' && is_vowel(s_[end - 2]) &&
          !is_vowel(s_[end - 3]))
        return true;
    }
    return end == 2 && is_vowel(s_[0]) && !is_vowel(s_[1]);
  }

  void mark_regions() {
    std::size_t n = s_.size();
    p1 = p2 = n;
    std::string_view v(s_);
    std::size_t start;
    if (v.starts_with("gener") || v.starts_with("arsen")) {
      start = p1 = 5;
    } else if (v.starts_with("commun")) {
      start = p1 = 6;
    } else {
      p1 = region_after(0);
      start = p1;
    }
    p2 = region_after(start);
    if (p1 > n) p1 = n;
  }

  std::size_t p1 = 0;
  std::size_t p2 = 0;

 private:
  std::size_t region_after(std::size_t from) const {
    for (std::size_t i = from + 1; i < s_.size(); ++i)
      if (!is_vowel(s_[i]) && is_vowel(s_[i - 1])) return i + 1;
    return s_.size();
  }

  std::string s_;
};

const std::array<std::pair<std::string_view, std::string_view>, 18> kExceptions1{{
    {"skis", "ski"},     {"skies", "sky"},     {"dying", "die"},   {"lying", "lie"},
    {"tying", "tie"},    {"idly", "idl"},      {"gently", "gentl"}, {"ugly", "ugli"},
    {"early", "earli"},  {"only", "onli"},     {"singly", "singl"}, {"sky", "sky"},
    {"news", "news"},    {"howe", "howe"},     {"atlas", "atlas"},  {"cosmos", "cosmos"},
    {"bias", "bias"},    {"andes", "andes"},
}};

const std::array<std::string_view, 8> kExceptions2{
    "inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"};

void step1a(Word& w) {
  static constexpr std::array<std::string_view, 3> apos{"'", "'s'", "'s"};
  if (auto suf = w.longest(apos); !suf.empty()) w.replace_tail(suf.size(), "");

  static constexpr std::array<std::string_view, 6> list{"sses", "ied", "ies", "s", "us", "ss"};
  std::string_view suf = w.longest(list);
  std::size_t base = w.size() - suf.size();
  if (suf == "sses") {
    w.replace_tail(4, "ss");
  } else if (suf == "ied" || suf == "ies") {
    w.replace_tail(3, base >= 2 ? "i" : "ie");
  } else if (suf == "s") {
    if (base >= 1 && w.has_vowel_before(base - 1)) w.replace_tail(1, "");
  }
}

void step1b(Word& w) {
  static constexpr std::array<std::string_view, 6> list{"eed", "eedly", "ed", "edly", "ing", "ingly"};
  std::string_view suf = w.longest(list);
  if (suf.empty()) return;
  std::size_t base = w.size() - suf.size();
  if (suf == "eed" || suf == "eedly") {
    if (base >= w.p1) w.replace_tail(suf.size(), "ee");
    return;
  }
  if (!w.has_vowel_before(base)) return;
  w.replace_tail(suf.size(), "");
  std::string_view s(w.str());
  std::size_t n = s.size();
  std::string_view tail2 = n >= 2 ? s.substr(n - 2) : std::string_view{};
  if (tail2 == "at" || tail2 == "bl" || tail2 == "iz") {
    w.str() += 'e';
  } else if (is_double(tail2)) {
    w.replace_tail(1, "");
  } else if (w.p1 >= n && w.short_syllable_at(n)) {
    w.str() += 'e';
  }
}

void step1c(Word& w) {
  std::string& s = w.str();
  std::size_t n = s.size();
  if (n > 2 && (s[n - 1] == 'y' || s[n - 1] == 'Y') && !is_vowel(s[n - 2])) s[n - 1] = 'i';
}

void step2(Word& w) {
  static constexpr std::array<std::string_view, 24> list{
      "tional", "enci",  "anci",  "abli",    "entli", "izer",    "ization", "ational",
      "ation",  "ator",  "alism", "aliti",   "alli",  "fulness", "ousli",   "ousness",
      "iveness", "iviti", "biliti", "bli",   "ogi",   "fulli",   "lessli",  "li"};
  std::string_view suf = w.longest(list);
  if (suf.empty()) return;
  std::size_t base = w.size() - suf.size();
  if (base < w.p1) return;
  const std::string& s = w.str();
  std::string_view rep;
  if (suf == "tional") rep = "tion";
  else if (suf == "enci") rep = "ence";
  else if (suf == "anci") rep = "ance";
  else if (suf == "abli") rep = "able";
  else if (suf == "entli") rep = "ent";
  else if (suf == "izer" || suf == "ization") rep = "ize";
  else if (suf == "ational" || suf == "ation" || suf == "ator") rep = "ate";
  else if (suf == "alism" || suf == "aliti" || suf == "alli") rep = "al";
  else if (suf == "fulness" || suf == "fulli") rep = "ful";
  else if (suf == "ousli" || suf == "ousness") rep = "ous";
  else if (suf == "iveness" || suf == "iviti") rep = "ive";
  else if (suf == "biliti" || suf == "bli") rep = "ble";
  else if (suf == "lessli") rep = "less";
  else if (suf == "ogi") {
    if (base == 0 || s[base - 1] != 'l') return;
    rep = "og";
  } else {  // li
    if (base == 0 || !is_valid_li(s[base - 1])) return;
  }
  w.replace_tail(suf.size(), rep);
}

void step3(Word& w) {
  static constexpr std::array<std::string_view, 9> list{
      "tional", "ational", "alize", "icate", "iciti", "ical", "ful", "ness", "ative"};
  std::string_view suf = w.longest(list);
  if (suf.empty()) return;
  std::size_t base = w.size() - suf.size();
  if (base < w.p1) return;
  if (suf == "tional") w.replace_tail(6, "tion");
  else if (suf == "ational") w.replace_tail(7, "ate");
  else if (suf == "alize") w.replace_tail(5, "al");
  else if (suf == "icate" || suf == "iciti" || suf == "ical") w.replace_tail(suf.size(), "ic");
  else if (suf == "ful" || suf == "ness") w.replace_tail(suf.size(), "");
  else if (base >= w.p2) w.replace_tail(5, "");  // ative
}

void step4(Word& w) {
  static constexpr std::array<std::string_view, 18> list{
      "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
      "ment", "ent",  "ism",  "ate", "iti", "ous",  "ive",  "ize", "ion"};
  std::string_view suf = w.longest(list);
  if (suf.empty()) return;
  std::size_t base = w.size() - suf.size();
  if (base < w.p2) return;
  if (suf == "ion") {
    if (base == 0) return;
    char c = w.str()[base - 1];
    if (c != 's' && c != 't') return;
  }
  w.replace_tail(suf.size(), "");
}

void step5(Word& w) {
  std::size_t n = w.size();
  if (n == 0) return;
  std::size_t base = n - 1;
  char last = w.str()[base];
  if (last == 'e') {
    if (base >= w.p2 || (base >= w.p1 && !w.short_syllable_at(base))) w.replace_tail(1, "");
  } else if (last == 'l') {
    if (base >= w.p2 && base > 0 && w.str()[base - 1] == 'l') w.replace_tail(1, "");
  }
}

}  // namespace

std::string english_stem(std::string_view word) {
  for (const auto& [from, to] : kExceptions1)
    if (word == from) return std::string(to);
  if (word.size() < 3) return std::string(word);

  Word w(word);
  std::string& s = w.str();
  if (!s.empty() && s[0] == '\'') s.erase(0, 1);
  bool y_found = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'y' && (i == 0 || is_vowel(s[i - 1]))) {
      s[i] = 'Y';
      y_found = true;
    }
  }
  w.mark_regions();

  step1a(w);
  bool stop = false;
  for (std::string_view e : kExceptions2)
    if (w.str() == e) stop = true;
  if (!stop) {
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5(w);
  }

  if (y_found)
    for (char& c : w.str())
      if (c == 'Y') c = 'y';
  return std::move(w.str());
}

}  // namespace cloneseek
