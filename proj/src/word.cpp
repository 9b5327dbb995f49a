#include "epimorph/word.hpp"

#include <algorithm>
#include <set>

#include "epimorph/error.hpp"

namespace epimorph {

namespace {

constexpr std::string_view kDefaultGlyphs = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_in_language: return "not-in-language";
    case ErrorKind::insufficient_context: return "insufficient-context";
    case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

Alphabet::Alphabet(std::size_t size, std::string glyphs)
    : size_(size), glyphs_(std::move(glyphs)) {
  if (size_ == 0 || size_ > max_size) {
    throw Error(ErrorKind::invalid_argument,
                "alphabet size must lie in 1.." + std::to_string(max_size));
  }
  if (!glyphs_.empty()) {
    if (glyphs_.size() != size_) {
      throw Error(ErrorKind::invalid_argument, "glyph map must cover every letter");
    }
    std::set<char> seen(glyphs_.begin(), glyphs_.end());
    if (seen.size() != glyphs_.size()) {
      throw Error(ErrorKind::invalid_argument, "glyph map is not injective");
    }
  }
}

char Alphabet::glyph(Letter a) const {
  if (!glyphs_.empty()) return glyphs_.at(a);
  return a < kDefaultGlyphs.size() ? kDefaultGlyphs[a] : '?';
}

std::optional<Letter> Alphabet::letter_of(char glyph) const {
  std::string_view table = glyphs_.empty() ? kDefaultGlyphs : std::string_view(glyphs_);
  auto pos = table.find(glyph);
  if (pos == std::string_view::npos || pos >= size_) return std::nullopt;
  return static_cast<Letter>(pos);
}

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(std::move(alphabet)) {
  for (Letter a : letters_) {
    if (!alphabet_.contains(a)) {
      throw Error(ErrorKind::alphabet_mismatch,
                  "letter " + std::to_string(a) + " outside alphabet of size " +
                      std::to_string(alphabet_.size()));
    }
  }
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto a = alphabet.letter_of(c);
    if (!a) {
      throw Error(ErrorKind::parse_error, std::string("unknown glyph '") + c + "'");
    }
    letters.push_back(*a);
  }
  Word w(alphabet);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::digits(std::string_view text, std::size_t alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  std::size_t top = 0;
  for (char c : text) {
    auto pos = kDefaultGlyphs.find(c);
    if (pos == std::string_view::npos) {
      throw Error(ErrorKind::parse_error, std::string("not a letter glyph: '") + c + "'");
    }
    letters.push_back(static_cast<Letter>(pos));
    top = std::max(top, pos + 1);
  }
  return Word(std::move(letters), Alphabet(alphabet_size ? alphabet_size : std::max<std::size_t>(top, 1)));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw Error(ErrorKind::invalid_argument, "slice out of range");
  }
  Word w(alphabet_);
  w.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
  return w;
}

Word Word::reversed() const {
  Word w(alphabet_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

bool Word::is_palindrome() const noexcept { return epimorph::is_palindrome(letters_); }

bool Word::is_prefix_of(const Word& other) const noexcept {
  return size() <= other.size() && std::equal(begin(), end(), other.begin());
}

bool Word::is_suffix_of(const Word& other) const noexcept {
  return size() <= other.size() && std::equal(begin(), end(), other.end() - size());
}

void Word::push_back(Letter a) {
  if (!alphabet_.contains(a)) {
    throw Error(ErrorKind::alphabet_mismatch, "letter outside alphabet");
  }
  letters_.push_back(a);
}

Word& Word::operator+=(const Word& other) {
  for (Letter a : other.letters_) {
    if (!alphabet_.contains(a)) {
      throw Error(ErrorKind::alphabet_mismatch, "concatenation across alphabets");
    }
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::operator+=(Letter a) {
  push_back(a);
  return *this;
}

Word Word::rebased(const Alphabet& alphabet) const { return Word(letters_, alphabet); }

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Letter a : letters_) out.push_back(alphabet_.glyph(a));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.empty()) return os << "ε";
  return os << w.str();
}

bool shortlex_less(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::size_t> find_occurrences(std::span<const Letter> hay,
                                          std::span<const Letter> needle) {
  std::vector<std::size_t> out;
  if (needle.empty()) {
    out.resize(hay.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
  if (needle.size() > hay.size()) return out;
  // Knuth-Morris-Pratt over the needle's failure function.
  std::vector<std::size_t> fail(needle.size(), 0);
  for (std::size_t i = 1, k = 0; i < needle.size(); ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < hay.size(); ++i) {
    while (k > 0 && hay[i] != needle[k]) k = fail[k - 1];
    if (hay[i] == needle[k]) ++k;
    if (k == needle.size()) {
      out.push_back(i + 1 - k);
      k = fail[k - 1];
    }
  }
  return out;
}

bool is_palindrome(std::span<const Letter> letters) noexcept {
  for (std::size_t i = 0, j = letters.size(); i + 1 < j; ++i, --j) {
    if (letters[i] != letters[j - 1]) return false;
  }
  return true;
}

}  // namespace epimorph
