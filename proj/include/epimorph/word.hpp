#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epimorph {

using Letter = std::uint8_t;

/// Letters are the dense integers 0..size-1. Glyphs only affect rendering
/// and parsing; the default glyph of letter i is the i-th character of
/// "0123456789abcdefghijklmnopqrstuvwxyz".
class Alphabet {
 public:
  static constexpr std::size_t max_size = 256;

  explicit Alphabet(std::size_t size = 1, std::string glyphs = {});

  std::size_t size() const noexcept { return size_; }
  bool contains(Letter a) const noexcept { return a < size_; }
  bool has_custom_glyphs() const noexcept { return !glyphs_.empty(); }

  char glyph(Letter a) const;
  std::optional<Letter> letter_of(char glyph) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_;
  std::string glyphs_;
};

/// A finite word over an Alphabet. Equality and ordering look at the letter
/// sequence only; the alphabet is carried for validation and rendering.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(std::vector<Letter> letters, Alphabet alphabet);

  /// Parses glyphs of `alphabet`.
  static Word parse(std::string_view text, const Alphabet& alphabet);
  /// Parses a digit string; the alphabet is {0..max digit} unless
  /// `alphabet_size` is given.
  static Word digits(std::string_view text, std::size_t alphabet_size = 0);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word slice(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix(std::size_t len) const { return slice(size() - len, len); }
  Word reversed() const;
  bool is_palindrome() const noexcept;
  bool is_prefix_of(const Word& other) const noexcept;
  bool is_suffix_of(const Word& other) const noexcept;

  void push_back(Letter a);
  Word& operator+=(const Word& other);
  Word& operator+=(Letter a);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// Same letters, reinterpreted over `alphabet` (validated).
  Word rebased(const Alphabet& alphabet) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Length first, then lexicographic by letter value.
bool shortlex_less(const Word& a, const Word& b) noexcept;

/// Start positions of every (possibly overlapping) occurrence of `needle`.
std::vector<std::size_t> find_occurrences(std::span<const Letter> hay,
                                          std::span<const Letter> needle);

bool is_palindrome(std::span<const Letter> letters) noexcept;

}  // namespace epimorph
