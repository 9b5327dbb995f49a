#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "epimorph/factor_index.hpp"
#include "epimorph/source.hpp"
#include "epimorph/word.hpp"

namespace epimorph {

/// Involutive antimorphisms. E exchanges the two letters of a binary
/// alphabet and reverses; RE is E applied after R, i.e. plain letter
/// exchange. E and RE are defined over binary alphabets only.
enum class Antimorphism { R, E, RE };

std::string_view to_string(Antimorphism kind);

Word apply_antimorphism(Antimorphism kind, const Word& w);
bool is_psi_palindrome(Antimorphism kind, const Word& w);

/// Longest suffix of w that is a palindrome; w must be nonempty.
Word longest_palindromic_suffix(const Word& w);

/// Shortest palindrome having w as a prefix.
Word palindromic_closure(const Word& w);

/// Palindromic tree (eertree) fed one letter at a time. Counts distinct
/// palindromic factors of the prefix read so far.
class PalindromeCounter {
 public:
  explicit PalindromeCounter(std::size_t alphabet_size);

  /// Appends a letter; returns true iff it created a new palindromic factor.
  bool push(Letter a);

  std::size_t length() const noexcept { return text_.size(); }
  /// Distinct palindromic factors, the empty word included.
  std::size_t distinct() const noexcept { return nodes_.size() - 1; }
  std::size_t defect() const noexcept { return length() + 1 - distinct(); }
  /// Length of the longest palindromic suffix of the text read so far.
  std::size_t longest_suffix_length() const noexcept;
  /// Histogram of distinct nonempty palindromes by length.
  std::vector<std::size_t> per_length() const;

 private:
  struct Node {
    std::int64_t len;
    std::uint32_t link;
  };

  std::uint32_t child(std::uint32_t node, Letter a) const {
    return edges_[std::size_t{node} * alphabet_size_ + a];
  }
  std::uint32_t fit(std::uint32_t node, Letter a) const;

  std::size_t alphabet_size_;
  std::vector<Node> nodes_;  // 0: imaginary root (len -1), 1: empty root
  std::vector<std::uint32_t> edges_;
  std::vector<Letter> text_;
  std::uint32_t last_ = 1;
};

struct PalindromeCensus {
  Word word;
  std::size_t distinct_palindromes = 0;  // includes the empty word
  std::size_t defect = 0;
  std::vector<std::size_t> per_length_counts;  // index = length; [0] counts the empty word
};

PalindromeCensus census(const Word& w);
inline std::size_t defect(const Word& w) { return census(w).defect; }

struct DefectPoint {
  std::size_t length;
  std::size_t defect;
  friend bool operator==(const DefectPoint&, const DefectPoint&) = default;
};

/// Defect of the prefixes of `src` at each (strictly increasing) checkpoint.
std::vector<DefectPoint> defect_profile(PrefixSource& src, std::span<const std::size_t> checkpoints);

/// Number of Psi-palindromic factors of length n.
std::size_t psi_palindromic_complexity(const FactorIndex& index, std::size_t n, Antimorphism kind);

/// Distinct palindromic factors of length <= maxLen centered at `center`
/// (nullopt = the empty center, i.e. even length; the empty word counts).
std::size_t palindromes_centered(const FactorIndex& index, std::optional<Letter> center,
                                 std::size_t max_len);

/// Manacher radii of a fixed text; answers "is text[pos, pos+len) a
/// palindrome" in constant time.
class PalindromeRadii {
 public:
  explicit PalindromeRadii(std::span<const Letter> text);
  bool is_palindrome(std::size_t pos, std::size_t len) const noexcept;

 private:
  std::vector<std::size_t> odd_;   // odd_[i]: max k with text[i-k, i+k] palindrome
  std::vector<std::size_t> even_;  // even_[i]: max k with text[i-k, i+k) palindrome
};

}  // namespace epimorph
