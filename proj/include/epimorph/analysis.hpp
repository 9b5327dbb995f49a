#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epimorph/factor_index.hpp"
#include "epimorph/morphism.hpp"
#include "epimorph/palindrome.hpp"
#include "epimorph/source.hpp"
#include "epimorph/word.hpp"

namespace epimorph {

// --- return words -----------------------------------------------------------

struct ReturnWordReport {
  Word factor;
  std::vector<Word> return_words;           // in order of first occurrence
  std::vector<Word> complete_return_words;  // return word · factor
  std::size_t occurrences = 0;
  std::size_t depth = 0;
  /// Set when the prefix certainly hides another return word: fewer than two
  /// occurrences, or the window after the last occurrence is already at
  /// least as long as every complete return word seen.
  bool truncated = false;
};

/// Throws not-in-language when w does not occur in prefix(depth).
ReturnWordReport return_words(PrefixSource& src, const Word& w, std::size_t depth);

/// Pairs of distinct return words sharing a length.
std::vector<std::pair<Word, Word>> equal_length_return_words(const ReturnWordReport& report);

/// u = g·psi(v): the recoding of u by its return words to a factor.
/// Derived letters are numbered by first occurrence and rendered 1, 2, ...
struct DerivatedWord {
  std::unique_ptr<PrefixSource> base;
  Word factor;
  Alphabet coding_alphabet;
  std::unique_ptr<PrefixSource> derived;
  Morphism psi;
  Word g;
};

/// Needs two occurrences of w in prefix(depth) (insufficient-context
/// otherwise). Reading the derived source past what prefix(depth) fixes
/// throws insufficient-context if a return word outside psi turns up.
DerivatedWord derivated_word(PrefixSource& src, const Word& w, std::size_t depth);

// --- verdicts ---------------------------------------------------------------

enum class Outcome { pass, fail, precondition_violation };

std::string_view to_string(Outcome outcome);

/// A checker result relative to a prefix depth: PASS is evidence at that
/// depth, FAIL comes with a counterexample factor.
struct Verdict {
  std::string check;
  std::string parameters;
  std::size_t depth = 0;
  Outcome outcome = Outcome::pass;
  std::optional<Word> counterexample;
  std::string detail;
  bool truncated = false;

  bool passed() const noexcept { return outcome == Outcome::pass; }
};

/// Every factor with exactly two occurrences of w or R(w), as prefix and
/// suffix, is a palindrome, for all w with |w| <= maxLen.
Verdict check_rich_crw(const FactorIndex& index, std::size_t max_len);

/// Bilateral-order criterion on witnessed bispecial factors up to maxLen:
/// b(w) = #Pext(w) - 1 for palindromes, 0 otherwise. Needs closure under
/// reversal up to maxLen (reported as precondition_violation). Factors whose
/// extension data touch the prefix boundary are skipped.
Verdict check_rich_bispecial(const FactorIndex& index, std::size_t max_len);

/// Witnessed palindromic extensions apa of the palindromic factor p.
std::vector<Word> pext(const FactorIndex& index, const Word& p);

/// First factor f, |f| <= maxLen, whose image under kind is not a factor.
std::optional<Word> closure_gap(const FactorIndex& index, Antimorphism kind, std::size_t max_len);
bool closed_under(const FactorIndex& index, Antimorphism kind, std::size_t max_len);

struct HRow {
  std::size_t n;
  long complexity_side;  // C(n+1) - C(n) + 4
  long palindrome_side;  // P^R(n+1) + P^R(n) + P^E(n+1) + P^E(n)
  std::size_t depth;
  bool equal() const noexcept { return complexity_side == palindrome_side; }
};

struct HProfile {
  std::vector<HRow> rows;
  bool h_rich() const noexcept;
  /// Least n0 such that every row with n >= n0 is an equality.
  std::optional<std::size_t> equality_from() const noexcept;
};

/// Rows for 1 <= n <= nMax. The source must be binary and closed under R, E
/// and RE up to nMax + 1 (precondition-violation otherwise).
HProfile h_profile(const FactorIndex& index, std::size_t n_max);

/// The letter a such that aw is followed, and wa preceded, by at least two
/// letters (or the letter of the only both-sided extension awa).
std::optional<Letter> extension_pivot(const FactorIndex& index, const Word& w);

/// For the palindromic factor w and a set E containing its pivot a: every
/// factor xuy holding exactly two E-extensions of w, as prefix and suffix,
/// has u a palindrome.
Verdict e_extension_palindromicity(const FactorIndex& index, const Word& w,
                                   std::span<const Letter> e_set, Letter a);

/// For a proper subset A': every gap p in a factor xpy, x, y in A', p free of
/// A', is a palindrome.
Verdict letter_gap_palindromicity(const FactorIndex& index, std::span<const Letter> subset);

/// Complete return words of palindromic factors with minLen <= |w| <= maxLen
/// are palindromes.
Verdict palindromic_crw_check(const FactorIndex& index, std::size_t min_len, std::size_t max_len);

}  // namespace epimorph
