#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epimorph/word.hpp"

namespace epimorph {

using LetterPair = std::pair<Letter, Letter>;

/// Observed extensions of a factor. Occurrences touching the start (end) of
/// the source contribute no left (right) letter.
struct ExtensionReport {
  Word factor;
  std::vector<Letter> left;            // sorted
  std::vector<Letter> right;           // sorted
  std::vector<LetterPair> both_sided;  // sorted
  std::size_t occurrences = 0;
  std::size_t interior_occurrences = 0;  // occurrences with both neighbours present

  /// True when some left or right letter is seen only at an occurrence cut
  /// off by the source boundary, i.e. not explained by a both-sided extension.
  bool touches_boundary() const;
};

enum class FactorKind { ordinary, left_special, right_special, bispecial };

std::string_view to_string(FactorKind kind);

/// All factors of a finite word up to a fixed length, with occurrence lists.
/// Immutable after construction.
class FactorIndex {
 public:
  FactorIndex(Word source, std::size_t max_len);

  const Word& source() const noexcept { return source_; }
  std::size_t max_len() const noexcept { return levels_.size() - 1; }
  std::size_t depth() const noexcept { return source_.size(); }

  bool contains(std::span<const Letter> f) const;
  bool contains(const Word& f) const { return contains(f.letters()); }

  /// Increasing start positions of `f`; throws not-in-language.
  std::span<const std::uint32_t> occurrences(const Word& f) const;

  /// C(n) as observed in the source.
  std::size_t complexity(std::size_t n) const;

  /// Distinct factors of length n in lexicographic order.
  std::vector<Word> factors(std::size_t n) const;

  /// Visits each distinct factor of length n once, in order of first occurrence.
  void for_each_factor(std::size_t n,
                       const std::function<void(std::span<const Letter>,
                                                std::span<const std::uint32_t>)>& visit) const;

  ExtensionReport extensions(const Word& f) const;

 private:
  struct Level {
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> occurrences;  // by id; first entry is first occurrence
  };

  const Level& level(std::size_t n) const;
  std::span<const std::uint32_t> find(std::span<const Letter> f) const;

  Word source_;
  std::vector<Level> levels_;
};

/// Builds the index; maxLen must not exceed |w| (invalid-argument).
FactorIndex build_index(const Word& w, std::size_t max_len);

ExtensionReport extensions(const FactorIndex& index, const Word& f);
FactorKind classify_factor(const FactorIndex& index, const Word& f);

/// b(f) = #{afb} - #Rext(f) - #Lext(f) + 1, from observed extensions.
/// Throws insufficient-context when no both-sided extension was observed.
long bilateral_order(const FactorIndex& index, const Word& f);

std::size_t factor_complexity(const FactorIndex& index, std::size_t n);

/// Bispecial factors of length <= maxLen in shortlex order.
std::vector<Word> enumerate_bispecial(const FactorIndex& index, std::size_t max_len);

}  // namespace epimorph
