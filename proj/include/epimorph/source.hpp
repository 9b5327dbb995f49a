#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "epimorph/word.hpp"

namespace epimorph {

/// Produces arbitrarily long prefixes of one infinite word. prefix(n) is a
/// prefix of prefix(m) for n <= m, and the same construction always yields
/// the same word. Sources are single-consumer; clone() for another reader.
class PrefixSource {
 public:
  virtual ~PrefixSource() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Exactly n letters.
  Word prefix(std::size_t n);
  /// View of the first n letters; valid until the next call on this source.
  std::span<const Letter> view(std::size_t n);
  Letter at(std::size_t i) { return view(i + 1)[i]; }

  virtual std::unique_ptr<PrefixSource> clone() const = 0;

 protected:
  explicit PrefixSource(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  PrefixSource(const PrefixSource&) = default;

  /// Grows buffer_ to at least n letters (overshooting is fine).
  virtual void extend(std::size_t n) = 0;

  std::vector<Letter> buffer_;

 private:
  Alphabet alphabet_;
};

}  // namespace epimorph
