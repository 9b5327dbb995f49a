#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "epimorph/factor_index.hpp"
#include "epimorph/morphism.hpp"
#include "epimorph/source.hpp"
#include "epimorph/word.hpp"

namespace epimorph {

/// Seed plus eventually periodic directive sequence preperiod·period^ω.
/// Directive letters are numbered from 1: delta(1) is the first letter.
struct DirectiveSpec {
  Word seed;
  Word preperiod;
  Word period;
  /// 0 means "smallest alphabet containing every letter mentioned".
  std::size_t alphabet_size = 0;

  Letter delta(std::size_t i) const;
  Alphabet alphabet() const;
  /// Throws invalid-argument on an empty period or letters beyond the alphabet.
  void validate() const;
};

/// The standard word with w_n = (w_{n-1} delta(n))^R.
class StandardEpisturmianSource final : public PrefixSource {
 public:
  explicit StandardEpisturmianSource(DirectiveSpec spec);

  const DirectiveSpec& spec() const noexcept { return spec_; }
  /// The palindromic prefix w_n (w_0 is the seed).
  Word palindromic_prefix(std::size_t n);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  void step();

  DirectiveSpec spec_;
  std::vector<std::size_t> lengths_;  // |w_0|, |w_1|, ...
  std::vector<std::size_t> last_step_;  // per letter: last n with delta(n) = letter, 0 if none
};

class FixedPointSource final : public PrefixSource {
 public:
  FixedPointSource(Morphism m, Letter start);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  Morphism morphism_;
  std::size_t expanded_ = 0;
};

/// lim v_i with v_0 = ε and v_i = v_{i-1}0v_{i-1}1v_{i-1}1v_{i-1}0v_{i-1}2v_{i-1}2
/// v_{i-1}0v_{i-1}1v_{i-1}1v_{i-1}0v_{i-1}.
class Example3Source final : public PrefixSource {
 public:
  Example3Source();
  /// v_i itself; |v_i| = 11|v_{i-1}| + 10.
  Word level(std::size_t i);
  static std::size_t level_length(std::size_t i);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  std::size_t levels_ = 0;
};

class PeriodicSource final : public PrefixSource {
 public:
  explicit PeriodicSource(Word period);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  Word period_;
};

/// Letterwise image m(u) of the word produced by another source.
class ImageSource final : public PrefixSource {
 public:
  ImageSource(Morphism m, std::unique_ptr<PrefixSource> inner);
  ImageSource(const ImageSource& other);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  Morphism morphism_;
  std::unique_ptr<PrefixSource> inner_;
  std::size_t consumed_ = 0;
};

/// The binary word w with w_0 = first and S(w) = the inner (binary) word.
class SPreimageSource final : public PrefixSource {
 public:
  SPreimageSource(std::unique_ptr<PrefixSource> inner, Letter first);
  SPreimageSource(const SPreimageSource& other);
  std::unique_ptr<PrefixSource> clone() const override;

 protected:
  void extend(std::size_t n) override;

 private:
  std::unique_ptr<PrefixSource> inner_;
};

std::unique_ptr<PrefixSource> standard_episturmian(const DirectiveSpec& spec);
/// Throws invalid-argument unless m(a) starts with a and |m(a)| >= 2.
std::unique_ptr<PrefixSource> fixed_point(const Morphism& m, Letter a);
std::unique_ptr<PrefixSource> example3_word();
std::unique_ptr<PrefixSource> periodic_source(const Word& p);
std::unique_ptr<PrefixSource> image_source(const Morphism& m, std::unique_ptr<PrefixSource> src);
std::unique_ptr<PrefixSource> s_preimage_source(std::unique_ptr<PrefixSource> src, Letter first);

/// The smallest letter occurring in every factor of length 2, if any.
std::optional<Letter> separating_letter(const FactorIndex& index);

/// Least l such that delta(1)^l is not a prefix of the directive sequence;
/// nullopt for a constant directive sequence.
std::optional<std::size_t> leading_run_bound(const DirectiveSpec& spec);

}  // namespace epimorph
