#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "epimorph/word.hpp"

namespace epimorph {

/// A morphism given by the images of the letters of its domain.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  const Word& image(Letter a) const { return images_.at(a); }
  std::span<const Word> images() const noexcept { return images_; }
  std::size_t max_image_length() const noexcept;
  bool is_endomorphism() const noexcept { return domain_.size() == codomain_.size(); }

  Word operator()(const Word& w) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.domain_.size() == b.domain_.size() && a.codomain_.size() == b.codomain_.size() &&
           a.images_ == b.images_;
  }

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

enum class MorphismClass { P, standard_P, P_ret };

std::string_view to_string(MorphismClass c);

/// Evidence that a morphism belongs to one of the palindromic classes.
/// For P and standard P, parts[a] is q_a with image(a) = radius·q_a; when
/// trimmed[a] is set, image(a)·parts[a] = radius instead (q_a = parts[a]^-1).
/// For P_ret, parts[a] is image(a)·radius.
struct ClassWitness {
  MorphismClass tag;
  Word radius;
  std::vector<Word> parts;
  std::vector<bool> trimmed;
};

Word apply(const Morphism& m, const Word& w);
/// outer ∘ inner; inner's codomain must match outer's domain.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Some power of the incidence matrix is strictly positive.
bool is_primitive(const Morphism& m);

/// Longest palindrome r, prefix of every image, with each r^-1 m(a) a
/// palindrome. Primitivity is not checked here.
std::optional<ClassWitness> class_p_witness(const Morphism& m);

/// Shortest palindrome r with every image either r·(palindrome) or r with a
/// proper palindromic suffix removed. Radii up to 2·max|image|+1 are searched.
std::optional<ClassWitness> standard_p_witness(const Morphism& m);

/// The three P_ret conditions: m(b)r is a palindrome, m(b)r contains r
/// exactly twice (as prefix and suffix), and images are pairwise distinct.
bool is_pret(const Morphism& m, const Word& r);
std::optional<ClassWitness> pret_witness(const Morphism& m, const Word& r);

/// Shortest r with is_pret(m, r), |r| <= max image length.
std::optional<Word> find_pret_radius(const Morphism& m);

/// Shortest w with w·m1(a) = m2(a)·w for every letter, |w| <= max image length.
std::optional<Word> conjugacy_witness(const Morphism& m1, const Morphism& m2);

/// Letter-to-letter map onto {A, B}: letters in `subset` go to A (letter 0).
Morphism binary_projection(const Alphabet& alphabet, std::span<const Letter> subset);

/// The episturmian morphism a -> a, b -> ab (b != a).
Morphism sigma(Letter a, const Alphabet& alphabet);

/// S(w)_i = w_i xor w_{i+1}; |S(w)| = |w| - 1.
Word s_operator(const Word& w);
/// The w with w_0 = first and S(w) = v.
Word s_preimage(const Word& v, Letter first);

}  // namespace epimorph
