#include "epimorph/morphism.hpp"

#include <algorithm>
#include <set>

#include "epimorph/error.hpp"

namespace epimorph {

namespace {

Word power_prefix(const Word& base, std::size_t len, const Alphabet& alphabet) {
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = base[i % base.size()];
  return Word(std::move(out), alphabet);
}

bool images_distinct(const Morphism& m) {
  std::set<Word> seen(m.images().begin(), m.images().end());
  return seen.size() == m.images().size();
}

}  // namespace

std::string_view to_string(MorphismClass c) {
  switch (c) {
    case MorphismClass::P: return "P";
    case MorphismClass::standard_P: return "standardP";
    case MorphismClass::P_ret: return "Pret";
  }
  return "?";
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (images.size() != domain_.size()) {
    throw Error(ErrorKind::invalid_argument, "a morphism needs one image per domain letter");
  }
  images_.reserve(images.size());
  for (auto& img : images) images_.push_back(img.rebased(codomain_));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    images.emplace_back(std::vector<Letter>{static_cast<Letter>(a)}, alphabet);
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

std::size_t Morphism::max_image_length() const noexcept {
  std::size_t best = 0;
  for (const auto& img : images_) best = std::max(best, img.size());
  return best;
}

Word Morphism::operator()(const Word& w) const {
  std::vector<Letter> out;
  for (Letter a : w) {
    if (!domain_.contains(a)) {
      throw Error(ErrorKind::alphabet_mismatch, "letter outside the morphism's domain");
    }
    const auto img = images_[a].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), codomain_);
}

Word apply(const Morphism& m, const Word& w) { return m(w); }

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.codomain().size() != outer.domain().size()) {
    throw Error(ErrorKind::alphabet_mismatch, "composition across mismatched alphabets");
  }
  std::vector<Word> images;
  for (const auto& img : inner.images()) images.push_back(outer(img));
  return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

bool is_primitive(const Morphism& m) {
  if (!m.is_endomorphism()) {
    throw Error(ErrorKind::invalid_argument, "primitivity needs an endomorphism");
  }
  const std::size_t n = m.domain().size();
  using Matrix = std::vector<std::vector<bool>>;
  Matrix base(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (Letter b : m.image(static_cast<Letter>(a))) base[a][b] = true;
  }
  auto positive = [](const Matrix& x) {
    return std::all_of(x.begin(), x.end(),
                       [](const auto& row) { return std::all_of(row.begin(), row.end(), [](bool v) { return v; }); });
  };
  // Wielandt: a primitive n x n matrix has a positive power of exponent <= (n-1)^2 + 1.
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  Matrix power = base;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (positive(power)) return true;
    Matrix next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i][j])
          for (std::size_t l = 0; l < n; ++l)
            if (base[j][l]) next[i][l] = true;
    power = std::move(next);
  }
  return false;
}

std::optional<ClassWitness> class_p_witness(const Morphism& m) {
  const auto images = m.images();
  std::size_t common = images.front().size();
  for (const auto& img : images) {
    std::size_t k = 0;
    while (k < common && k < img.size() && img[k] == images.front()[k]) ++k;
    common = k;
  }
  for (std::size_t len = common + 1; len-- > 0;) {
    Word r = images.front().prefix(len);
    if (!r.is_palindrome()) continue;
    ClassWitness w{MorphismClass::P, r, {}, {}};
    bool ok = true;
    for (const auto& img : images) {
      Word rest = img.suffix(img.size() - len);
      if (!rest.is_palindrome()) {
        ok = false;
        break;
      }
      w.parts.push_back(std::move(rest));
      w.trimmed.push_back(false);
    }
    if (ok) return w;
  }
  return std::nullopt;
}

namespace {

std::optional<ClassWitness> check_standard_p(const Morphism& m, const Word& r) {
  if (!r.is_palindrome()) return std::nullopt;
  ClassWitness w{MorphismClass::standard_P, r, {}, {}};
  for (const auto& img : m.images()) {
    if (r.is_prefix_of(img)) {
      Word q = img.suffix(img.size() - r.size());
      if (!q.is_palindrome()) return std::nullopt;
      w.parts.push_back(std::move(q));
      w.trimmed.push_back(false);
    } else if (!img.empty() && img.size() < r.size() && img.is_prefix_of(r)) {
      Word removed = r.suffix(r.size() - img.size());
      if (!removed.is_palindrome()) return std::nullopt;
      w.parts.push_back(std::move(removed));
      w.trimmed.push_back(true);
    } else {
      return std::nullopt;
    }
  }
  return w;
}

}  // namespace

std::optional<ClassWitness> standard_p_witness(const Morphism& m) {
  // A radius is a prefix of some image, or (when every image is a trimmed
  // radius) a prefix of image(x)^ω, since r = image(x)·pi_x has period |image(x)|.
  const std::size_t bound = 2 * m.max_image_length() + 1;
  std::set<Word> seen;
  std::vector<Word> candidates{Word(m.codomain())};
  for (const auto& img : m.images()) {
    if (img.empty()) continue;
    for (std::size_t len = 1; len <= bound; ++len) {
      Word r = power_prefix(img, len, m.codomain());
      if (seen.insert(r).second) candidates.push_back(std::move(r));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), shortlex_less);
  for (const auto& r : candidates) {
    if (auto w = check_standard_p(m, r)) return w;
  }
  return std::nullopt;
}

std::optional<ClassWitness> pret_witness(const Morphism& m, const Word& r) {
  for (Letter a : r) {
    if (!m.codomain().contains(a)) {
      throw Error(ErrorKind::alphabet_mismatch, "radius outside the morphism's codomain");
    }
  }
  if (!r.is_palindrome() || !images_distinct(m)) return std::nullopt;
  const Word radius = r.rebased(m.codomain());
  ClassWitness w{MorphismClass::P_ret, radius, {}, {}};
  for (const auto& img : m.images()) {
    Word framed = img + radius;
    if (!framed.is_palindrome()) return std::nullopt;
    const auto occ = find_occurrences(framed.letters(), radius.letters());
    if (occ.size() != 2 || occ.front() != 0 || occ.back() != img.size()) return std::nullopt;
    w.parts.push_back(std::move(framed));
    w.trimmed.push_back(false);
  }
  return w;
}

bool is_pret(const Morphism& m, const Word& r) { return pret_witness(m, r).has_value(); }

std::optional<Word> find_pret_radius(const Morphism& m) {
  const auto images = m.images();
  const auto longest = std::max_element(images.begin(), images.end(),
                                        [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (std::size_t len = 0; len <= longest->size(); ++len) {
    Word r = longest->prefix(len).reversed();
    if (is_pret(m, r)) return r;
  }
  return std::nullopt;
}

std::optional<Word> conjugacy_witness(const Morphism& m1, const Morphism& m2) {
  if (m1.domain().size() != m2.domain().size() || m1.codomain().size() != m2.codomain().size()) {
    throw Error(ErrorKind::alphabet_mismatch, "conjugacy needs equal domains and codomains");
  }
  const auto& alphabet = m2.codomain();
  auto works = [&](const Word& w) {
    for (std::size_t a = 0; a < m1.domain().size(); ++a) {
      const auto l = static_cast<Letter>(a);
      if (w + m1.image(l) != m2.image(l) + w) return false;
    }
    return true;
  };
  // w·m1(a) = m2(a)·w forces w to be a prefix of m2(a)^ω whenever m2(a) != ε.
  const auto images = m2.images();
  const auto base = std::find_if(images.begin(), images.end(), [](const Word& x) { return !x.empty(); });
  if (base == images.end()) {
    Word empty(alphabet);
    return works(empty) ? std::optional<Word>(empty) : std::nullopt;
  }
  const std::size_t bound = std::max(m1.max_image_length(), m2.max_image_length());
  for (std::size_t len = 0; len <= bound; ++len) {
    Word w = power_prefix(*base, len, alphabet);
    if (works(w)) return w;
  }
  return std::nullopt;
}

Morphism binary_projection(const Alphabet& alphabet, std::span<const Letter> subset) {
  std::set<Letter> chosen;
  for (Letter a : subset) {
    if (!alphabet.contains(a)) {
      throw Error(ErrorKind::invalid_argument, "projection subset letter outside the alphabet");
    }
    chosen.insert(a);
  }
  if (chosen.empty() || chosen.size() == alphabet.size()) {
    throw Error(ErrorKind::invalid_argument, "projection subset must be proper and nonempty");
  }
  const Alphabet target(2, "AB");
  std::vector<Word> images;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const Letter img = chosen.count(static_cast<Letter>(a)) ? 0 : 1;
    images.emplace_back(std::vector<Letter>{img}, target);
  }
  return Morphism(alphabet, target, std::move(images));
}

Morphism sigma(Letter a, const Alphabet& alphabet) {
  if (!alphabet.contains(a)) {
    throw Error(ErrorKind::alphabet_mismatch, "sigma letter outside the alphabet");
  }
  std::vector<Word> images;
  for (std::size_t b = 0; b < alphabet.size(); ++b) {
    std::vector<Letter> img{a};
    if (b != a) img.push_back(static_cast<Letter>(b));
    images.emplace_back(std::move(img), alphabet);
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

Word s_operator(const Word& w) {
  if (w.alphabet().size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch, "S acts on binary words");
  }
  if (w.empty()) throw Error(ErrorKind::invalid_argument, "S of the empty word");
  std::vector<Letter> out(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out[i] = w[i] ^ w[i + 1];
  return Word(std::move(out), Alphabet(2));
}

Word s_preimage(const Word& v, Letter first) {
  if (v.alphabet().size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch, "S preimages exist for binary words");
  }
  if (first > 1) throw Error(ErrorKind::alphabet_mismatch, "first letter must be 0 or 1");
  std::vector<Letter> out(v.size() + 1);
  out[0] = first;
  for (std::size_t i = 0; i < v.size(); ++i) out[i + 1] = out[i] ^ v[i];
  return Word(std::move(out), Alphabet(2));
}

}  // namespace epimorph
