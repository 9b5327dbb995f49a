#include "epimorph/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "epimorph/error.hpp"

namespace epimorph {

namespace {

Word word_at(const Word& source, std::size_t pos, std::size_t len) { return source.slice(pos, len); }

std::string letters_text(std::span<const Letter> letters, const Alphabet& alphabet) {
  std::string out;
  for (Letter a : letters) out.push_back(alphabet.glyph(a));
  return out.empty() ? "ε" : out;
}

Verdict make_verdict(std::string check, std::string parameters, const FactorIndex& index) {
  Verdict v;
  v.check = std::move(check);
  v.parameters = std::move(parameters);
  v.depth = index.depth();
  return v;
}

void require_depth(const FactorIndex& index, std::size_t max_len) {
  if (max_len > index.max_len()) {
    throw Error(ErrorKind::invalid_argument,
                "maxLen " + std::to_string(max_len) + " exceeds indexed depth " + std::to_string(index.max_len()));
  }
}

std::set<Letter> letter_set(std::span<const Letter> letters, const Alphabet& alphabet) {
  std::set<Letter> out;
  for (Letter a : letters) {
    if (!alphabet.contains(a)) throw Error(ErrorKind::invalid_argument, "letter outside the alphabet");
    out.insert(a);
  }
  return out;
}

std::string set_text(const std::set<Letter>& s, const Alphabet& alphabet) {
  std::string out = "{";
  for (Letter a : s) {
    if (out.size() > 1) out += ",";
    out.push_back(alphabet.glyph(a));
  }
  return out + "}";
}

/// Coded factorisation of a growing prefix into return words of a factor.
class DerivedSource final : public PrefixSource {
 public:
  DerivedSource(Alphabet coding, std::unique_ptr<PrefixSource> base, Word factor, std::vector<Word> returns,
                std::size_t depth)
      : PrefixSource(std::move(coding)),
        base_(std::move(base)),
        factor_(std::move(factor)),
        returns_(std::move(returns)),
        depth_(depth) {
    recode();
  }

  DerivedSource(const DerivedSource& other)
      : PrefixSource(other),
        base_(other.base_->clone()),
        factor_(other.factor_),
        returns_(other.returns_),
        depth_(other.depth_) {}

  std::unique_ptr<PrefixSource> clone() const override { return std::make_unique<DerivedSource>(*this); }

 protected:
  void extend(std::size_t n) override {
    while (buffer_.size() < n) {
      depth_ *= 2;
      recode();
    }
  }

 private:
  void recode() {
    const auto text = base_->view(depth_);
    const auto occ = find_occurrences(text, factor_.letters());
    for (std::size_t i = buffer_.size(); i + 1 < occ.size(); ++i) {
      const auto r = text.subspan(occ[i], occ[i + 1] - occ[i]);
      auto it = std::find_if(returns_.begin(), returns_.end(), [&](const Word& w) {
        return std::equal(w.begin(), w.end(), r.begin(), r.end());
      });
      if (it == returns_.end()) {
        throw Error(ErrorKind::insufficient_context,
                    "return word beyond the initial depth is missing from the coding");
      }
      buffer_.push_back(static_cast<Letter>(it - returns_.begin()));
    }
  }

  std::unique_ptr<PrefixSource> base_;
  Word factor_;
  std::vector<Word> returns_;
  std::size_t depth_;
};

Alphabet coding_alphabet(std::size_t s) {
  constexpr std::string_view glyphs = "123456789abcdefghijklmnopqrstuvwxyz";
  if (s <= glyphs.size()) return Alphabet(s, std::string(glyphs.substr(0, s)));
  return Alphabet(s);
}

/// Start positions of w or R(w), merged and sorted.
std::vector<std::uint32_t> occurrences_with_reversal(const FactorIndex& index, std::span<const Letter> f,
                                                     std::span<const std::uint32_t> occ) {
  std::vector<Letter> rev(f.rbegin(), f.rend());
  if (std::equal(rev.begin(), rev.end(), f.begin())) return {occ.begin(), occ.end()};
  Word rw(std::move(rev), index.source().alphabet());
  std::vector<std::uint32_t> merged(occ.begin(), occ.end());
  if (index.contains(rw)) {
    const auto other = index.occurrences(rw);
    std::vector<std::uint32_t> out;
    std::merge(merged.begin(), merged.end(), other.begin(), other.end(), std::back_inserter(out));
    return out;
  }
  return merged;
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::precondition_violation: return "PRECONDITION-VIOLATION";
  }
  return "?";
}

// --- return words -----------------------------------------------------------

ReturnWordReport return_words(PrefixSource& src, const Word& w, std::size_t depth) {
  const auto text = src.view(depth);
  const auto occ = find_occurrences(text, w.letters());
  if (occ.empty()) {
    throw Error(ErrorKind::not_in_language, "'" + w.str() + "' does not occur in the prefix");
  }
  ReturnWordReport rep;
  rep.factor = w;
  rep.occurrences = occ.size();
  rep.depth = depth;
  std::set<Word> seen;
  std::size_t longest = 0;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    Word r(std::vector<Letter>(text.begin() + static_cast<std::ptrdiff_t>(occ[i]),
                               text.begin() + static_cast<std::ptrdiff_t>(occ[i + 1])),
           src.alphabet());
    if (seen.insert(r).second) {
      longest = std::max(longest, r.size() + w.size());
      rep.complete_return_words.push_back(r + w);
      rep.return_words.push_back(std::move(r));
    }
  }
  rep.truncated = occ.size() < 2 || depth - occ.back() >= longest;
  return rep;
}

std::vector<std::pair<Word, Word>> equal_length_return_words(const ReturnWordReport& report) {
  std::vector<std::pair<Word, Word>> out;
  const auto& rw = report.return_words;
  for (std::size_t i = 0; i < rw.size(); ++i)
    for (std::size_t j = i + 1; j < rw.size(); ++j)
      if (rw[i].size() == rw[j].size()) out.emplace_back(rw[i], rw[j]);
  return out;
}

DerivatedWord derivated_word(PrefixSource& src, const Word& w, std::size_t depth) {
  const auto text = src.view(depth);
  const auto occ = find_occurrences(text, w.letters());
  if (occ.size() < 2) {
    throw Error(ErrorKind::insufficient_context,
                "'" + w.str() + "' needs two occurrences in the prefix to be derived");
  }
  const auto report = return_words(src, w, depth);
  const Alphabet coding = coding_alphabet(report.return_words.size());
  Morphism psi(coding, src.alphabet(), report.return_words);
  Word g(std::vector<Letter>(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(occ.front())), src.alphabet());
  auto derived = std::make_unique<DerivedSource>(coding, src.clone(), w, report.return_words, depth);
  return DerivatedWord{src.clone(), w, coding, std::move(derived), std::move(psi), std::move(g)};
}

// --- richness checkers ------------------------------------------------------

Verdict check_rich_crw(const FactorIndex& index, std::size_t max_len) {
  require_depth(index, max_len);
  Verdict v = make_verdict("rich-crw", "maxLen=" + std::to_string(max_len), index);
  const auto& src = index.source();
  const PalindromeRadii radii(src.letters());
  for (std::size_t n = 1; n <= max_len && v.passed(); ++n) {
    index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t> occ) {
      if (!v.passed()) return;
      if (std::lexicographical_compare(f.rbegin(), f.rend(), f.begin(), f.end()) &&
          index.contains(std::vector<Letter>(f.rbegin(), f.rend()))) {
        return;  // handled as R(f)
      }
      const auto positions = occurrences_with_reversal(index, f, occ);
      for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        const std::size_t p = positions[i];
        const std::size_t len = positions[i + 1] + n - p;
        if (!radii.is_palindrome(p, len)) {
          v.outcome = Outcome::fail;
          v.counterexample = word_at(src, p, len);
          v.detail = "non-palindromic complete return word of " + letters_text(f, src.alphabet()) +
                     " or its reversal";
          return;
        }
      }
    });
  }
  return v;
}

Verdict check_rich_bispecial(const FactorIndex& index, std::size_t max_len) {
  require_depth(index, max_len);
  Verdict v = make_verdict("rich-bispecial", "maxLen=" + std::to_string(max_len), index);
  if (auto gap = closure_gap(index, Antimorphism::R, max_len)) {
    v.outcome = Outcome::precondition_violation;
    v.counterexample = gap;
    v.detail = "not closed under reversal: R(" + gap->str() + ") is missing";
    return v;
  }
  const auto letters = index.source().letters();
  const std::size_t total = letters.size();
  std::size_t skipped = 0;
  // shortest violation, and shortest palindromic one
  std::optional<std::pair<Word, std::string>> first, first_palindrome;
  for (std::size_t n = 0; n <= max_len && !first_palindrome; ++n) {
    index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t> occ) {
      if (first_palindrome) return;
      std::set<Letter> left, right, inner_left, inner_right;
      std::set<LetterPair> both;
      for (std::uint32_t i : occ) {
        const bool l = i > 0, r = i + n < total;
        if (l) left.insert(letters[i - 1]);
        if (r) right.insert(letters[i + n]);
        if (l && r) {
          both.emplace(letters[i - 1], letters[i + n]);
          inner_left.insert(letters[i - 1]);
          inner_right.insert(letters[i + n]);
        }
      }
      if (left.size() < 2 || right.size() < 2) return;
      if (inner_left.size() != left.size() || inner_right.size() != right.size()) {
        ++skipped;
        return;
      }
      const long b = static_cast<long>(both.size()) - static_cast<long>(left.size()) -
                     static_cast<long>(right.size()) + 1;
      long expected = 0;
      const bool palindrome = is_palindrome(f);
      if (palindrome) {
        expected = -1 + static_cast<long>(std::count_if(both.begin(), both.end(),
                                                        [](const LetterPair& p) { return p.first == p.second; }));
      }
      if (b != expected) {
        std::pair<Word, std::string> found{Word(std::vector<Letter>(f.begin(), f.end()), index.source().alphabet()),
                                           "bilateral order " + std::to_string(b) + ", expected " + std::to_string(expected)};
        if (palindrome) first_palindrome = found;
        if (!first) first = std::move(found);
      }
    });
  }
  if (const auto& c = first_palindrome ? first_palindrome : first) {
    v.outcome = Outcome::fail;
    v.counterexample = c->first;
    v.detail = c->second;
  }
  v.truncated = skipped > 0;
  if (v.passed() && skipped) v.detail = std::to_string(skipped) + " boundary-touching bispecial(s) skipped";
  return v;
}

std::vector<Word> pext(const FactorIndex& index, const Word& p) {
  if (!p.is_palindrome() || !index.contains(p)) {
    throw Error(ErrorKind::invalid_argument, "'" + p.str() + "' is not a palindromic factor");
  }
  std::vector<Word> out;
  for (auto [x, y] : index.extensions(p).both_sided) {
    if (x != y) continue;
    Word ext(index.source().alphabet());
    ext += x;
    ext += p;
    ext += x;
    out.push_back(std::move(ext));
  }
  return out;
}

std::optional<Word> closure_gap(const FactorIndex& index, Antimorphism kind, std::size_t max_len) {
  require_depth(index, max_len);
  const auto& alphabet = index.source().alphabet();
  if (kind != Antimorphism::R && alphabet.size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch, "E and RE need a binary alphabet");
  }
  std::optional<Word> gap;
  for (std::size_t n = 1; n <= max_len && !gap; ++n) {
    index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t>) {
      if (gap) return;
      Word w(std::vector<Letter>(f.begin(), f.end()), alphabet);
      if (!index.contains(apply_antimorphism(kind, w))) gap = std::move(w);
    });
  }
  return gap;
}

bool closed_under(const FactorIndex& index, Antimorphism kind, std::size_t max_len) {
  return !closure_gap(index, kind, max_len).has_value();
}

// --- H-richness -------------------------------------------------------------

bool HProfile::h_rich() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const HRow& r) { return r.equal(); });
}

std::optional<std::size_t> HProfile::equality_from() const noexcept {
  if (rows.empty() || !rows.back().equal()) return std::nullopt;
  std::size_t from = rows.back().n;
  for (auto it = rows.rbegin(); it != rows.rend() && it->equal(); ++it) from = it->n;
  return from;
}

HProfile h_profile(const FactorIndex& index, std::size_t n_max) {
  if (index.source().alphabet().size() != 2) {
    throw Error(ErrorKind::alphabet_mismatch, "H-richness is defined over a binary alphabet");
  }
  require_depth(index, n_max + 1);
  for (auto kind : {Antimorphism::R, Antimorphism::E, Antimorphism::RE}) {
    if (auto gap = closure_gap(index, kind, n_max + 1)) {
      throw Error(ErrorKind::precondition_violation,
                  "source not closed under " + std::string(to_string(kind)) + ": image of '" + gap->str() +
                      "' is missing");
    }
  }
  HProfile profile;
  auto pr = [&](std::size_t n) { return static_cast<long>(psi_palindromic_complexity(index, n, Antimorphism::R)); };
  auto pe = [&](std::size_t n) { return static_cast<long>(psi_palindromic_complexity(index, n, Antimorphism::E)); };
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long dc = static_cast<long>(index.complexity(n + 1)) - static_cast<long>(index.complexity(n)) + 4;
    profile.rows.push_back({n, dc, pr(n + 1) + pr(n) + pe(n + 1) + pe(n), index.depth()});
  }
  return profile;
}

// --- lemma-level checks -----------------------------------------------------

std::optional<Letter> extension_pivot(const FactorIndex& index, const Word& w) {
  const auto rep = index.extensions(w);
  if (rep.both_sided.size() == 1 && rep.both_sided[0].first == rep.both_sided[0].second) {
    return rep.both_sided[0].first;
  }
  std::map<Letter, std::size_t> as_left, as_right;
  for (auto [x, y] : rep.both_sided) {
    ++as_left[x];
    ++as_right[y];
  }
  std::optional<Letter> pivot;
  for (auto [letter, count] : as_left) {
    if (count < 2 || as_right[letter] < 2) continue;
    if (pivot) return std::nullopt;
    pivot = letter;
  }
  return pivot;
}

Verdict e_extension_palindromicity(const FactorIndex& index, const Word& w, std::span<const Letter> e_set,
                                   Letter a) {
  const auto& src = index.source();
  const auto e = letter_set(e_set, src.alphabet());
  if (!e.count(a)) throw Error(ErrorKind::invalid_argument, "the pivot letter must belong to E");
  if (!w.is_palindrome()) throw Error(ErrorKind::invalid_argument, "'" + w.str() + "' is not a palindrome");
  const auto occ = index.occurrences(w);

  Verdict v = make_verdict("e-extension",
                           "w=" + (w.empty() ? std::string("ε") : w.str()) + ";E=" + set_text(e, src.alphabet()) +
                               ";a=" + std::string(1, src.alphabet().glyph(a)),
                           index);
  const auto pivot = extension_pivot(index, w);
  if (!pivot || *pivot != a) {
    v.outcome = Outcome::precondition_violation;
    v.detail = pivot ? "pivot letter is " + std::string(1, src.alphabet().glyph(*pivot))
                     : std::string("pivot letter is not unique at this depth");
    return v;
  }
  const auto letters = src.letters();
  const std::size_t n = w.size();
  std::vector<std::size_t> hits;
  for (std::uint32_t p : occ) {
    if (p == 0 || p + n >= letters.size()) continue;
    if (e.count(letters[p - 1]) && e.count(letters[p + n])) hits.push_back(p);
  }
  const PalindromeRadii radii(letters);
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    const std::size_t p = hits[i], q = hits[i + 1];
    if (!radii.is_palindrome(p, q + n - p)) {
      v.outcome = Outcome::fail;
      v.counterexample = src.slice(p - 1, q + n - p + 2);
      v.detail = "interior between consecutive E-extensions is not a palindrome";
      return v;
    }
  }
  return v;
}

Verdict letter_gap_palindromicity(const FactorIndex& index, std::span<const Letter> subset) {
  const auto& src = index.source();
  const auto chosen = letter_set(subset, src.alphabet());
  if (chosen.empty() || chosen.size() == src.alphabet().size()) {
    throw Error(ErrorKind::invalid_argument, "subset must be proper and nonempty");
  }
  Verdict v = make_verdict("letter-gap", "subset=" + set_text(chosen, src.alphabet()), index);
  const auto letters = src.letters();
  const PalindromeRadii radii(letters);
  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!chosen.count(letters[i])) continue;
    if (previous && !radii.is_palindrome(*previous + 1, i - *previous - 1)) {
      v.outcome = Outcome::fail;
      v.counterexample = src.slice(*previous, i - *previous + 1);
      v.detail = "gap between subset letters is not a palindrome";
      return v;
    }
    previous = i;
  }
  return v;
}

Verdict palindromic_crw_check(const FactorIndex& index, std::size_t min_len, std::size_t max_len) {
  require_depth(index, max_len);
  std::ostringstream params;
  params << "minLen=" << min_len << ";maxLen=" << max_len;
  Verdict v = make_verdict("palindrome-crw", params.str(), index);
  const auto& src = index.source();
  const PalindromeRadii radii(src.letters());
  for (std::size_t n = min_len; n <= max_len && v.passed(); ++n) {
    index.for_each_factor(n, [&](std::span<const Letter> f, std::span<const std::uint32_t> occ) {
      if (!v.passed() || !is_palindrome(f)) return;
      for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
        const std::size_t len = occ[i + 1] + n - occ[i];
        if (!radii.is_palindrome(occ[i], len)) {
          v.outcome = Outcome::fail;
          v.counterexample = word_at(src, occ[i], len);
          v.detail = "complete return word of palindrome " + letters_text(f, src.alphabet()) + " is not a palindrome";
          return;
        }
      }
    });
  }
  return v;
}

}  // namespace epimorph
