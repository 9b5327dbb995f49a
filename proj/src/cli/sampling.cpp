#include "epimorph/cli/sampling.hpp"

#include <algorithm>

#include "epimorph/error.hpp"

namespace epimorph::cli {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Word random_word(std::size_t len, const Alphabet& alphabet, std::mt19937_64& rng) {
  std::vector<Letter> letters(len);
  for (auto& a : letters) a = static_cast<Letter>(uniform(rng, 0, alphabet.size() - 1));
  return Word(std::move(letters), alphabet);
}

}  // namespace

DirectiveSpec random_directive(std::size_t k, std::mt19937_64& rng) {
  if (k < 2 || k > Alphabet::max_size) throw Error(ErrorKind::invalid_argument, "alphabet size must be in 2..256");
  const Alphabet alphabet(k);
  DirectiveSpec spec;
  spec.alphabet_size = k;
  spec.seed = Word(alphabet);
  spec.preperiod = random_word(uniform(rng, 0, 4), alphabet, rng);
  const std::size_t period_len = uniform(rng, k, std::max<std::size_t>(6, k));
  while (true) {
    spec.period = random_word(period_len, alphabet, rng);
    std::vector<bool> seen(k);
    for (Letter a : spec.period) seen[a] = true;
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) break;
  }
  return spec;
}

std::vector<DirectiveSpec> sample_directives(std::size_t k, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DirectiveSpec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_directive(k, rng));
  return out;
}

DirectiveSpec starting_with_zero(const DirectiveSpec& spec) {
  const Letter first = spec.delta(1);
  if (first == 0) return spec;
  auto swap_letters = [&](const Word& w) {
    std::vector<Letter> letters(w.begin(), w.end());
    for (auto& a : letters) a = a == 0 ? first : a == first ? Letter{0} : a;
    return Word(std::move(letters), w.alphabet());
  };
  DirectiveSpec out = spec;
  out.seed = swap_letters(spec.seed);
  out.preperiod = swap_letters(spec.preperiod);
  out.period = swap_letters(spec.period);
  return out;
}

std::vector<std::vector<Letter>> proper_subsets(std::size_t k) {
  if (k > 16) throw Error(ErrorKind::invalid_argument, "too many letters to enumerate subsets");
  std::vector<std::vector<Letter>> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<Letter> s;
    for (std::size_t a = 0; a < k; ++a)
      if (mask >> a & 1) s.push_back(static_cast<Letter>(a));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace epimorph::cli
