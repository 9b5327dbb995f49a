#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "epimorph/generators.hpp"

namespace epimorph::cli {

/// Random eventually periodic directive over k letters: preperiod length at
/// most 4, period length at most max(6, k), letters uniform, resampled until
/// every letter occurs in the period. The seed word is empty.
DirectiveSpec random_directive(std::size_t k, std::mt19937_64& rng);

/// `count` specs drawn in order from one generator seeded with `seed`.
std::vector<DirectiveSpec> sample_directives(std::size_t k, std::size_t count, std::uint64_t seed);

/// Renames letters so that the directive starts with 0 (swaps 0 and delta(1)).
DirectiveSpec starting_with_zero(const DirectiveSpec& spec);

/// Nonempty proper subsets of {0..k-1} in increasing bitmask order.
std::vector<std::vector<Letter>> proper_subsets(std::size_t k);

}  // namespace epimorph::cli
