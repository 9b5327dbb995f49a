#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epimorph/generators.hpp"
#include "epimorph/morphism.hpp"

namespace epimorph::cli {

/// `seed=<w>;pre=<w>;per=<w>` with digit words; every key but `per` may be
/// omitted. An optional `k=<n>` fixes the alphabet size.
DirectiveSpec parse_directive(std::string_view text);
std::string format_directive(const DirectiveSpec& spec);

/// `0:0100,1:01011,2:010111`. Domain letters must be 0..n-1, each given
/// once. The codomain is the smallest alphabet holding every image letter
/// (at least binary) unless `codomain_size` is given.
Morphism parse_morphism(std::string_view text, std::size_t codomain_size = 0);
std::string format_morphism(const Morphism& m);

/// Digit word; empty text and "e" both mean the empty word.
Word parse_word(std::string_view text, std::size_t alphabet_size = 0);

/// Letters as "0,2" or "02".
std::vector<Letter> parse_letters(std::string_view text);

/// Comma-separated lengths; each may be written as 1e4. Strictly increasing.
std::vector<std::size_t> parse_checkpoints(std::string_view text);
std::size_t parse_count(std::string_view text);

/// Exponentially spaced lengths from `lo` to `hi` inclusive.
std::vector<std::size_t> log_checkpoints(std::size_t lo, std::size_t hi, std::size_t count);

/// One key=value per line; blank lines and lines starting with '#' skipped.
std::map<std::string, std::string> parse_config(std::string_view text);

}  // namespace epimorph::cli
