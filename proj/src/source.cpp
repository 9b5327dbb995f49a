#include "epimorph/source.hpp"

namespace epimorph {

std::span<const Letter> PrefixSource::view(std::size_t n) {
  if (buffer_.size() < n) extend(n);
  return std::span<const Letter>(buffer_).first(n);
}

Word PrefixSource::prefix(std::size_t n) {
  auto v = view(n);
  return Word(std::vector<Letter>(v.begin(), v.end()), alphabet_);
}

}  // namespace epimorph
