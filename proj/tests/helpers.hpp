#pragma once

#include <string>

#include "epimorph/error.hpp"
#include "epimorph/word.hpp"

namespace test {

inline epimorph::Word w(const std::string& digits, std::size_t k = 2) { return epimorph::Word::digits(digits, k); }

template <class F>
epimorph::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const epimorph::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an epimorph::Error");
}

}  // namespace test
