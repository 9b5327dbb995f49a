#include <doctest.h>

#include <random>

#include "epimorph/morphism.hpp"
#include "epimorph/palindrome.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace epimorph;
using test::error_kind;
using test::w;

namespace {

Morphism morphism(const std::vector<std::string>& images, std::size_t k) {
  std::vector<Word> ws;
  for (const auto& s : images) ws.push_back(Word::digits(s, k));
  return Morphism(Alphabet(images.size()), Alphabet(k), std::move(ws));
}

const std::vector<std::string> kPhi = {"0100", "01011", "010111"};
const std::vector<std::string> kPi = {"110100110010", "1"};

/// Recheck of a class P witness straight from the definition.
bool recheck_p(const Morphism& m, const Word& r) {
  if (!r.is_palindrome()) return false;
  for (const auto& img : m.images()) {
    if (!r.is_prefix_of(img)) return false;
    if (!img.slice(r.size(), img.size() - r.size()).is_palindrome()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("apply and compose") {
    const auto phi = morphism(kPhi, 3);
    CHECK(apply(phi, Word::digits("01", 3)).str() == "010001011");
    CHECK(apply(Morphism::identity(Alphabet(3)), Word::digits("2101", 3)).str() == "2101");
    const auto zeta = binary_projection(Alphabet(3), std::vector<Letter>{1});
    CHECK(apply(zeta, Word::digits("012", 3)).str() == "BAB");
    CHECK(error_kind([&] { (void)apply(morphism({"0", "1"}, 2), Word::digits("2", 3)); }) ==
          ErrorKind::alphabet_mismatch);
    const auto s0 = sigma(0, Alphabet(2));
    CHECK(compose(s0, s0) == morphism({"0", "001"}, 2));
    CHECK(compose(Morphism::identity(Alphabet(3)), phi) == phi);
    CHECK(error_kind([&] { (void)compose(phi, morphism({"0", "1"}, 2)); }) == ErrorKind::alphabet_mismatch);
  }

  TEST_CASE("primitivity") {
    CHECK(is_primitive(morphism({"01", "0"}, 2)));
    CHECK_FALSE(is_primitive(morphism({"0", "1"}, 2)));
    CHECK_FALSE(is_primitive(morphism({"01", "1"}, 2)));
    CHECK(is_primitive(morphism({"01", "02", "0"}, 3)));
    CHECK(error_kind([&] { (void)is_primitive(morphism({"0", "1", "1"}, 2)); }) == ErrorKind::invalid_argument);
  }

  TEST_CASE("class P") {
    const auto fib = class_p_witness(morphism({"01", "0"}, 2));
    REQUIRE(fib);
    CHECK(fib->radius == w("0"));
    CHECK(recheck_p(morphism({"01", "0"}, 2), fib->radius));
    CHECK_FALSE(class_p_witness(morphism({"01", "10"}, 2)));
    const auto pal = class_p_witness(morphism({"0110", "1"}, 2));
    REQUIRE(pal);
    CHECK(pal->radius.empty());
  }

  TEST_CASE("class P witnesses always recheck") {
    std::mt19937_64 rng(3);
    int found = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<std::string> images(2);
      for (auto& s : images)
        for (std::size_t i = 1 + rng() % 5; i > 0; --i) s.push_back(static_cast<char>('0' + rng() % 2));
      const auto m = morphism(images, 2);
      const auto witness = class_p_witness(m);
      if (!witness) continue;
      ++found;
      REQUIRE(recheck_p(m, witness->radius));
      // no longer palindromic common prefix passes
      for (std::size_t len = witness->radius.size() + 1; len <= m.image(0).size(); ++len) {
        REQUIRE_FALSE(recheck_p(m, m.image(0).prefix(len)));
      }
    }
    CHECK(found > 50);
  }

  TEST_CASE("standard P") {
    CHECK(standard_p_witness(morphism({"0110", "1"}, 2))->radius.empty());
    CHECK_FALSE(standard_p_witness(morphism({"01", "10"}, 2)));
    const auto pi = standard_p_witness(morphism(kPi, 2));
    REQUIRE(pi);
    CHECK(pi->radius == w("11"));
    CHECK(pi->trimmed[1]);
  }

  TEST_CASE("P_ret") {
    const auto phi = morphism(kPhi, 3);
    CHECK(is_pret(phi, Word::digits("010", 3)));
    CHECK_FALSE(is_pret(phi, Word(Alphabet(3))));
    CHECK(find_pret_radius(phi) == Word::digits("010", 3));
    CHECK_FALSE(find_pret_radius(morphism({"01", "10"}, 2)));
    for (Letter a = 0; a < 3; ++a) CHECK(is_pret(sigma(a, Alphabet(3)), Word::digits(std::string(1, '0' + a), 3)));
    const auto witness = pret_witness(phi, Word::digits("010", 3));
    REQUIRE(witness);
    CHECK(witness->parts[0].str() == "0100010");
    CHECK_FALSE(is_pret(morphism({"0", "0"}, 2), w("0")));  // images must differ
  }

  TEST_CASE("the radius search agrees with exhaustive enumeration") {
    std::mt19937_64 rng(5);
    int with_radius = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      const std::size_t k = 2 + rng() % 2;
      std::vector<std::string> images(k);
      for (auto& s : images)
        for (std::size_t i = 1 + rng() % 5; i > 0; --i) s.push_back(static_cast<char>('0' + rng() % 2));
      const auto m = morphism(images, 2);
      const auto got = find_pret_radius(m);
      const auto want = oracle::pret_radius(images, 2, m.max_image_length());
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        ++with_radius;
        REQUIRE(got->str() == *want);
      }
    }
    CHECK(with_radius > 20);
  }

  TEST_CASE("P_ret maps palindromes, and only palindromes, to palindromes before r") {
    const std::vector<std::pair<Morphism, Word>> cases = {
        {morphism(kPhi, 3), Word::digits("010", 3)},
        {sigma(1, Alphabet(3)), Word::digits("1", 3)},
        {compose(sigma(0, Alphabet(2)), sigma(1, Alphabet(2))), *find_pret_radius(compose(sigma(0, Alphabet(2)), sigma(1, Alphabet(2))))},
    };
    for (const auto& [m, r] : cases) {
      REQUIRE(is_pret(m, r));
      for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& s : oracle::words(m.domain().size(), n)) {
          const Word img = apply(m, Word::digits(s, m.domain().size())) + r;
          REQUIRE(img.is_palindrome() == oracle::is_pal(s));
        }
      }
    }
  }

  TEST_CASE("P_ret is closed under composition") {
    const Alphabet a3(3);
    const std::vector<Morphism> parts = {sigma(0, a3), sigma(1, a3), sigma(2, a3), morphism(kPhi, 3)};
    for (const auto& outer : parts) {
      for (const auto& inner : parts) {
        const auto m = compose(outer, inner);
        const auto r = find_pret_radius(m);
        REQUIRE(r);
        CHECK(is_pret(m, *r));
      }
    }
  }

  TEST_CASE("conjugacy") {
    const auto fib = morphism({"01", "0"}, 2);
    CHECK(conjugacy_witness(fib, fib) == Word(Alphabet(2)));
    CHECK_FALSE(conjugacy_witness(fib, morphism({"10", "0"}, 2)));
    CHECK_FALSE(conjugacy_witness(morphism({"01", "0"}, 2), morphism({"10", "0"}, 2)));
    const auto s = conjugacy_witness(morphism({"010", "0"}, 2), morphism({"001", "0"}, 2));
    REQUIRE(s);
    CHECK(*s == w("0"));
  }

  TEST_CASE("projection and sigma") {
    const auto zeta = binary_projection(Alphabet(3), std::vector<Letter>{0});
    CHECK(zeta.codomain().size() == 2);
    CHECK(apply(zeta, Word::digits("012", 3)).str() == "ABB");
    CHECK(error_kind([] { (void)binary_projection(Alphabet(3), std::vector<Letter>{0, 1, 2}); }) ==
          ErrorKind::invalid_argument);
    CHECK(error_kind([] { (void)binary_projection(Alphabet(3), std::vector<Letter>{}); }) ==
          ErrorKind::invalid_argument);
    CHECK(sigma(0, Alphabet(3)) == morphism({"0", "01", "02"}, 3));
    CHECK(error_kind([] { (void)sigma(3, Alphabet(3)); }) == ErrorKind::alphabet_mismatch);
  }

  TEST_CASE("the S operator") {
    CHECK(s_operator(w("00110")) == w("0101"));
    CHECK(s_operator(w("1111")) == w("000"));
    CHECK(s_preimage(w("0101"), 0) == w("00110"));
    CHECK(s_preimage(Word(Alphabet(2)), 1) == w("1"));
    CHECK(error_kind([] { (void)s_operator(Word::digits("012")); }) == ErrorKind::alphabet_mismatch);
    CHECK(error_kind([] { (void)s_operator(Word(Alphabet(2))); }) == ErrorKind::invalid_argument);
    for (std::size_t n = 0; n <= 10; ++n) {
      for (const auto& s : oracle::words(2, n)) {
        const Word p0 = s_preimage(w(s), 0);
        REQUIRE(oracle::s_op(p0.str()) == s);
        REQUIRE(oracle::swap01(p0.str()) == s_preimage(w(s), 1).str());
      }
    }
  }
}
