// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <random>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "epimorph/analysis.hpp"
#include "epimorph/cli/experiments.hpp"
#include "epimorph/cli/sampling.hpp"
#include "epimorph/cli/text_format.hpp"
#include "epimorph/generators.hpp"
#include "oracles.hpp"

using namespace epimorph;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Word digits(const std::string& s, std::size_t k) { return Word::digits(s, k); }

std::vector<std::string> images(const Morphism& m) {
  std::vector<std::string> out;
  for (const auto& w : m.images()) out.push_back(w.str());
  return out;
}

std::string failing(const cli::Report& r) {
  std::size_t bad = 0;
  for (const auto& v : r.verdicts) bad += !v.passed();
  return std::to_string(r.verdicts.size() - bad) + "/" + std::to_string(r.verdicts.size()) + " verdicts pass";
}

Result criterion1() {
  const auto specs = cli::sample_directives(3, 50, 1);
  std::size_t rich = 0, generator_ok = 0;
  for (const auto& spec : specs) {
    auto src = standard_episturmian(spec);
    rich += defect(src->prefix(10000)) == 0;
    generator_ok += src->prefix(500).str() == oracle::standard(spec.preperiod.str(), spec.period.str(), 500);
  }
  return {rich == 50 && generator_ok == 50, std::to_string(rich) + "/50 prefixes of length 10^4 have defect 0; " +
                                                std::to_string(generator_ok) + "/50 generators match literal closure"};
}

Result criterion2() {
  const Morphism pi = cli::fibonacci_remark_morphism();
  const std::size_t d0 = oracle::defect(pi.image(0).str());
  const bool pret = is_pret(pi, digits("11", 2));
  const auto brute = oracle::pret_radius(images(pi), 2, 2);
  const std::string joined = pi.image(0).str() + "11";
  auto src = image_source(pi, fixed_point(cli::fibonacci_morphism(), 0));
  const std::vector<std::size_t> cps{1000, 2000, 5000, 10000, 20000, 50000, 100000};
  std::string profile;
  bool reached = false, stays = true;
  for (const auto& p : defect_profile(*src, cps)) {
    profile += (profile.empty() ? "" : ",") + std::to_string(p.defect);
    if (p.defect == 2) reached = true;
    else if (reached) stays = false;
  }
  std::ostringstream os;
  os << "D(pi(0))=" << d0 << "; is_pret(pi,11)=" << yes(pret) << " (11 occurs "
     << oracle::occurrences(joined, "11").size() << " times in pi(0)11; brute-force radius search: "
     << (brute ? *brute : "none") << "); profile " << profile << " plateau at 2: " << yes(reached && stays);
  return {d0 == 1 && pret && reached && stays, os.str()};
}

Result criterion3() {
  Example3Source v;
  bool rich = true;
  for (std::size_t i = 1; i <= 4; ++i) rich = rich && defect(v.level(i)) == 0;
  const bool oracle_rich = oracle::defect(v.level(2).str()) == 0;
  const Morphism phi = cli::example3_morphism();
  std::vector<std::size_t> cps;
  for (std::size_t i = 1; i <= 5; ++i) cps.push_back(apply(phi, v.level(i)).size());
  auto img = image_source(phi, example3_word());
  std::vector<std::size_t> d;
  std::string shown;
  for (const auto& p : defect_profile(*img, cps)) {
    d.push_back(p.defect);
    shown += (shown.empty() ? "" : ",") + std::to_string(p.defect);
  }
  const bool growing = cli::strictly_increasing(d);
  return {rich && oracle_rich && growing,
          "D(v_1..v_4)=0: " + yes(rich) + "; D(phi(v)) at |phi(v_1)|..|phi(v_5)|: " + shown};
}

Result criterion4() {
  const auto specs = cli::sample_directives(3, 30, 1);
  std::size_t ok = 0;
  for (const auto& spec : specs) {
    const Word u = standard_episturmian(spec)->prefix(10000);
    for (Letter a = 0; a < 3; ++a) ok += defect(apply(binary_projection(spec.alphabet(), std::vector<Letter>{a}), u)) == 0;
  }
  return {ok == 90, std::to_string(ok) + "/90 projected prefixes of length 10^4 have defect 0"};
}

Result criterion5() {
  const auto r = cli::find_experiment("theorem1").run({});
  std::string notes;
  for (const auto& n : r.notes) notes += "; " + n;
  return {r.passed(), "defect plateau over the last 90% of 11 checkpoints to 10^5: " + failing(r) + notes};
}

Result criterion6() {
  const Morphism phi = cli::example3_morphism(), pi = cli::fibonacci_remark_morphism(), fib = cli::fibonacci_morphism();
  const auto r_phi = find_pret_radius(phi);
  const auto r_pi = find_pret_radius(pi);
  const auto w_fib = class_p_witness(fib);
  const auto o_phi = oracle::pret_radius(images(phi), 2, phi.max_image_length());
  const auto o_pi = oracle::pret_radius(images(pi), 2, pi.max_image_length());
  // class P recheck straight from the definition
  bool fib_recheck = false;
  if (w_fib) {
    const std::string r = w_fib->radius.str();
    fib_recheck = oracle::is_pal(r);
    for (const auto& img : images(fib))
      fib_recheck = fib_recheck && img.rfind(r, 0) == 0 && oracle::is_pal(img.substr(r.size()));
  }
  const bool ok_phi = r_phi && r_phi->str() == "010" && o_phi == std::optional<std::string>("010");
  const bool ok_pi = r_pi && r_pi->str() == "11" && o_pi == std::optional<std::string>("11");
  const bool ok_fib = w_fib && w_fib->radius.str() == "0" && fib_recheck;
  std::ostringstream os;
  os << "phi: " << (r_phi ? r_phi->str() : "none") << " (recheck " << (o_phi ? *o_phi : "none") << "); pi: "
     << (r_pi ? r_pi->str() : "none") << " (recheck " << (o_pi ? *o_pi : "none") << "); fibonacci P: "
     << (w_fib ? w_fib->radius.str() : "none") << " (recheck " << yes(fib_recheck) << ")";
  return {ok_phi && ok_pi && ok_fib, os.str()};
}

Result criterion7() {
  std::size_t words = 0, agree = 0;
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const auto& s : oracle::words(2, n)) {
      ++words;
      const bool by_defect = oracle::defect(s) == 0;
      agree += by_defect == check_rich_crw(FactorIndex(Word::digits(s, 2), n), n).passed();
    }
  }
  std::mt19937_64 rng(1);
  std::size_t bispecial_ok = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto spec = cli::random_directive(2 + i % 3, rng);
    bispecial_ok += check_rich_bispecial(FactorIndex(standard_episturmian(spec)->prefix(10000), 30), 30).passed();
  }
  return {agree == words && bispecial_ok == 10,
          std::to_string(agree) + "/" + std::to_string(words) + " binary words agree; " + std::to_string(bispecial_ok) +
              "/10 episturmian prefixes pass the bispecial check"};
}

Result criterion8() {
  const auto r = cli::find_experiment("remark7").run({});
  const std::string u = oracle::standard("", "01023", 3000);
  const auto rw = oracle::return_words(u, "00");
  const bool has_both = std::count(rw.begin(), rw.end(), "0010201") && std::count(rw.begin(), rw.end(), "0010301");
  return {r.passed() && has_both, "harness: " + failing(r) + "; scan of the directive-01023 word finds 0010201 and 0010301: " +
                                      yes(has_both)};
}

Result criterion9() {
  std::size_t checked = 0, ok = 0;
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& s : oracle::words(2, n)) {
      const Word v = Word::digits(s, 2);
      const Word w0 = s_preimage(v, 0), w1 = s_preimage(v, 1);
      checked += 2;
      ok += (s_operator(w0) == v && oracle::s_op(w0.str()) == s) + (s_operator(w1) == v && oracle::s_op(w1.str()) == s);
      if (oracle::swap01(w0.str()) != w1.str()) --ok;
    }
  }
  return {ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " round trips (with exchanged preimages)"};
}

Result criterion10() {
  const auto r = cli::find_experiment("prop12").run({});
  // independent recount for one case
  auto src = s_preimage_source(
      image_source(binary_projection(Alphabet(3), std::vector<Letter>{0}), fixed_point(cli::tribonacci_morphism(), 0)), 0);
  const std::string w = src->prefix(20000).str();
  bool rows_ok = true;
  for (std::size_t n = 1; n <= 50; ++n) {
    const long lhs = static_cast<long>(oracle::complexity(w, n + 1)) - static_cast<long>(oracle::complexity(w, n)) + 4;
    const long rhs = static_cast<long>(oracle::psi_palindromes(w, n + 1, 'R') + oracle::psi_palindromes(w, n, 'R') +
                                       oracle::psi_palindromes(w, n + 1, 'E') + oracle::psi_palindromes(w, n, 'E'));
    rows_ok = rows_ok && lhs == rhs;
  }
  return {r.passed() && rows_ok, "harness: " + failing(r) + " (closure + equality for 1<=n<=50); brute-force recount "
                                     "for Tribonacci, A'={0}, first 0: " + yes(rows_ok)};
}

Result criterion11() {
  const auto r = cli::find_experiment("lemmas89").run({});
  return {r.passed(), "letter-gap and E-extension checks on 10 samples at depth 10^4: " + failing(r)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"episturmian richness", criterion1},   {"Fibonacci remark", criterion2},
      {"ternary example", criterion3},        {"projections of ternary words", criterion4},
      {"P_ret images plateau", criterion5},   {"morphism classifier", criterion6},
      {"richness checker oracles", criterion7}, {"return-word lengths", criterion8},
      {"S round trip", criterion9},           {"H-richness of S-preimages", criterion10},
      {"letter gaps and E-extensions", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures ? 1 : 0;
}
