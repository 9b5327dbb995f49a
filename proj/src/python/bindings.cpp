#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epimorph/analysis.hpp"
#include "epimorph/cli/commands.hpp"
#include "epimorph/cli/experiments.hpp"
#include "epimorph/cli/text_format.hpp"
#include "epimorph/error.hpp"
#include "epimorph/generators.hpp"

namespace py = pybind11;
using namespace epimorph;

namespace {

std::optional<std::string> radius_text(const std::optional<Word>& w) {
  if (!w) return std::nullopt;
  return w->str();
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["check"] = v.check;
  d["parameters"] = v.parameters;
  d["depth"] = v.depth;
  d["verdict"] = std::string(to_string(v.outcome));
  d["counterexample"] = v.counterexample ? py::cast(v.counterexample->str()) : py::none();
  d["truncated"] = v.truncated;
  return d;
}

Word word_of(const std::string& text, std::size_t k = 0) { return cli::parse_word(text, k); }

}  // namespace

PYBIND11_MODULE(_epimorph, m) {
  m.doc() = "Episturmian words, palindromic defect and morphism classes";

  py::register_exception<Error>(m, "EpimorphError", PyExc_ValueError);

  m.def("defect", [](const std::string& w) { return defect(word_of(w)); }, py::arg("word"));
  m.def(
      "palindromes",
      [](const std::string& w) { return census(word_of(w)).per_length_counts; }, py::arg("word"),
      "Distinct palindromic factors per length; index 0 counts the empty word.");
  m.def("palindromic_closure", [](const std::string& w) { return palindromic_closure(word_of(w)).str(); });

  m.def(
      "standard_prefix",
      [](const std::string& directive, std::size_t n) {
        return standard_episturmian(cli::parse_directive(directive))->prefix(n).str();
      },
      py::arg("directive"), py::arg("n"));
  m.def(
      "fixed_point_prefix",
      [](const std::string& morphism, std::size_t n) {
        cli::SourceOptions o;
        o.fixed_point = morphism;
        return cli::build_source(o)->prefix(n).str();
      },
      py::arg("morphism"), py::arg("n"));
  m.def("example3_prefix", [](std::size_t n) { return example3_word()->prefix(n).str(); }, py::arg("n"));

  m.def(
      "apply_morphism",
      [](const std::string& morphism, const std::string& w) {
        const auto phi = cli::parse_morphism(morphism);
        return apply(phi, word_of(w, phi.domain().size())).str();
      },
      py::arg("morphism"), py::arg("word"));
  m.def(
      "classify",
      [](const std::string& morphism) {
        const auto phi = cli::parse_morphism(morphism);
        py::dict d;
        const auto p = class_p_witness(phi);
        const auto sp = standard_p_witness(phi);
        d["P"] = p ? py::cast(p->radius.str()) : py::none();
        d["standardP"] = sp ? py::cast(sp->radius.str()) : py::none();
        d["Pret"] = radius_text(find_pret_radius(phi));
        return d;
      },
      py::arg("morphism"), "Radii of the classes P, standard P and P_ret (None when absent).");
  m.def(
      "is_pret",
      [](const std::string& morphism, const std::string& r) {
        const auto phi = cli::parse_morphism(morphism);
        return is_pret(phi, word_of(r, phi.codomain().size()));
      },
      py::arg("morphism"), py::arg("radius"));

  m.def(
      "project",
      [](const std::string& w, const std::string& subset) {
        const Word u = word_of(w);
        return apply(binary_projection(u.alphabet(), cli::parse_letters(subset)), u).str();
      },
      py::arg("word"), py::arg("subset"));
  m.def("s_operator", [](const std::string& w) { return s_operator(word_of(w, 2)).str(); }, py::arg("word"));
  m.def(
      "s_preimage", [](const std::string& w, int first) { return s_preimage(word_of(w, 2), static_cast<Letter>(first)).str(); },
      py::arg("word"), py::arg("first"));

  m.def(
      "return_words",
      [](const std::string& directive, const std::string& factor, std::size_t depth) {
        auto src = standard_episturmian(cli::parse_directive(directive));
        const auto rep = return_words(*src, Word::parse(factor, src->alphabet()), depth);
        std::vector<std::string> out;
        for (const auto& w : rep.return_words) out.push_back(w.str());
        return out;
      },
      py::arg("directive"), py::arg("factor"), py::arg("depth") = 10000);

  m.def(
      "check_rich_crw",
      [](const std::string& w, std::size_t max_len) {
        const Word u = word_of(w);
        return verdict_dict(check_rich_crw(FactorIndex(u, max_len), max_len));
      },
      py::arg("word"), py::arg("max_len"));
  m.def(
      "h_profile",
      [](const std::string& w, std::size_t n_max) {
        const FactorIndex index(word_of(w, 2), n_max + 1);
        std::vector<std::pair<long, long>> rows;
        for (const auto& r : h_profile(index, n_max).rows) rows.emplace_back(r.complexity_side, r.palindrome_side);
        return rows;
      },
      py::arg("word"), py::arg("n_max"), "(complexity side, palindrome side) for n = 1..n_max.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
  m.def("experiments", [] {
    std::vector<std::string> ids;
    for (const auto& e : cli::experiments()) ids.push_back(e.id);
    return ids;
  });
}
