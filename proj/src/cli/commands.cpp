#include "epimorph/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "epimorph/analysis.hpp"
#include "epimorph/cli/experiments.hpp"
#include "epimorph/cli/report.hpp"
#include "epimorph/cli/text_format.hpp"
#include "epimorph/error.hpp"
#include "epimorph/generators.hpp"

namespace epimorph::cli {

namespace {

using std::to_string;

std::string text(const Word& w) { return w.empty() ? "ε" : w.str(); }

Letter parse_single_letter(const std::string& s) {
  const auto letters = parse_letters(s);
  if (letters.size() != 1) throw Error(ErrorKind::parse_error, "expected a single letter, got '" + s + "'");
  return letters.front();
}

std::string describe(const SourceOptions& o) {
  std::string out;
  if (!o.directive.empty()) out = "directive " + o.directive;
  if (!o.periodic.empty()) out = "periodic " + o.periodic;
  if (!o.fixed_point.empty()) out = "fixed point of " + o.fixed_point;
  if (o.example3) out = "example3";
  if (!o.morphism.empty()) out += " | image by " + o.morphism;
  if (!o.subset.empty()) out += " | projection " + o.subset;
  if (!o.first.empty()) out += " | S-preimage from " + o.first;
  return out;
}

/// Options shared by all subcommands, filled by CLI11.
struct Settings {
  SourceOptions source;
  std::size_t n = 0;
  std::size_t depth = 0;
  std::size_t nmax = 0;
  std::string checkpoints;
  std::string radius;
  bool radius_given = false;
  std::uint64_t seed = 1;
  std::size_t k = 4;
  std::size_t samples = 0;
  std::string factor;
  std::string experiment;
  std::string format = "table";
  std::string out;
  std::string config;
};

class Output {
 public:
  Output(const Settings& s, std::ostream& out) : stdout_(out) {
    format_ = parse_format(s.format);
    if (!s.out.empty()) {
      file_.open(s.out);
      if (!file_) throw Error(ErrorKind::invalid_argument, "cannot open '" + s.out + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : stdout_; }
  int emit(const Report& r) {
    write_report(stream(), r, format_);
    if (file_.is_open()) {
      stdout_ << r.experiment << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.verdicts.size() << " verdicts)\n";
    }
    return r.passed() ? exit_pass : exit_fail;
  }

 private:
  std::ostream& stdout_;
  std::ofstream file_;
  Format format_;
};

void add_source_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--directive", s.source.directive, "standard episturmian word, seed=..;pre=..;per=..");
  cmd->add_option("--periodic", s.source.periodic, "periodic word with this period");
  cmd->add_option("--fixed-point", s.source.fixed_point, "fixed point of a morphism, a:image,...");
  cmd->add_flag("--example3", s.source.example3, "the rich word v of the ternary example");
  cmd->add_option("--morphism", s.source.morphism, "apply this morphism to the base word");
  cmd->add_option("--subset", s.source.subset, "binary projection: these letters go to 0");
  cmd->add_option("--first", s.source.first, "take the S-preimage starting with this letter");
}

Report defect_report(const Settings& s) {
  auto src = build_source(s.source);
  std::vector<std::size_t> checkpoints;
  if (!s.checkpoints.empty()) checkpoints = parse_checkpoints(s.checkpoints);
  else checkpoints = log_checkpoints(100, s.n ? s.n : 100000, 4);
  Report r;
  r.experiment = "defect";
  r.config = {{"source", describe(s.source)}, {"checkpoints", s.checkpoints.empty() ? "default" : s.checkpoints}};
  r.columns = {"checkpoint", "depth", "defect"};
  for (const auto& p : defect_profile(*src, checkpoints)) r.add_row({to_string(p.length), to_string(p.length), to_string(p.defect)});
  return r;
}

Report analyze_report(const Settings& s) {
  auto src = build_source(s.source);
  const std::size_t depth = s.depth ? s.depth : 10000;
  const std::size_t max_len = s.nmax ? s.nmax : 20;
  const FactorIndex index(src->prefix(depth), max_len + 1);
  Report r;
  r.experiment = "analyze";
  r.config = {{"source", describe(s.source)}, {"depth", to_string(depth)}, {"nmax", to_string(max_len)}};
  r.columns = {"n", "complexity", "palindromes", "bispecial", "depth"};
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::string bispecial;
    for (const auto& w : enumerate_bispecial(index, n)) {
      if (w.size() != n) continue;
      std::string b;
      try {
        b = to_string(bilateral_order(index, w));
      } catch (const Error&) {
        b = "?";
      }
      bispecial += (bispecial.empty() ? "" : " ") + text(w) + ":" + b;
    }
    r.add_row({to_string(n), to_string(index.complexity(n)), to_string(psi_palindromic_complexity(index, n, Antimorphism::R)),
               bispecial.empty() ? "-" : bispecial, to_string(depth)});
  }
  const auto counter = census(index.source());
  r.notes.push_back("defect of the prefix: " + to_string(counter.defect));
  r.add_verdict(check_rich_crw(index, max_len));
  r.add_verdict(check_rich_bispecial(index, max_len));
  if (!s.factor.empty()) {
    const Word w = Word::parse(s.factor == "e" ? "" : s.factor, src->alphabet());
    const auto rep = return_words(*src, w, depth);
    std::string words;
    for (const auto& x : rep.return_words) words += (words.empty() ? "" : " ") + x.str() + "(" + to_string(x.size()) + ")";
    r.notes.push_back("return words of " + text(w) + ": " + words + (rep.truncated ? " [truncated]" : ""));
    const auto clashes = equal_length_return_words(rep);
    Verdict v = verdict("distinct-return-lengths", "w=" + text(w), depth, clashes.empty());
    v.truncated = rep.truncated;
    if (!clashes.empty()) {
      v.counterexample = clashes.front().first;
      v.detail = clashes.front().first.str() + " and " + clashes.front().second.str() + " have equal length";
    }
    r.add_verdict(std::move(v));
  }
  return r;
}

Report morphism_report(const Settings& s) {
  if (s.source.morphism.empty()) throw Error(ErrorKind::parse_error, "check-morphism needs --morphism");
  const Morphism m = parse_morphism(s.source.morphism);
  Report r;
  r.experiment = "check-morphism";
  r.config = {{"morphism", format_morphism(m)}};
  r.columns = {"class", "member", "radius", "parts", "depth"};
  auto parts_text = [](const ClassWitness& w) {
    std::string out;
    for (std::size_t a = 0; a < w.parts.size(); ++a) {
      out += (a ? " " : "") + text(w.parts[a]);
      if (!w.trimmed.empty() && w.trimmed[a]) out += "^-1";
    }
    return out;
  };
  r.add_row({"primitive", m.is_endomorphism() ? (is_primitive(m) ? "yes" : "no") : "n/a", "-", "-", "0"});
  const auto p = class_p_witness(m);
  r.add_row({"P", p ? "yes" : "no", p ? text(p->radius) : "-", p ? parts_text(*p) : "-", "0"});
  const auto sp = standard_p_witness(m);
  r.add_row({"standardP", sp ? "yes" : "no", sp ? text(sp->radius) : "-", sp ? parts_text(*sp) : "-", "0"});
  if (s.radius_given) {
    const Word radius = Word::parse(s.radius == "e" ? "" : s.radius, m.codomain());
    const auto w = pret_witness(m, radius);
    r.add_row({"Pret", w ? "yes" : "no", text(radius), w ? parts_text(*w) : "-", "0"});
    r.add_verdict(verdict("pret", "r=" + text(radius), 0, w.has_value()));
  } else {
    const auto radius = find_pret_radius(m);
    const auto w = radius ? pret_witness(m, *radius) : std::nullopt;
    r.add_row({"Pret", w ? "yes" : "no", radius ? text(*radius) : "-", w ? parts_text(*w) : "-", "0"});
  }
  if (!p && !sp && !(s.radius_given ? is_pret(m, Word::parse(s.radius == "e" ? "" : s.radius, m.codomain()))
                                    : find_pret_radius(m).has_value())) {
    r.notes.push_back("none of P, standard P, P_ret");
  }
  return r;
}

Report hrich_report(const Settings& s) {
  auto src = build_source(s.source);
  if (src->alphabet().size() != 2) throw Error(ErrorKind::alphabet_mismatch, "h-rich needs a binary source");
  const std::size_t n_max = s.nmax ? s.nmax : 50;
  const std::size_t depth = s.depth ? s.depth : 20000;
  const FactorIndex index(src->prefix(depth), n_max + 1);
  Report r;
  r.experiment = "h-rich";
  r.config = {{"source", describe(s.source)}, {"depth", to_string(depth)}, {"nmax", to_string(n_max)}};
  bool closed = true;
  for (auto kind : {Antimorphism::R, Antimorphism::E, Antimorphism::RE}) {
    Verdict v = verdict("closure-" + std::string(to_string(kind)), "maxLen=" + to_string(n_max + 1), depth, true);
    if (auto gap = closure_gap(index, kind, n_max + 1)) {
      v.outcome = Outcome::fail;
      v.counterexample = gap;
      v.detail = "image of the counterexample is not a factor";
      closed = false;
    }
    r.add_verdict(std::move(v));
  }
  if (!closed) return r;
  const auto profile = h_profile(index, n_max);
  r.columns = {"n", "complexity_side", "palindrome_side", "equal", "depth"};
  for (const auto& row : profile.rows) {
    r.add_row({to_string(row.n), to_string(row.complexity_side), to_string(row.palindrome_side), row.equal() ? "yes" : "no",
               to_string(row.depth)});
  }
  const auto from = profile.equality_from();
  std::string detail;
  if (profile.h_rich()) detail = "equality for every n <= " + to_string(n_max);
  else if (from) detail = "almost H-rich at this depth: equality for " + to_string(*from) + " <= n <= " + to_string(n_max);
  else detail = "strict inequality at n = " + to_string(n_max);
  r.add_verdict(verdict("h-rich", "nMax=" + to_string(n_max), depth, profile.h_rich(), detail));
  return r;
}

/// Appends config-file entries that the command line left unset and that
/// the chosen subcommand understands.
std::vector<std::string> merge_config(std::vector<std::string> args, CLI::App& app) {
  std::optional<std::string> path;
  std::string command;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    if (command.empty() && !a.empty() && a[0] != '-' &&
        (i == 0 || (args[i - 1] != "--config" && args[i - 1] != "--format" && args[i - 1] != "--out"))) {
      command = a;
    }
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read config file '" + *path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto entries = parse_config(buffer.str());
  CLI::App* sub = nullptr;
  if (command.empty() && entries.count("command")) {
    command = entries.at("command");
    args.insert(args.begin(), command);
  }
  if (!command.empty()) sub = app.get_subcommand_no_throw(command);
  for (const auto& [key, value] : entries) {
    if (key == "command" || key == "config") continue;
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    if (!opt) opt = app.get_option_no_throw(flag);
    if (!opt) {
      if (key == "id" || key == "experiment") {
        args.push_back(value);
        continue;
      }
      throw Error(ErrorKind::parse_error, "config key '" + key + "' is not an option of '" + command + "'");
    }
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_argument:
    case ErrorKind::alphabet_mismatch: return exit_usage;
    default: return exit_fail;
  }
}

}  // namespace

std::unique_ptr<PrefixSource> build_source(const SourceOptions& o) {
  const int bases = !o.directive.empty() + !o.periodic.empty() + !o.fixed_point.empty() + o.example3;
  if (bases != 1) {
    throw Error(ErrorKind::parse_error, "give exactly one of --directive, --periodic, --fixed-point, --example3");
  }
  std::unique_ptr<PrefixSource> src;
  if (!o.directive.empty()) src = standard_episturmian(parse_directive(o.directive));
  if (!o.periodic.empty()) src = periodic_source(parse_word(o.periodic));
  if (o.example3) src = example3_word();
  if (!o.fixed_point.empty()) {
    Morphism m = parse_morphism(o.fixed_point);
    if (m.codomain().size() < m.domain().size()) m = parse_morphism(o.fixed_point, m.domain().size());
    if (!m.is_endomorphism()) throw Error(ErrorKind::parse_error, "a fixed point needs an endomorphism");
    std::optional<Letter> start;
    for (std::size_t a = 0; a < m.domain().size() && !start; ++a) {
      const Word& img = m.image(static_cast<Letter>(a));
      if (img.size() >= 2 && img[0] == a) start = static_cast<Letter>(a);
    }
    if (!start) throw Error(ErrorKind::invalid_argument, "the morphism is not prolongable on any letter");
    src = fixed_point(m, *start);
  }
  if (!o.morphism.empty()) {
    const Morphism m = parse_morphism(o.morphism);
    if (m.domain().size() < src->alphabet().size()) {
      throw Error(ErrorKind::alphabet_mismatch, "the morphism does not cover every letter of the source");
    }
    const Morphism restricted(src->alphabet(), m.codomain(),
                              {m.images().begin(), m.images().begin() + static_cast<std::ptrdiff_t>(src->alphabet().size())});
    src = image_source(restricted, std::move(src));
  }
  if (!o.subset.empty()) {
    const Morphism projection = binary_projection(src->alphabet(), parse_letters(o.subset));
    src = image_source(projection, std::move(src));
  }
  if (!o.first.empty()) {
    if (src->alphabet().size() != 2) throw Error(ErrorKind::alphabet_mismatch, "the S-preimage needs a binary word");
    src = s_preimage_source(std::move(src), parse_single_letter(o.first));
  }
  return src;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Episturmian words, palindromic defect and morphism classes", "epimorph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", EPIMORPH_VERSION);
  app.add_option("--format", s.format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
  app.add_option("--out", s.out, "write the report to this file");
  app.add_option("--config", s.config, "key=value file with default flags");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  auto* gen = sub("gen", "print a prefix of a word");
  add_source_flags(gen, s);
  gen->add_option("--n", s.n, "number of letters")->required();
  gen->callback([&] {
    action = [&] {
      Output o(s, out);
      o.stream() << build_source(s.source)->prefix(s.n) << "\n";
      return int{exit_pass};
    };
  });

  auto* def = sub("defect", "defect profile of a word at checkpoints");
  add_source_flags(def, s);
  def->add_option("--checkpoints", s.checkpoints, "comma-separated prefix lengths");
  def->add_option("--n", s.n, "largest checkpoint when --checkpoints is absent");
  def->callback([&] { action = [&] { Output o(s, out); return o.emit(defect_report(s)); }; });

  auto* ana = sub("analyze", "factor complexity, bispecial factors and richness checks");
  add_source_flags(ana, s);
  ana->add_option("--depth", s.depth, "prefix length (default 10000)");
  ana->add_option("--nmax", s.nmax, "largest factor length (default 20)");
  ana->add_option("--factor", s.factor, "also list the return words of this factor");
  ana->callback([&] { action = [&] { Output o(s, out); return o.emit(analyze_report(s)); }; });

  auto* chk = sub("check-morphism", "classify a morphism into P, standard P and P_ret");
  chk->add_option("--morphism", s.source.morphism, "a:image,...")->required();
  chk->add_option("--radius", s.radius, "test P_ret for this palindrome only")->each([&](const std::string&) {
    s.radius_given = true;
  });
  chk->callback([&] { action = [&] { Output o(s, out); return o.emit(morphism_report(s)); }; });

  auto* proj = sub("project", "binary projection of a word");
  add_source_flags(proj, s);
  proj->get_option("--subset")->required();
  proj->add_option("--n", s.n, "number of letters")->required();
  proj->callback([&] {
    action = [&] {
      Output o(s, out);
      o.stream() << build_source(s.source)->prefix(s.n) << "\n";
      return int{exit_pass};
    };
  });

  auto* sop = sub("s-op", "the S operator, or its preimage with --first");
  add_source_flags(sop, s);
  sop->add_option("--n", s.n, "number of letters")->required();
  sop->callback([&] {
    action = [&] {
      Output o(s, out);
      auto src = build_source(s.source);
      if (!s.source.first.empty()) {
        o.stream() << src->prefix(s.n) << "\n";
      } else {
        if (src->alphabet().size() != 2) throw Error(ErrorKind::alphabet_mismatch, "S needs a binary word");
        o.stream() << s_operator(src->prefix(s.n + 1)) << "\n";
      }
      return int{exit_pass};
    };
  });

  auto* hr = sub("h-rich", "closure under H and the complexity equality");
  add_source_flags(hr, s);
  hr->add_option("--nmax", s.nmax, "largest n (default 50)");
  hr->add_option("--depth", s.depth, "prefix length (default 20000)");
  hr->callback([&] { action = [&] { Output o(s, out); return o.emit(hrich_report(s)); }; });

  auto* rep = sub("reproduce", "run a named experiment and evaluate it");
  rep->add_option("id", s.experiment, "experiment id")->required();
  rep->add_option("--seed", s.seed, "random seed");
  rep->add_option("--depth", s.depth, "override the experiment depth");
  rep->add_option("--n", s.samples, "override the sample count");
  rep->callback([&] {
    action = [&] {
      const auto& info = find_experiment(s.experiment);
      Output o(s, out);
      return o.emit(info.run(ExperimentOptions{s.seed, s.samples, s.depth, 0}));
    };
  });

  auto* sw = sub("sweep", "projections of random k-letter episturmian words");
  sw->add_option("--k", s.k, "alphabet size (3 runs theorem2)")->check(CLI::Range(3, 16));
  sw->add_option("--samples", s.samples, "number of directive samples (default 20)");
  sw->add_option("--depth", s.depth, "prefix length (default 10000)");
  sw->add_option("--seed", s.seed, "random seed");
  sw->callback([&] {
    action = [&] {
      Output o(s, out);
      return o.emit(sweep_projections(s.k, ExperimentOptions{s.seed, s.samples, s.depth, 0}));
    };
  });

  try {
    auto args = merge_config(raw_args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    return action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : int{exit_usage};
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  }
}

}  // namespace epimorph::cli
