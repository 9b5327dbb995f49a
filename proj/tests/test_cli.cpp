#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "epimorph/cli/commands.hpp"
#include "epimorph/cli/experiments.hpp"
#include "epimorph/cli/sampling.hpp"
#include "epimorph/cli/text_format.hpp"
#include "helpers.hpp"

using namespace epimorph;
using namespace epimorph::cli;
using test::error_kind;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("directive text form") {
    const auto spec = parse_directive("seed=1;pre=02;per=012");
    CHECK(spec.seed.str() == "1");
    CHECK(spec.preperiod.str() == "02");
    CHECK(spec.period.str() == "012");
    CHECK(spec.alphabet_size == 3);
    CHECK(format_directive(spec) == "seed=1;pre=02;per=012");
    CHECK(parse_directive("per=01").alphabet_size == 2);
    CHECK(parse_directive("per=0").alphabet_size == 2);
    CHECK(parse_directive("per=01;k=4").alphabet_size == 4);
    for (const char* bad : {"", "pre=01", "per=", "per=01;per=10", "per=01;foo=1", "per=0-1", "per"}) {
      CHECK(error_kind([&] { (void)parse_directive(bad); }) == ErrorKind::parse_error);
    }
  }

  TEST_CASE("morphism text form") {
    const auto m = parse_morphism("0:0100,1:01011,2:010111");
    CHECK(m.domain().size() == 3);
    CHECK(m.codomain().size() == 2);
    CHECK(format_morphism(m) == "0:0100,1:01011,2:010111");
    CHECK(parse_morphism("0:01,1:0", 3).codomain().size() == 3);
    CHECK(parse_morphism("1:0, 0:01").image(0).str() == "01");
    for (const char* bad : {"0:01,0:1", "1:0", "0-01", "0:01,2:1", ":0", "0:0!,1:0"}) {
      CHECK(error_kind([&] { (void)parse_morphism(bad); }) == ErrorKind::parse_error);
    }
  }

  TEST_CASE("counts, checkpoints, letters and config") {
    CHECK(parse_count("1e5") == 100000);
    CHECK(parse_count("2500") == 2500);
    CHECK(parse_checkpoints("1e3,2000,1e4") == std::vector<std::size_t>{1000, 2000, 10000});
    CHECK(error_kind([] { (void)parse_checkpoints("10,5"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { (void)parse_count("ten"); }) == ErrorKind::parse_error);
    CHECK(parse_letters("0,2") == std::vector<Letter>{0, 2});
    CHECK(parse_letters("12") == std::vector<Letter>{1, 2});
    const auto cps = log_checkpoints(1000, 100000, 11);
    CHECK(cps.size() == 11);
    CHECK(cps.front() == 1000);
    CHECK(cps.back() == 100000);
    const auto cfg = parse_config("# comment\ndirective = per=012\n\n--n=5\n");
    CHECK(cfg.at("directive") == "per=012");
    CHECK(cfg.at("n") == "5");
    CHECK(error_kind([] { (void)parse_config("nonsense"); }) == ErrorKind::parse_error);
  }

  TEST_CASE("sampling is deterministic and covers the alphabet") {
    const auto a = sample_directives(4, 20, 9), b = sample_directives(4, 20, 9);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(format_directive(a[i]) == format_directive(b[i]));
      CHECK(a[i].preperiod.size() <= 4);
      CHECK(a[i].period.size() <= 6);
      std::set<Letter> seen(a[i].period.begin(), a[i].period.end());
      CHECK(seen.size() == 4);
    }
    CHECK(starting_with_zero(parse_directive("pre=2;per=012")).delta(1) == 0);
    CHECK(format_directive(starting_with_zero(parse_directive("pre=2;per=012"))) == "pre=0;per=210");
    CHECK(proper_subsets(3).size() == 6);
  }

  TEST_CASE("plateau and growth rules") {
    CHECK(plateaus({1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK_FALSE(plateaus({1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(strictly_increasing({1, 2, 3, 4, 5}));
    CHECK_FALSE(strictly_increasing({1, 2, 3, 4}));
    CHECK_FALSE(strictly_increasing({1, 2, 2, 4, 5}));
  }

  TEST_CASE("gen") {
    CHECK(run({"gen", "--directive", "per=01", "--n", "10"}).out == "0100101001\n");
    CHECK(run({"gen", "--periodic", "01", "--n", "4"}).out == "0101\n");
    CHECK(run({"gen", "--example3", "--n", "10"}).out == "0110220110\n");
    CHECK(run({"gen", "--fixed-point", "0:01,1:02,2:0", "--n", "7"}).out == "0102010\n");
    CHECK(run({"gen", "--example3", "--morphism", "0:0100,1:01011,2:010111", "--n", "9"}).out == "010001011\n");
    CHECK(run({"project", "--periodic", "0102010", "--subset", "1", "--n", "7"}).out == "BABBBAB\n");
    CHECK(run({"s-op", "--periodic", "00110", "--n", "4"}).out == "0101\n");
    CHECK(run({"s-op", "--periodic", "0101", "--first", "0", "--n", "5"}).out == "00110\n");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"gen", "--directive", "per=", "--n", "3"}).code == exit_usage);
    CHECK(run({"gen", "--n", "3"}).code == exit_usage);
    CHECK(run({"gen", "--periodic", "01", "--example3", "--n", "3"}).code == exit_usage);
    CHECK(run({"check-morphism", "--morphism", "0:01,0:1"}).code == exit_usage);
    CHECK(run({"reproduce", "nope"}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"defect", "--periodic", "01", "--format", "xml"}).code == exit_usage);
    CHECK(run({"sweep", "--k", "2"}).code == exit_usage);
  }

  TEST_CASE("check-morphism") {
    const auto phi = run({"check-morphism", "--morphism", "0:0100,1:01011,2:010111"});
    CHECK(phi.code == exit_pass);
    CHECK(phi.out.find("Pret       yes     010") != std::string::npos);
    const auto fib = run({"check-morphism", "--morphism", "0:01,1:0", "--format", "csv"});
    CHECK(fib.out.find("P,yes,0,") != std::string::npos);
    const auto none = run({"check-morphism", "--morphism", "0:01,1:10"});
    CHECK(none.out.find("none of P, standard P, P_ret") != std::string::npos);
    CHECK(run({"check-morphism", "--morphism", "0:0100,1:01011,2:010111", "--radius", "010"}).code == exit_pass);
    CHECK(run({"check-morphism", "--morphism", "0:0100,1:01011,2:010111", "--radius", "e"}).code == exit_fail);
  }

  TEST_CASE("defect and analyze reports") {
    const auto fib = run({"defect", "--directive", "per=01", "--checkpoints", "100,1000,10000", "--format", "csv"});
    CHECK(fib.code == exit_pass);
    CHECK(fib.out == "checkpoint,depth,defect\n100,100,0\n1000,1000,0\n10000,10000,0\n");
    const auto jl = run({"defect", "--fixed-point", "0:01,1:0", "--morphism", "0:110100110010,1:1", "--checkpoints",
                         "1000,10000", "--format", "jsonl"});
    CHECK(jl.out.find(R"({"type":"row","checkpoint":10000,"depth":10000,"defect":2})") != std::string::npos);
    const auto ana = run({"analyze", "--directive", "per=01023", "--depth", "5000", "--nmax", "8", "--factor", "00"});
    CHECK(ana.code == exit_fail);  // equal-length return words are flagged
    CHECK(ana.out.find("0010201 and 0010301 have equal length") != std::string::npos);
    CHECK(run({"analyze", "--directive", "per=012", "--depth", "5000", "--nmax", "8", "--factor", "1"}).code == exit_pass);
  }

  TEST_CASE("h-rich") {
    const auto trib = run({"h-rich", "--directive", "per=012", "--subset", "0", "--first", "0", "--nmax", "30",
                           "--depth", "10000", "--format", "csv"});
    CHECK(trib.code == exit_pass);
    CHECK(trib.out.find("h-rich,nMax=30,10000,PASS") != std::string::npos);
    const auto fib = run({"h-rich", "--directive", "per=01", "--nmax", "10"});
    CHECK(fib.code == exit_fail);
    CHECK(fib.out.find("FAIL  closure-E") != std::string::npos);
    CHECK(run({"h-rich", "--periodic", "01", "--nmax", "10", "--depth", "100"}).code == exit_pass);
  }

  TEST_CASE("config file supplies missing flags") {
    const std::string path = "epimorph_test_config.txt";
    {
      std::ofstream f(path);
      f << "# defaults\ndirective=per=01\nn=6\nformat=table\n";
    }
    CHECK(run({"gen", "--config", path}).out == "010010\n");
    CHECK(run({"gen", "--config", path, "--n", "3"}).out == "010\n");
    {
      std::ofstream f(path);
      f << "bogus=1\n";
    }
    CHECK(run({"gen", "--periodic", "01", "--n", "2", "--config", path}).code == exit_usage);
    std::remove(path.c_str());
  }

  TEST_CASE("reports are reproducible") {
    const auto a = run({"sweep", "--k", "4", "--samples", "3", "--depth", "2000", "--seed", "5", "--format", "jsonl"});
    const auto b = run({"sweep", "--k", "4", "--samples", "3", "--depth", "2000", "--seed", "5", "--format", "jsonl"});
    CHECK(a.code == exit_pass);
    CHECK(a.out == b.out);
    const auto k3 = run({"sweep", "--k", "3", "--samples", "2", "--depth", "2000"});
    CHECK(k3.out.find("# experiment: theorem2") != std::string::npos);
    CHECK(run({"reproduce", "remark7", "--n", "3", "--depth", "20000"}).code == exit_pass);
  }
}
