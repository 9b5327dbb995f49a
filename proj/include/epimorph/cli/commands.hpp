#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "epimorph/source.hpp"

namespace epimorph::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Where the word comes from, and what is done to it before use:
/// base -> morphic image -> binary projection -> S-preimage.
struct SourceOptions {
  std::string directive;
  std::string periodic;
  std::string fixed_point;
  bool example3 = false;
  std::string morphism;
  std::string subset;
  std::string first;
};

/// Throws parse-error unless exactly one base is given.
std::unique_ptr<PrefixSource> build_source(const SourceOptions& options);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epimorph::cli
