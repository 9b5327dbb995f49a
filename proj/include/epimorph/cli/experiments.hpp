#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "epimorph/cli/report.hpp"
#include "epimorph/morphism.hpp"

namespace epimorph::cli {

/// Knobs shared by the reproduction experiments; zero means "experiment default".
struct ExperimentOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t depth = 0;
  std::size_t threads = 0;
};

struct ExperimentInfo {
  std::string id;
  std::string summary;
  std::function<Report(const ExperimentOptions&)> run;
};

const std::vector<ExperimentInfo>& experiments();
/// Throws parse-error for an unknown id.
const ExperimentInfo& find_experiment(std::string_view id);

// Named morphisms used by the experiments.
Morphism example3_morphism();
Morphism fibonacci_remark_morphism();
Morphism fibonacci_morphism();
Morphism tribonacci_morphism();

/// Sweep of projections of k-ary episturmian samples. k = 3 runs theorem2.
Report sweep_projections(std::size_t k, const ExperimentOptions& options);

/// Runs f(0..n-1) on up to `threads` workers; results keep index order.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& f);

/// The plateau rule: constant over the last ceil(0.9 * count) checkpoints.
bool plateaus(const std::vector<std::size_t>& values);
/// The growth rule: strictly increasing over at least five checkpoints.
bool strictly_increasing(const std::vector<std::size_t>& values);

}  // namespace epimorph::cli
