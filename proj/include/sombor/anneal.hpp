#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "sombor/tree.hpp"

namespace sombor {

struct AnnealOptions {
  std::uint64_t budget = 100'000;  // proposed moves
  std::uint64_t seed = 42;
  double cooling = 0.999;
  int calibration_moves = 100;
};

struct AnnealResult {
  Tree best;
  double best_so = 0.0;
  double start_so = 0.0;
  double initial_temperature = 0.0;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  std::uint64_t improvements = 0;  // times the best-so-far was raised
};

/// Simulated annealing over degree-preserving swaps, started from the
/// constructed tree. The initial temperature is the mean |delta| of
/// `calibration_moves` random moves (not applied); it cools geometrically
/// after every proposal. Reproducible from the seed.
AnnealResult anneal_search(const DegreeSequence& d, const AnnealOptions& options = {});

nlohmann::json to_json(const AnnealResult& r);

}  // namespace sombor
