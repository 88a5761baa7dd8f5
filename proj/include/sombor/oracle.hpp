#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sombor/tree.hpp"

namespace sombor {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct Witness {
  std::string code;  // canonical form
  Tree tree;         // first labeled tree (lexicographic Prüfer order) with this shape
  double so = 0.0;
};

/// Exact maximum of the index over all trees realizing a degree sequence.
struct OracleResult {
  double max_so = 0.0;
  std::uint64_t enumerated = 0;
  std::uint64_t total = 0;  // labeled trees realizing d (saturated)
  bool capped = false;
  std::vector<Witness> witnesses;  // sorted by canonical code
};

/// Enumerates every Prüfer string of d (up to cap) and keeps the
/// non-isomorphic trees whose index is within rel_tol of the maximum.
/// With workers > 1 the lexicographic rank space is split into contiguous
/// ranges; the result does not depend on the worker count.
OracleResult oracle_max(const DegreeSequence& d, std::uint64_t cap = kDefaultEnumerationCap,
                        int workers = 1, double rel_tol = 1e-9);

nlohmann::json to_json(const OracleResult& r);

}  // namespace sombor
