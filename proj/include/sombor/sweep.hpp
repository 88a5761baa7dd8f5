#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sombor/oracle.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Every feasible internal degree sequence with 3 <= n <= max_n, ordered by
/// n, then m, then descending lexicographically.
std::vector<DegreeSequence> generate_degree_sequences(int max_n);

struct SweepRecord {
  std::string degrees;
  int n = 0;
  int m = 0;
  double constructed_so = 0.0;
  double oracle_so = 0.0;
  double gap = 0.0;
  bool optimal = false;
  bool capped = false;
  bool local_max = false;
  std::size_t theorem1_violations = 0;
  std::uint64_t enumerated = 0;
};

inline constexpr const char* kSweepCsvHeader =
    "degrees,n,m,constructed_so,oracle_so,gap,optimal,capped,local_max,theorem1_violations,"
    "enumerated";

struct SweepOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  int workers = 1;
  /// Where witness_<degrees>_<role>.json files go on a mismatch; none if unset.
  std::optional<std::filesystem::path> witness_dir;
};

/// Constructor vs oracle vs local search for one sequence.
SweepRecord evaluate_sequence(const DegreeSequence& d, const SweepOptions& options,
                              OracleResult* oracle_out = nullptr);

std::vector<SweepRecord> sweep(int max_n, const SweepOptions& options);

std::string to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(const std::string& text);

/// Writes witness_<degrees>_constructed.json and witness_<degrees>_oracle.json.
void write_witnesses(const std::filesystem::path& dir, const DegreeSequence& d,
                     const Tree& constructed, const Tree& oracle_best);

}  // namespace sombor
