#include "sombor/sweep.hpp"

#include <functional>
#include <sstream>

#include "sombor/constructor.hpp"
#include "sombor/index.hpp"
#include "sombor/io.hpp"
#include "sombor/swap.hpp"
#include "sombor/theorems.hpp"

namespace sombor {

namespace {

// Non-increasing sequences of `count` entries >= 2 bounded by `ceiling`
// summing to `total`, in descending lexicographic order.
void partitions(int total, int count, int ceiling, std::vector<int>& prefix,
                std::vector<DegreeSequence>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(DegreeSequence::validate(prefix));
    return;
  }
  const int top = std::min(ceiling, total - 2 * (count - 1));
  for (int d = top; d >= 2; --d) {
    if (d * count < total) break;
    prefix.push_back(d);
    partitions(total - d, count - 1, d, prefix, out);
    prefix.pop_back();
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::InvalidArgument, "bad boolean '" + s + "' in sweep CSV");
}

}  // namespace

std::vector<DegreeSequence> generate_degree_sequences(int max_n) {
  if (max_n < 3) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 3");
  std::vector<DegreeSequence> out;
  std::vector<int> prefix;
  for (int n = 3; n <= max_n; ++n) {
    for (int m = 1; m <= n - 2; ++m) partitions(n + m - 2, m, n - 1, prefix, out);
  }
  return out;
}

SweepRecord evaluate_sequence(const DegreeSequence& d, const SweepOptions& options,
                              OracleResult* oracle_out) {
  const Tree constructed = construct_max_tree(d);
  OracleResult oracle = oracle_max(d, options.cap, options.workers);

  SweepRecord r;
  r.degrees = d.to_string();
  r.n = d.vertex_count();
  r.m = d.internal_count();
  r.constructed_so = sombor_index(constructed);
  r.oracle_so = oracle.max_so;
  r.gap = r.oracle_so - r.constructed_so;
  r.capped = oracle.capped;
  r.optimal = !r.capped && r.gap <= kRelTol * r.oracle_so;
  r.local_max = is_local_max(constructed).local_max;
  r.theorem1_violations = check_theorem1(constructed).violations;
  r.enumerated = oracle.enumerated;

  if (!r.optimal && !r.capped && options.witness_dir && !oracle.witnesses.empty()) {
    write_witnesses(*options.witness_dir, d, constructed, oracle.witnesses.front().tree);
  }
  if (oracle_out) *oracle_out = std::move(oracle);
  return r;
}

std::vector<SweepRecord> sweep(int max_n, const SweepOptions& options) {
  std::vector<SweepRecord> records;
  for (const auto& d : generate_degree_sequences(max_n)) {
    records.push_back(evaluate_sequence(d, options));
  }
  return records;
}

void write_witnesses(const std::filesystem::path& dir, const DegreeSequence& d,
                     const Tree& constructed, const Tree& oracle_best) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  const std::string stem = "witness_" + d.to_string() + "_";
  write_text_file(dir / (stem + "constructed.json"), tree_to_json(constructed).dump() + "\n");
  write_text_file(dir / (stem + "oracle.json"), tree_to_json(oracle_best).dump() + "\n");
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += '"' + r.degrees + '"';
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.m);
    out += ',' + format_real(r.constructed_so);
    out += ',' + format_real(r.oracle_so);
    out += ',' + format_real(r.gap);
    out += ',' + bool_text(r.optimal);
    out += ',' + bool_text(r.capped);
    out += ',' + bool_text(r.local_max);
    out += ',' + std::to_string(r.theorem1_violations);
    out += ',' + std::to_string(r.enumerated);
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw Error(ErrorCode::InvalidArgument, "sweep CSV header mismatch");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() != '"') throw Error(ErrorCode::InvalidArgument, "degrees field must be quoted");
    const auto close = line.find('"', 1);
    if (close == std::string::npos || close + 1 >= line.size() || line[close + 1] != ',') {
      throw Error(ErrorCode::InvalidArgument, "unterminated degrees field");
    }
    SweepRecord r;
    r.degrees = line.substr(1, close - 1);
    std::vector<std::string> fields;
    std::istringstream rest(line.substr(close + 2));
    std::string field;
    while (std::getline(rest, field, ',')) fields.push_back(field);
    if (fields.size() != 10) {
      throw Error(ErrorCode::InvalidArgument, "sweep CSV row has wrong field count");
    }
    try {
      r.n = std::stoi(fields[0]);
      r.m = std::stoi(fields[1]);
      r.constructed_so = std::stod(fields[2]);
      r.oracle_so = std::stod(fields[3]);
      r.gap = std::stod(fields[4]);
      r.optimal = parse_bool(fields[5]);
      r.capped = parse_bool(fields[6]);
      r.local_max = parse_bool(fields[7]);
      r.theorem1_violations = std::stoull(fields[8]);
      r.enumerated = std::stoull(fields[9]);
    } catch (const std::logic_error& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad number in sweep CSV: ") + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace sombor
