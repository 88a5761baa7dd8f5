// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sombor/anneal.hpp"
#include "sombor/cli.hpp"
#include "sombor/constructor.hpp"
#include "sombor/index.hpp"
#include "sombor/io.hpp"
#include "sombor/oracle.hpp"
#include "sombor/prufer.hpp"
#include "sombor/structure.hpp"
#include "sombor/swap.hpp"
#include "sombor/sweep.hpp"
#include "sombor/theorems.hpp"

using namespace sombor;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits = 1) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

struct SequenceRow {
  DegreeSequence d;
  double constructed_so = 0.0;
  double oracle_so = 0.0;
  bool capped = true;
};

// 1. Every n <= 12 sequence through the `verify` subcommand, single worker.
std::vector<SequenceRow> criterion_verify(const fs::path& report_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SequenceRow> rows;
  std::size_t optimal = 0, counterexamples = 0, bad = 0;
  const fs::path witness_dir = report_dir / "witnesses";
  for (const auto& d : generate_degree_sequences(12)) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--degrees", d.to_string(), "--workers", "1", "--cap",
                               std::to_string(kDefaultEnumerationCap), "--witness-dir",
                               witness_dir.string()},
                              out, err);
    SequenceRow row{d};
    try {
      const json j = json::parse(out.str());
      row.constructed_so = j.at("constructed_so").get<double>();
      row.oracle_so = j.at("oracle_so").get<double>();
      row.capped = j.at("capped").get<bool>();
      const bool within = approx_equal(row.constructed_so, row.oracle_so, kRelTol);
      if (code == cli::kConfirmed && !row.capped && within) {
        ++optimal;
      } else if (code == cli::kCounterexample && !row.capped && j.contains("witness_pair")) {
        ++counterexamples;
        std::cout << "  counterexample " << d.to_string() << " constructed "
                  << format_real(row.constructed_so) << " oracle " << format_real(row.oracle_so)
                  << '\n';
      } else {
        ++bad;
        std::cout << "  unexpected verify outcome for " << d.to_string() << " exit " << code << '\n';
      }
    } catch (const std::exception& e) {
      ++bad;
      std::cout << "  verify output unreadable for " << d.to_string() << ": " << e.what() << '\n';
    }
    rows.push_back(std::move(row));
  }
  const double elapsed = seconds_since(t0);
  const bool ok = bad == 0 && elapsed <= 15 * 60;
  report(1, ok,
         std::to_string(rows.size()) + " sequences, " + std::to_string(optimal) + " optimal, " +
             std::to_string(counterexamples) + " counterexamples with witnesses, " +
             std::to_string(bad) + " incomplete, " + fixed(elapsed) + " s");
  return rows;
}

// 2. The worked example.
void criterion_example() {
  const auto d = DegreeSequence::validate({5, 5, 5, 4, 3, 3, 2, 2});
  const auto specs = decompose(d);
  const std::vector<SubtreeSpec> expected{
      {SubtreeKind::Chain, 2, {5}, 0},
      {SubtreeKind::Chain, 2, {5}, 0},
      {SubtreeKind::Base, 3, {5, 4, 3}, 0},
  };
  const Tree t = construct_max_tree(d);
  const double so = sombor_index(t);
  bool stable = true;
  for (int run = 0; run < 5; ++run) {
    stable = stable && approx_equal(sombor_index(construct_max_tree(d)), so, 1e-12);
  }
  // Independent tally: 12 edges 5-1, one 5-3, 3-4, 3-3, three 4-1, 2-3, 2-5 twice each.
  const double closed = 12 * std::sqrt(26.0) + std::sqrt(34.0) + 5.0 + std::sqrt(18.0) +
                        3 * std::sqrt(17.0) + 2 * std::sqrt(13.0) + 2 * std::sqrt(29.0);
  const bool ok = specs == expected && t.vertex_count() == 23 && t.leaves().size() == 15 &&
                  t.internal_degrees() == d.degrees() && is_local_max(t).local_max && stable &&
                  approx_equal(so, closed, 1e-12);
  report(2, ok, "decompose " + std::string(specs == expected ? "matches" : "differs") + ", n=" +
                    std::to_string(t.vertex_count()) + ", leaves=" +
                    std::to_string(t.leaves().size()) + ", SO=" + format_real(so));
}

// 3. Stars and paths.
void criterion_closed_forms() {
  int bad = 0;
  for (int n = 3; n <= 50; ++n) {
    const double star = (n - 1) * std::sqrt(double((n - 1) * (n - 1) + 1));
    bad += !approx_equal(sombor_index(make_star(n - 1)), star, 1e-12);
    const double path = 2 * std::sqrt(5.0) + (n - 3) * std::sqrt(8.0);
    bad += !approx_equal(sombor_index(make_path(n)), path, 1e-12);
  }
  report(3, bad == 0, std::to_string(bad) + " mismatches over n = 3..50");
}

// 4. Monotonicity grids on [1, 50].
void criterion_lemmas() {
  long first = 0, second = 0, third = 0;
  for (int x = 1; x <= 50; ++x) {
    for (int y = x; y <= 50; ++y) first += edge_weight(x, 1) > edge_weight(y, 1);
  }
  for (int a = 1; a <= 50; ++a) {
    for (int b = 1; b <= 50; ++b) {
      for (int x = 1; x <= 50; ++x) {
        for (int x2 = x + 1; x2 <= 50; ++x2) {
          const double lo = edge_weight(x, a) - edge_weight(x, b);
          const double hi = edge_weight(x2, a) - edge_weight(x2, b);
          second += a <= b ? lo > hi : lo < hi;
        }
      }
    }
  }
  for (int x = 1; x < 50; ++x) {
    for (int y = 1; y <= 50; ++y) {
      third += !(edge_weight(x + 1, y) > edge_weight(x, y));
      third += !(edge_weight(y, x + 1) > edge_weight(y, x));
    }
  }
  report(4, first + second + third == 0,
         "violations " + std::to_string(first) + "/" + std::to_string(second) + "/" +
             std::to_string(third) + " (leaf weight / difference monotonicity / strict growth)");
}

// 5. Random host trees against random chain subtrees.
void criterion_attachment() {
  std::mt19937_64 rng(2024);
  int non_increasing = 0, ties = 0, meets = 0;
  const int pairs = 1000;
  for (int k = 0; k < pairs; ++k) {
    const int n = std::uniform_int_distribution<int>(3, 24)(rng);
    std::vector<int> seq(n - 2);
    for (auto& v : seq) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const Tree host = prufer_to_tree(seq, n);

    const int root = std::uniform_int_distribution<int>(2, 5)(rng);
    std::vector<int> children(root - 1);
    for (auto& c : children) c = std::uniform_int_distribution<int>(2, 6)(rng);
    std::sort(children.begin(), children.end(), std::greater<>());
    const auto chain = materialize({SubtreeKind::Chain, root, children, 0});

    const auto p = attachment_profile(host, chain, 1e-12);
    non_increasing += p.non_increasing;
    ties += p.equal_degree_ties;
    meets += p.argmax_meets_l1m;
  }
  report(5, non_increasing == pairs && ties == pairs && meets == pairs,
         std::to_string(pairs) + " pairs: non-increasing " + std::to_string(non_increasing) +
             ", ties " + std::to_string(ties) + ", argmax meets L1m " + std::to_string(meets));
}

// 6. No improving 2-swap.
void criterion_local_max(const std::vector<SequenceRow>& rows) {
  std::size_t local = 0;
  for (const auto& row : rows) {
    const auto r = is_local_max(construct_max_tree(row.d), kRelTol);
    if (r.local_max) {
      ++local;
    } else {
      std::cout << "  improving swap on " << row.d.to_string() << " delta "
                << format_real(r.best_delta) << '\n';
    }
  }
  report(6, local == rows.size(),
         std::to_string(local) + "/" + std::to_string(rows.size()) + " constructed trees are local maxima");
}

// 7. Annealer with seed 42, budget 1e5.
void criterion_anneal(const std::vector<SequenceRow>& rows) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t matched = 0, below = 0, beats = 0, comparable = 0;
  for (const auto& row : rows) {
    AnnealOptions options;
    options.seed = 42;
    options.budget = 100'000;
    const auto r = anneal_search(row.d, options);
    const double constructed = sombor_index(construct_max_tree(row.d));
    if (r.best_so < constructed && !approx_equal(r.best_so, constructed, kRelTol)) ++below;
    if (row.capped) continue;
    ++comparable;
    if (approx_equal(r.best_so, row.oracle_so, kRelTol)) {
      ++matched;
    } else if (r.best_so > row.oracle_so) {
      ++beats;
    }
  }
  const double rate = comparable == 0 ? 0.0 : double(matched) / double(comparable);
  report(7, rate >= 0.95 && below == 0 && beats == 0,
         "matched oracle on " + std::to_string(matched) + "/" + std::to_string(comparable) + " (" +
             fixed(100 * rate) + "%), below constructed " + std::to_string(below) + ", " +
             fixed(seconds_since(t0)) + " s");
}

// 8. Path-degree report over constructed trees plus the example.
bool well_formed(const json& entry) {
  const Tree t = tree_from_json(entry.at("tree"));
  const json& th = entry.at("theorem1");
  std::size_t listed = 0;
  for (const auto& rec : th.at("records")) {
    if (rec.at("holds").get<bool>()) return false;
    ++listed;
    const auto path = rec.at("path").get<std::vector<Vertex>>();
    const auto degs = rec.at("path_degrees").get<std::vector<int>>();
    if (path.size() != degs.size() || path.size() < 2) return false;
    for (std::size_t q = 0; q < path.size(); ++q) {
      if (t.degree(path[q]) != degs[q]) return false;
      if (q > 0 && !t.adjacent(path[q - 1], path[q])) return false;
    }
    if (!t.is_leaf(path.front()) || !t.is_leaf(path.back())) return false;
    const Vertex lhs = rec.at("lhs_vertex").get<Vertex>();
    const Vertex rhs = rec.at("rhs_vertex").get<Vertex>();
    if (t.degree(lhs) != rec.at("lhs_degree").get<int>()) return false;
    if (t.degree(rhs) != rec.at("rhs_degree").get<int>()) return false;
    if (std::find(path.begin(), path.end(), lhs) == path.end()) return false;
    if (std::find(path.begin(), path.end(), rhs) == path.end()) return false;
    const auto parity = rec.at("parity").get<std::string>();
    if (parity != "odd" && parity != "even") return false;
    if ((parity == "odd") != (rec.at("i").get<int>() % 2 == 1)) return false;
  }
  return listed == th.at("violations").get<std::size_t>() &&
         th.at("records_checked").get<std::size_t>() >= listed;
}

void criterion_theorem1(const std::vector<SequenceRow>& rows, const fs::path& report_dir) {
  std::vector<DegreeSequence> sequences;
  for (const auto& row : rows) sequences.push_back(row.d);
  sequences.push_back(DegreeSequence::validate({5, 5, 5, 4, 3, 3, 2, 2}));

  json trees = json::array();
  std::size_t total_violations = 0, trees_with_violations = 0;
  for (const auto& d : sequences) {
    const Tree t = construct_max_tree(d);
    const auto rep = check_theorem1(t);
    total_violations += rep.violations;
    trees_with_violations += rep.violations > 0;
    trees.push_back({{"degrees", d.to_string()},
                     {"n", t.vertex_count()},
                     {"tree", tree_to_json(t)},
                     {"sombor_index", sombor_index(t)},
                     {"theorem1", rep.to_json(false)}});
  }
  const json doc{{"trees", trees},
                 {"tree_count", sequences.size()},
                 {"trees_with_violations", trees_with_violations},
                 {"violations", total_violations}};
  const fs::path path = report_dir / "theorem1_report.json";
  write_text_file(path, doc.dump(2) + "\n");

  bool ok = true;
  try {
    std::ifstream in(path);
    const json back = json::parse(in);
    ok = back.at("trees").size() == sequences.size();
    for (const auto& entry : back.at("trees")) ok = ok && well_formed(entry);
  } catch (const std::exception& e) {
    std::cout << "  report unreadable: " << e.what() << '\n';
    ok = false;
  }
  report(8, ok,
         path.string() + ": " + std::to_string(sequences.size()) + " trees, " +
             std::to_string(total_violations) + " violating records in " +
             std::to_string(trees_with_violations) + " trees (findings)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the maximum-Sombor tree construction"};
  std::string report_dir = "acceptance_reports";
  app.add_option("--report-dir", report_dir, "Where reports and witnesses are written");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(report_dir);

  const auto rows = criterion_verify(report_dir);
  criterion_example();
  criterion_closed_forms();
  criterion_lemmas();
  criterion_attachment();
  criterion_local_max(rows);
  criterion_anneal(rows);
  criterion_theorem1(rows, report_dir);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
