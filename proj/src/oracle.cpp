#include "sombor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "sombor/index.hpp"
#include "sombor/io.hpp"
#include "sombor/prufer.hpp"
#include "sombor/structure.hpp"

namespace sombor {

namespace {

struct Candidate {
  double fast_so;
  Witness witness;
};

struct Partial {
  double fast_max = -std::numeric_limits<double>::infinity();
  std::map<std::string, Candidate> candidates;
};

bool within(double value, double max, double rel_tol) { return value >= max - rel_tol * max; }

void scan_range(const DegreeSequence& d, std::uint64_t begin, std::uint64_t end, double rel_tol,
                Partial& out) {
  if (begin >= end) return;
  const int n = d.vertex_count();
  std::vector<int> degree(n, 1);
  std::copy(d.degrees().begin(), d.degrees().end(), degree.begin());
  const int max_degree = d.empty() ? 1 : d.degrees().front();
  const int stride = max_degree + 1;
  std::vector<double> weight(stride * stride, 0.0);
  for (int x = 1; x <= max_degree; ++x) {
    for (int y = 1; y <= max_degree; ++y) weight[x * stride + y] = edge_weight(x, y);
  }

  std::vector<int> seq = unrank_multiset_permutation(prufer_multiset(d), begin);
  std::vector<int> scratch;
  std::vector<Edge> edges;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    prufer_decode_edges(seq, n, scratch, edges);
    double so = 0.0;
    for (auto [u, v] : edges) so += weight[degree[u] * stride + degree[v]];
    if (so > out.fast_max) {
      out.fast_max = so;
      std::erase_if(out.candidates,
                    [&](const auto& kv) { return !within(kv.second.fast_so, so, rel_tol); });
    }
    if (within(so, out.fast_max, rel_tol)) {
      Tree tree(n, edges);
      std::string code = canonical_form(tree);
      if (!out.candidates.contains(code)) {
        const double exact = sombor_index(tree);
        out.candidates.emplace(code, Candidate{so, Witness{code, std::move(tree), exact}});
      }
    }
    std::next_permutation(seq.begin(), seq.end());
  }
}

}  // namespace

OracleResult oracle_max(const DegreeSequence& d, std::uint64_t cap, int workers, double rel_tol) {
  OracleResult result;
  result.total = labeled_tree_count(d);
  result.capped = result.total > cap;
  const std::uint64_t limit = std::min(result.total, cap);
  result.enumerated = limit;

  workers = std::max(1, workers);
  if (static_cast<std::uint64_t>(workers) > limit) workers = static_cast<int>(std::max<std::uint64_t>(limit, 1));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    scan_range(d, 0, limit, rel_tol, partials[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = limit / workers * w + std::min<std::uint64_t>(w, limit % workers);
      const std::uint64_t size = limit / workers + (static_cast<std::uint64_t>(w) < limit % workers ? 1 : 0);
      threads.emplace_back(scan_range, std::cref(d), begin, begin + size, rel_tol,
                           std::ref(partials[w]));
    }
    for (auto& t : threads) t.join();
  }

  double fast_max = -std::numeric_limits<double>::infinity();
  for (const auto& p : partials) fast_max = std::max(fast_max, p.fast_max);
  // Earlier ranges hold lexicographically earlier strings, so the first
  // representative of each shape wins.
  std::map<std::string, Witness> merged;
  for (auto& p : partials) {
    for (auto& [code, cand] : p.candidates) {
      if (within(cand.fast_so, fast_max, rel_tol) && !merged.contains(code)) {
        merged.emplace(code, std::move(cand.witness));
      }
    }
  }
  for (auto& [code, w] : merged) {
    result.max_so = std::max(result.max_so, w.so);
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

nlohmann::json to_json(const OracleResult& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(
        {{"code", w.code}, {"sombor_index", w.so}, {"tree", tree_to_json(w.tree)}});
  }
  return {{"max_so", r.max_so},
          {"enumerated", r.enumerated},
          {"total", r.total},
          {"capped", r.capped},
          {"witnesses", witnesses}};
}

}  // namespace sombor
