#pragma once

// Shared fixtures and test-only oracles.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sombor/constructor.hpp"
#include "sombor/prufer.hpp"
#include "sombor/tree.hpp"

namespace sombor::test {

inline Tree random_tree(std::mt19937_64& rng, int n) {
  if (n <= 2) return make_path(std::max(n, 1));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& v : seq) v = pick(rng);
  return prufer_to_tree(seq, n);
}

inline DegreeSequence example_sequence() {
  return DegreeSequence::validate({5, 5, 5, 4, 3, 3, 2, 2});
}

/// Base subtree of the worked example: root 0 of degree 3 with children of
/// degrees 5, 4, 3 (ids 1, 2, 3).
inline Tree example_base_tree() {
  return materialize(SubtreeSpec{SubtreeKind::Base, 3, {5, 4, 3}, 0}).tree;
}

inline Tree example_final_tree() { return construct_max_tree(example_sequence()); }

/// Index recomputed from scratch with plain sqrt and no shared code.
inline double plain_index(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  long double sum = 0;
  for (auto [u, v] : edges) sum += std::sqrt((long double)(deg[u] * deg[u] + deg[v] * deg[v]));
  return static_cast<double>(sum);
}

struct BruteForceMax {
  double max_so = -1;
  long long realizations = 0;
};

/// Exhaustive search over all (n-1)-edge subsets of K_n: keeps the
/// subsets that are trees with the requested internal degree multiset.
/// Independent of the Prüfer machinery; feasible up to n = 8.
inline BruteForceMax brute_force_max(std::vector<int> internal) {
  std::sort(internal.begin(), internal.end(), std::greater<>());
  int sum = 0;
  for (int d : internal) sum += d;
  const int m = static_cast<int>(internal.size());
  const int n = m + (sum - 2 * m + 2);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  BruteForceMax out;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      // Union-find acyclicity check; n - 1 acyclic edges span a tree.
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (auto [u, v] : chosen) {
        int a = find(u), b = find(v);
        if (a == b) return;
        parent[a] = b;
      }
      std::vector<int> deg(n, 0);
      for (auto [u, v] : chosen) {
        ++deg[u];
        ++deg[v];
      }
      std::vector<int> inner;
      for (int d : deg) {
        if (d >= 2) inner.push_back(d);
      }
      std::sort(inner.begin(), inner.end(), std::greater<>());
      if (inner != internal) return;
      ++out.realizations;
      out.max_so = std::max(out.max_so, plain_index(n, chosen));
      return;
    }
    for (std::size_t i = start; i < all.size(); ++i) {
      if (all.size() - i < static_cast<std::size_t>(n - 1) - chosen.size()) break;
      chosen.push_back(all[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace sombor::test
