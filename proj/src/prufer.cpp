#include "sombor/prufer.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sombor {

namespace {

__extension__ typedef unsigned __int128 Wide;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  Wide acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// Distinct permutations of a multiset given symbol multiplicities.
std::uint64_t multinomial(std::span<const int> counts) {
  std::uint64_t total = 0;
  std::uint64_t out = 1;
  for (int c : counts) {
    total += static_cast<std::uint64_t>(c);
    out = saturating_mul(out, binomial(total, static_cast<std::uint64_t>(c)));
  }
  return out;
}

}  // namespace

void prufer_decode_edges(std::span<const int> seq, int n, std::vector<int>& scratch,
                         std::vector<Edge>& edges) {
  edges.clear();
  std::vector<int>& degree = scratch;
  degree.assign(n, 1);
  for (int v : seq) ++degree[v];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
}

Tree prufer_to_tree(std::span<const int> seq, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Prüfer decode needs n >= 2");
  if (static_cast<int>(seq.size()) != n - 2) {
    throw Error(ErrorCode::InvalidArgument, "Prüfer sequence must have length n - 2");
  }
  for (int v : seq) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::OutOfRange, "Prüfer entry " + std::to_string(v) +
                                             " outside [0, " + std::to_string(n) + ")");
    }
  }
  std::vector<int> scratch;
  std::vector<Edge> edges;
  prufer_decode_edges(seq, n, scratch, edges);
  return Tree(n, edges);
}

std::vector<int> tree_to_prufer(const Tree& t) {
  const int n = t.vertex_count();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Prüfer encode needs n >= 2");
  std::vector<int> degree = t.degrees();
  std::vector<char> removed(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<int> seq;
  seq.reserve(n - 2);
  while (static_cast<int>(seq.size()) < n - 2) {
    const int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      seq.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return seq;
}

std::uint64_t labeled_tree_count(const DegreeSequence& d) {
  std::vector<int> counts;
  for (int deg : d.degrees()) counts.push_back(deg - 1);
  return multinomial(counts);
}

std::vector<int> prufer_multiset(const DegreeSequence& d) {
  std::vector<int> out;
  for (int i = 0; i < d.internal_count(); ++i) out.insert(out.end(), d.degrees()[i] - 1, i);
  return out;
}

std::vector<int> unrank_multiset_permutation(std::vector<int> sorted, std::uint64_t rank) {
  if (sorted.empty()) return sorted;
  const int symbols = sorted.back() + 1;
  std::vector<int> counts(symbols, 0);
  for (int s : sorted) ++counts[s];
  std::vector<int> out;
  out.reserve(sorted.size());
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    bool placed = false;
    for (int s = 0; s < symbols; ++s) {
      if (counts[s] == 0) continue;
      --counts[s];
      const std::uint64_t block = multinomial(counts);
      if (rank < block) {
        out.push_back(s);
        placed = true;
        break;
      }
      rank -= block;
      ++counts[s];
    }
    if (!placed) throw Error(ErrorCode::OutOfRange, "permutation rank out of range");
  }
  return out;
}

EnumerationStats enumerate_trees(const DegreeSequence& d, std::uint64_t cap,
                                 const std::function<void(const Tree&)>& visit) {
  const int n = d.vertex_count();
  std::vector<int> seq = prufer_multiset(d);
  std::vector<int> scratch;
  std::vector<Edge> edges;
  EnumerationStats stats;
  do {
    if (stats.enumerated == cap) {
      stats.capped = true;
      break;
    }
    prufer_decode_edges(seq, n, scratch, edges);
    ++stats.enumerated;
    visit(Tree(n, edges));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return stats;
}

}  // namespace sombor
