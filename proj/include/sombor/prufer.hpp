#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

/// Standard Prüfer decode; seq has length n - 2 with entries in [0, n).
Tree prufer_to_tree(std::span<const int> seq, int n);

/// Decodes into a caller-owned edge buffer. No validation; scratch must hold
/// n entries. Used by the enumeration hot loop.
void prufer_decode_edges(std::span<const int> seq, int n, std::vector<int>& scratch,
                         std::vector<Edge>& edges);

/// Inverse of prufer_to_tree: repeatedly strips the smallest leaf.
std::vector<int> tree_to_prufer(const Tree& t);

/// (n-2)! / prod (d_i - 1)!, saturating at UINT64_MAX.
std::uint64_t labeled_tree_count(const DegreeSequence& d);

/// Sorted Prüfer multiset for d: internal vertex i (0-based) appears d_i - 1
/// times; leaves m..n-1 do not appear.
std::vector<int> prufer_multiset(const DegreeSequence& d);

/// The rank-th distinct permutation (0-based, lexicographic) of a sorted
/// multiset. rank must be below the number of distinct permutations.
std::vector<int> unrank_multiset_permutation(std::vector<int> sorted, std::uint64_t rank);

struct EnumerationStats {
  std::uint64_t enumerated = 0;
  bool capped = false;
};

/// Visits every labeled tree realizing d (one per distinct Prüfer string, in
/// lexicographic order) until cap strings have been decoded.
EnumerationStats enumerate_trees(const DegreeSequence& d, std::uint64_t cap,
                                 const std::function<void(const Tree&)>& visit);

}  // namespace sombor
