#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "sombor/tree.hpp"

namespace sombor {

/// Which cross pairing replaces edges (a, b) and (c, d).
enum class Recombination {
  AcBd,  // (a, c) and (b, d)
  AdBc,  // (a, d) and (b, c)
};

/// Degree-preserving exchange of two vertex-disjoint edges.
struct SwapMove {
  Edge edge_a;
  Edge edge_b;
  Recombination recombination = Recombination::AcBd;

  /// The two edges that replace edge_a and edge_b.
  std::pair<Edge, Edge> added_edges() const;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

/// The unique recombination of two vertex-disjoint tree edges that keeps the
/// graph a tree, or nullopt when the edges share a vertex (or are not edges).
std::optional<Recombination> tree_preserving_recombination(const Tree& t, Edge edge_a, Edge edge_b);

/// Change of the index when the move is applied. Only the four touched edge
/// weights change since every degree is preserved.
double swap_delta(const Tree& t, const SwapMove& move);

/// Throws Error{InvalidArgument} if the move does not yield a tree.
Tree apply_swap(const Tree& t, const SwapMove& move);

/// Every valid move: one per unordered pair of vertex-disjoint edges, in
/// lexicographic edge-pair order.
std::vector<SwapMove> two_swap_neighbors(const Tree& t);

struct LocalMaxReport {
  bool local_max = true;
  double so = 0.0;
  std::size_t moves_checked = 0;
  std::optional<SwapMove> best_move;  // set iff !local_max
  double best_delta = 0.0;            // largest delta over all moves (0 if none)
};

/// True iff no move raises the index by more than rel_tol * SO(t).
LocalMaxReport is_local_max(const Tree& t, double rel_tol = 1e-9);

nlohmann::json to_json(const SwapMove& m);
nlohmann::json to_json(const LocalMaxReport& r);

}  // namespace sombor
