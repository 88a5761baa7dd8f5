#include "sombor/swap.hpp"

#include <algorithm>

#include "sombor/index.hpp"

namespace sombor {

namespace {

bool is_edge(Edge e, Edge f) {
  return (e.first == f.first && e.second == f.second) || (e.first == f.second && e.second == f.first);
}

// Vertices reachable from start without crossing either removed edge.
std::vector<char> reach_without(const Tree& t, Vertex start, Edge cut_a, Edge cut_b) {
  std::vector<char> seen(t.vertex_count(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(u)) {
      if (seen[w] || is_edge({u, w}, cut_a) || is_edge({u, w}, cut_b)) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

std::pair<Edge, Edge> SwapMove::added_edges() const {
  auto [a, b] = edge_a;
  auto [c, d] = edge_b;
  if (recombination == Recombination::AcBd) return {{a, c}, {b, d}};
  return {{a, d}, {b, c}};
}

std::optional<Recombination> tree_preserving_recombination(const Tree& t, Edge edge_a, Edge edge_b) {
  auto [a, b] = edge_a;
  auto [c, d] = edge_b;
  if (a == c || a == d || b == c || b == d) return std::nullopt;
  if (!t.adjacent(a, b) || !t.adjacent(c, d)) return std::nullopt;
  // Cutting both edges leaves three components; the middle one holds one
  // endpoint of each edge, and joining those two endpoints closes a cycle.
  auto from_a = reach_without(t, a, edge_a, edge_b);
  if (from_a[c]) return Recombination::AdBc;
  if (from_a[d]) return Recombination::AcBd;
  auto from_b = reach_without(t, b, edge_a, edge_b);
  return from_b[c] ? Recombination::AcBd : Recombination::AdBc;
}

double swap_delta(const Tree& t, const SwapMove& move) {
  auto [a, b] = move.edge_a;
  auto [c, d] = move.edge_b;
  auto [e1, e2] = move.added_edges();
  auto w = [&](Vertex x, Vertex y) { return edge_weight(t.degree(x), t.degree(y)); };
  return (w(e1.first, e1.second) + w(e2.first, e2.second)) - (w(a, b) + w(c, d));
}

Tree apply_swap(const Tree& t, const SwapMove& move) {
  auto valid = tree_preserving_recombination(t, move.edge_a, move.edge_b);
  if (!valid || *valid != move.recombination) {
    throw Error(ErrorCode::InvalidArgument, "swap move does not preserve the tree");
  }
  std::vector<Edge> edges;
  for (auto e : t.edges()) {
    if (!is_edge(e, move.edge_a) && !is_edge(e, move.edge_b)) edges.push_back(e);
  }
  auto [e1, e2] = move.added_edges();
  edges.push_back(e1);
  edges.push_back(e2);
  return Tree(t.vertex_count(), edges);
}

std::vector<SwapMove> two_swap_neighbors(const Tree& t) {
  const auto edges = t.edges();
  std::vector<SwapMove> moves;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (auto r = tree_preserving_recombination(t, edges[i], edges[j])) {
        moves.push_back(SwapMove{edges[i], edges[j], *r});
      }
    }
  }
  return moves;
}

LocalMaxReport is_local_max(const Tree& t, double rel_tol) {
  LocalMaxReport report;
  report.so = sombor_index(t);
  std::optional<SwapMove> best;
  double best_delta = 0.0;
  for (const auto& move : two_swap_neighbors(t)) {
    ++report.moves_checked;
    const double delta = swap_delta(t, move);
    if (!best || delta > best_delta) {
      best = move;
      best_delta = delta;
    }
  }
  report.best_delta = best ? best_delta : 0.0;
  report.local_max = !(best && best_delta > rel_tol * report.so);
  if (!report.local_max) report.best_move = best;
  return report;
}

nlohmann::json to_json(const SwapMove& m) {
  auto [e1, e2] = m.added_edges();
  return {{"edge_a", {m.edge_a.first, m.edge_a.second}},
          {"edge_b", {m.edge_b.first, m.edge_b.second}},
          {"recombination", m.recombination == Recombination::AcBd ? "ac_bd" : "ad_bc"},
          {"added", {{e1.first, e1.second}, {e2.first, e2.second}}}};
}

nlohmann::json to_json(const LocalMaxReport& r) {
  nlohmann::json out{{"local_max", r.local_max},
                     {"sombor_index", r.so},
                     {"moves_checked", r.moves_checked},
                     {"best_delta", r.best_delta}};
  out["best_move"] = r.best_move ? to_json(*r.best_move) : nlohmann::json(nullptr);
  return out;
}

}  // namespace sombor
