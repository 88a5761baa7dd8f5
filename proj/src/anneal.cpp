#include "sombor/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sombor/constructor.hpp"
#include "sombor/index.hpp"
#include "sombor/io.hpp"

namespace sombor {

namespace {

struct Proposal {
  std::size_t first = 0;
  std::size_t second = 0;
  Edge add_first;
  Edge add_second;
  double delta = 0.0;
};

// Mutable tree for the walk. Degrees never change under a swap.
class SwapWalker {
 public:
  explicit SwapWalker(const Tree& t)
      : n_(t.vertex_count()), edges_(t.edges()), degree_(t.degrees()), adjacency_(n_) {
    for (Vertex v = 0; v < n_; ++v) adjacency_[v] = t.neighbors(v);
    seen_.resize(n_);
  }

  bool has_moves() const {
    return std::count_if(degree_.begin(), degree_.end(), [](int d) { return d >= 2; }) >= 2;
  }

  Proposal propose(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick_first(0, edges_.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_second(0, edges_.size() - 2);
    while (true) {
      std::size_t i = pick_first(rng);
      std::size_t j = pick_second(rng);
      if (j >= i) ++j;
      auto [a, b] = edges_[i];
      auto [c, d] = edges_[j];
      if (a == c || a == d || b == c || b == d) continue;
      Proposal p{i, j, {}, {}, 0.0};
      // The component of a (edges i and j cut) contains c or d iff a sits in
      // the middle component; the pairing must not join the middle endpoints.
      bool cross_ac_bd;
      reach(a, i, j);
      if (seen_[c]) {
        cross_ac_bd = false;
      } else if (seen_[d]) {
        cross_ac_bd = true;
      } else {
        reach(b, i, j);
        cross_ac_bd = seen_[c] != 0;
      }
      if (cross_ac_bd) {
        p.add_first = {a, c};
        p.add_second = {b, d};
      } else {
        p.add_first = {a, d};
        p.add_second = {b, c};
      }
      p.delta = weight(p.add_first) + weight(p.add_second) - weight(edges_[i]) - weight(edges_[j]);
      return p;
    }
  }

  void apply(const Proposal& p) {
    unlink(edges_[p.first]);
    unlink(edges_[p.second]);
    link(p.add_first);
    link(p.add_second);
    edges_[p.first] = p.add_first;
    edges_[p.second] = p.add_second;
  }

  Tree snapshot() const { return Tree(n_, edges_); }

 private:
  double weight(Edge e) const { return edge_weight(degree_[e.first], degree_[e.second]); }

  void unlink(Edge e) {
    auto drop = [](std::vector<Vertex>& list, Vertex v) {
      list.erase(std::find(list.begin(), list.end(), v));
    };
    drop(adjacency_[e.first], e.second);
    drop(adjacency_[e.second], e.first);
  }

  void link(Edge e) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }

  bool cut(Vertex u, Vertex w, std::size_t i, std::size_t j) const {
    auto same = [](Edge e, Vertex x, Vertex y) {
      return (e.first == x && e.second == y) || (e.first == y && e.second == x);
    };
    return same(edges_[i], u, w) || same(edges_[j], u, w);
  }

  void reach(Vertex start, std::size_t i, std::size_t j) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stack_.assign(1, start);
    seen_[start] = 1;
    while (!stack_.empty()) {
      Vertex u = stack_.back();
      stack_.pop_back();
      for (Vertex w : adjacency_[u]) {
        if (seen_[w] || cut(u, w, i, j)) continue;
        seen_[w] = 1;
        stack_.push_back(w);
      }
    }
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> seen_;
  std::vector<Vertex> stack_;
};

}  // namespace

AnnealResult anneal_search(const DegreeSequence& d, const AnnealOptions& options) {
  Tree start = construct_max_tree(d);
  const double start_so = sombor_index(start);
  AnnealResult result{start, start_so, start_so, 0.0, 0, 0, 0};
  SwapWalker walker(start);
  if (options.budget == 0 || !walker.has_moves()) return result;

  std::mt19937_64 rng(options.seed);
  double total = 0.0;
  for (int k = 0; k < options.calibration_moves; ++k) total += std::abs(walker.propose(rng).delta);
  double temperature = options.calibration_moves > 0 ? total / options.calibration_moves : 0.0;
  result.initial_temperature = temperature;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double current = start_so;
  for (std::uint64_t step = 0; step < options.budget; ++step) {
    const Proposal p = walker.propose(rng);
    ++result.proposals;
    bool accept = p.delta >= 0.0;
    if (!accept && temperature > 0.0) accept = unit(rng) < std::exp(p.delta / temperature);
    temperature *= options.cooling;
    if (!accept) continue;
    walker.apply(p);
    ++result.accepted;
    current += p.delta;
    if (current > result.best_so + 1e-12 * result.best_so) {
      Tree snapshot = walker.snapshot();
      current = sombor_index(snapshot);
      if (current > result.best_so) {
        result.best_so = current;
        result.best = std::move(snapshot);
        ++result.improvements;
      }
    }
  }
  return result;
}

nlohmann::json to_json(const AnnealResult& r) {
  return {{"best_so", r.best_so},
          {"start_so", r.start_so},
          {"initial_temperature", r.initial_temperature},
          {"proposals", r.proposals},
          {"accepted", r.accepted},
          {"improvements", r.improvements},
          {"best_tree", tree_to_json(r.best)}};
}

}  // namespace sombor
