#include "sombor/constructor.hpp"

#include <algorithm>
#include <functional>

#include "sombor/structure.hpp"

namespace sombor {

std::vector<SubtreeSpec> decompose(const DegreeSequence& d) {
  if (d.empty()) {
    throw Error(ErrorCode::InvalidArgument, "decompose needs at least one internal degree");
  }
  // Sorted non-increasing; the smallest remaining degree is at the back.
  std::vector<int> remaining = d.degrees();
  std::vector<SubtreeSpec> specs;
  while (true) {
    const int count = static_cast<int>(remaining.size());
    const int smallest = remaining.back();
    if (smallest >= count - 1) {
      SubtreeSpec base{SubtreeKind::Base, smallest,
                       std::vector<int>(remaining.begin(), remaining.end() - 1),
                       smallest - (count - 1)};
      specs.push_back(std::move(base));
      return specs;
    }
    remaining.pop_back();
    SubtreeSpec chain{SubtreeKind::Chain, smallest,
                      std::vector<int>(remaining.begin(), remaining.begin() + (smallest - 1)), 0};
    remaining.erase(remaining.begin(), remaining.begin() + (smallest - 1));
    specs.push_back(std::move(chain));
  }
}

RootedSubtree materialize(const SubtreeSpec& spec) {
  const int children = static_cast<int>(spec.child_degrees.size());
  if (spec.kind == SubtreeKind::Chain) {
    if (children != spec.root_degree - 1 || spec.filler_leaves != 0) {
      throw Error(ErrorCode::InvalidArgument, "chain spec needs root_degree - 1 children");
    }
  } else if (children + spec.filler_leaves != spec.root_degree || spec.filler_leaves < 0) {
    throw Error(ErrorCode::InvalidArgument, "base spec children and filler must sum to root degree");
  }
  std::vector<int> child_degrees = spec.child_degrees;
  if (std::any_of(child_degrees.begin(), child_degrees.end(), [](int c) { return c < 2; })) {
    throw Error(ErrorCode::InvalidArgument, "child degrees must be at least 2");
  }
  std::sort(child_degrees.begin(), child_degrees.end(), std::greater<>());

  std::vector<Edge> edges;
  Vertex next = 1;
  for (int i = 0; i < children + spec.filler_leaves; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < children; ++i) {
    const Vertex child = 1 + i;
    for (int leaf = 0; leaf < child_degrees[i] - 1; ++leaf) edges.emplace_back(child, next++);
  }
  return RootedSubtree{Tree(next, edges), 0, spec.root_degree, spec.kind};
}

Vertex attachment_site(const Tree& t) {
  if (t.vertex_count() < 2) {
    throw Error(ErrorCode::NoAttachmentSite, "tree has no leaves");
  }
  const auto profile = leaf_layer_profile(t);
  return profile.l1m_leaves.front();
}

Tree attach_at(const Tree& t, Vertex site, const RootedSubtree& s) {
  if (site < 0 || site >= t.vertex_count() || !t.is_leaf(site)) {
    throw Error(ErrorCode::InvalidArgument, "attachment site must be a leaf");
  }
  const int n = t.vertex_count();
  std::vector<Vertex> mapping(s.tree.vertex_count());
  Vertex next = n;
  for (Vertex v = 0; v < s.tree.vertex_count(); ++v) {
    mapping[v] = (v == s.root) ? site : next++;
  }
  std::vector<Edge> edges = t.edges();
  for (auto [u, v] : s.tree.edges()) edges.emplace_back(mapping[u], mapping[v]);
  return Tree(next, edges);
}

Tree merge_once(const Tree& t, const RootedSubtree& s) {
  if (s.kind != SubtreeKind::Chain) {
    throw Error(ErrorCode::InvalidArgument, "only chain subtrees are merged");
  }
  return attach_at(t, attachment_site(t), s);
}

Tree bfs_relabel(const Tree& t, Vertex root) {
  const int n = t.vertex_count();
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::vector<Vertex> children;
  for (std::size_t head = 0; head < order.size(); ++head) {
    children.clear();
    for (Vertex w : t.neighbors(order[head])) {
      if (!seen[w]) children.push_back(w);
    }
    std::stable_sort(children.begin(), children.end(),
                     [&](Vertex a, Vertex b) { return t.degree(a) > t.degree(b); });
    for (Vertex w : children) {
      seen[w] = 1;
      order.push_back(w);
    }
  }
  std::vector<Vertex> mapping(n);
  for (int i = 0; i < n; ++i) mapping[order[i]] = i;
  return t.relabeled(mapping);
}

ConstructionTrace construct_with_trace(const DegreeSequence& d) {
  if (d.empty()) {
    Tree edge = make_path(2);
    return ConstructionTrace{{}, {edge}, edge};
  }
  auto specs = decompose(d);
  std::vector<Tree> stages;
  Tree current = materialize(specs.back()).tree;
  stages.push_back(current);
  for (auto it = specs.rbegin() + 1; it != specs.rend(); ++it) {
    current = merge_once(current, materialize(*it));
    stages.push_back(current);
  }
  // The base root is vertex 0 and is never replaced by a merge.
  Tree result = bfs_relabel(current, 0);
  return ConstructionTrace{std::move(specs), std::move(stages), std::move(result)};
}

Tree construct_max_tree(const DegreeSequence& d) { return construct_with_trace(d).result; }

}  // namespace sombor
