#include "sombor/structure.hpp"

#include <algorithm>

namespace sombor {

LeafLayerProfile leaf_layer_profile(const Tree& t) {
  if (t.vertex_count() < 2) {
    throw Error(ErrorCode::NoLeaves, "single-vertex tree has no leaves");
  }
  LeafLayerProfile profile;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto& nbrs = t.neighbors(v);
    bool has_leaf = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return t.is_leaf(w); });
    // In the single-edge tree both endpoints are leaves and adjacent to a leaf.
    if (has_leaf) profile.l1_vertices.push_back({v, t.degree(v)});
  }
  profile.d_min = std::min_element(profile.l1_vertices.begin(), profile.l1_vertices.end(),
                                   [](const LayerVertex& a, const LayerVertex& b) {
                                     return a.degree < b.degree;
                                   })
                      ->degree;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v) && t.degree(t.neighbors(v).front()) == profile.d_min) {
      profile.l1m_leaves.push_back(v);
    }
  }
  return profile;
}

namespace {

// Parent pointers and BFS order from root.
void bfs_from(const Tree& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  const int n = t.vertex_count();
  order.clear();
  order.reserve(n);
  parent.assign(n, -1);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex u = order[head];
    for (Vertex w : t.neighbors(u)) {
      if (parent[w] == -1) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<DegreePath> leaf_to_leaf_paths(const Tree& t) {
  const auto leaves = t.leaves();
  std::vector<DegreePath> paths;
  if (leaves.size() < 2) return paths;
  paths.reserve(leaves.size() * (leaves.size() - 1) / 2);
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    // Rooting at b, walking parents from a gives the a -> b path.
    bfs_from(t, leaves[a], order, parent);
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      DegreePath path;
      for (Vertex v = leaves[b]; v != leaves[a]; v = parent[v]) path.vertices.push_back(v);
      path.vertices.push_back(leaves[a]);
      std::reverse(path.vertices.begin(), path.vertices.end());
      path.degrees.reserve(path.vertices.size());
      for (Vertex v : path.vertices) path.degrees.push_back(t.degree(v));
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

std::vector<Vertex> tree_centers(const Tree& t) {
  const int n = t.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> remaining_degree = t.degrees();
  std::vector<Vertex> layer = t.leaves();
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--remaining_degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  bfs_from(t, root, order, parent);
  std::vector<std::string> code(t.vertex_count());
  std::vector<std::string> children;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    children.clear();
    for (Vertex w : t.neighbors(u)) {
      if (parent[w] == u) children.push_back(std::move(code[w]));
    }
    std::sort(children.begin(), children.end());
    std::string& out = code[u];
    out.push_back('(');
    for (const auto& c : children) out += c;
    out.push_back(')');
  }
  return code[root];
}

std::string canonical_form(const Tree& t) {
  const auto centers = tree_centers(t);
  std::string best = rooted_code(t, centers.front());
  for (std::size_t i = 1; i < centers.size(); ++i) {
    best = std::min(best, rooted_code(t, centers[i]));
  }
  return best;
}

}  // namespace sombor
