#pragma once

#include <string>
#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

struct LayerVertex {
  Vertex vertex;
  int degree;

  friend bool operator==(const LayerVertex&, const LayerVertex&) = default;
};

/// Vertices next to leaves, the smallest degree among them, and the leaves
/// hanging off vertices of that smallest degree. All sets sorted by id.
struct LeafLayerProfile {
  std::vector<LayerVertex> l1_vertices;
  int d_min = 0;
  std::vector<Vertex> l1m_leaves;
};

/// Throws Error{NoLeaves} for the single-vertex tree.
LeafLayerProfile leaf_layer_profile(const Tree& t);

/// Leaf-to-leaf path v_0 .. v_{k+1} with the degree of each vertex.
struct DegreePath {
  std::vector<Vertex> vertices;
  std::vector<int> degrees;

  /// Number of interior vertices.
  int interior_count() const { return static_cast<int>(vertices.size()) - 2; }
};

/// One path per unordered leaf pair (a < b), oriented from a to b, ordered
/// lexicographically by (a, b).
std::vector<DegreePath> leaf_to_leaf_paths(const Tree& t);

/// Center-rooted AHU code. Equal codes iff isomorphic trees.
std::string canonical_form(const Tree& t);

/// AHU code of t rooted at root.
std::string rooted_code(const Tree& t, Vertex root);

/// One or two center vertices, ascending.
std::vector<Vertex> tree_centers(const Tree& t);

}  // namespace sombor
