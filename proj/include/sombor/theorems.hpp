#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sombor/constructor.hpp"
#include "sombor/structure.hpp"
#include "sombor/tree.hpp"

namespace sombor {

enum class Parity { Odd, Even };

/// `Outer` compares v_i with its mirror v_{k-i+1}; `Inner` compares the
/// mirror with an interior v_j, i+1 <= j <= k-i+1.
enum class Inequality { Outer, Inner };

struct Theorem1Record {
  std::size_t path = 0;  // index into Theorem1Report::paths
  int i = 0;
  int j = 0;  // 0 for Outer
  Parity parity = Parity::Odd;
  Inequality inequality = Inequality::Outer;
  Vertex lhs_vertex = 0;
  Vertex rhs_vertex = 0;
  int lhs_degree = 0;
  int rhs_degree = 0;
  bool holds = true;
};

/// Degree-alternation checks along every leaf-to-leaf path.
///
/// Odd i asks d(v_i) >= d(v_{k-i+1}) >= d(v_j), even i the reverse, for
/// 1 <= i <= ceil((k+1)/2). A path is read in the orientation(s) where
/// d(v_1) >= d(v_k); when the two ends tie both orientations are checked.
struct Theorem1Report {
  std::vector<DegreePath> paths;  // oriented paths actually checked
  std::vector<Theorem1Record> records;
  std::size_t leaf_pairs = 0;
  std::size_t violations = 0;

  /// Records as JSON; all of them, or violations only.
  nlohmann::json to_json(bool include_passing = true) const;
};

Theorem1Report check_theorem1(const Tree& t);

struct AttachmentEntry {
  Vertex leaf = 0;
  int neighbor_degree = 0;
  double so = 0.0;
  bool in_l1m = false;
};

/// Index of t with subtree s attached at each of its leaves.
struct AttachmentProfile {
  std::vector<AttachmentEntry> entries;  // by leaf id
  double max_so = 0.0;
  std::vector<Vertex> argmax_leaves;
  bool equal_degree_ties = true;       // same neighbor degree -> same value
  bool non_increasing = true;          // larger neighbor degree -> no larger value
  bool max_on_every_l1m_leaf = true;   // each L1^m leaf attains the max
  bool argmax_meets_l1m = true;

  bool all_hold() const {
    return equal_degree_ties && non_increasing && max_on_every_l1m_leaf && argmax_meets_l1m;
  }
  nlohmann::json to_json() const;
};

AttachmentProfile attachment_profile(const Tree& t, const RootedSubtree& s,
                                     double rel_tol = 1e-9);

}  // namespace sombor
