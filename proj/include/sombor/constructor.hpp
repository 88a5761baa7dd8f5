#pragma once

#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

enum class SubtreeKind { Chain, Base };

/// One unit of the greedy decomposition.
///
/// A chain root keeps one slot open for the merge, so it carries
/// root_degree - 1 children. The base root is complete: its children plus
/// filler leaves account for its full degree.
struct SubtreeSpec {
  SubtreeKind kind = SubtreeKind::Base;
  int root_degree = 0;
  std::vector<int> child_degrees;
  int filler_leaves = 0;

  friend bool operator==(const SubtreeSpec&, const SubtreeSpec&) = default;
};

struct RootedSubtree {
  Tree tree;
  Vertex root = 0;
  int assigned_root_degree = 0;
  SubtreeKind kind = SubtreeKind::Base;
};

/// Greedy decomposition of d: chain specs in emission order, base spec last.
///
/// While the smallest remaining degree s satisfies s <= count - 2, a chain
/// rooted at s takes the s - 1 largest remaining degrees as children. Once
/// s >= count - 1 the rest become a base rooted at s, padded with
/// s - (count - 1) filler leaves. Requires a non-empty sequence.
std::vector<SubtreeSpec> decompose(const DegreeSequence& d);

/// Root is vertex 0; ids follow BFS with children by non-increasing degree.
RootedSubtree materialize(const SubtreeSpec& spec);

/// Lowest-id leaf whose neighbor has the minimum degree among vertices
/// adjacent to leaves. Throws Error{NoAttachmentSite}.
Vertex attachment_site(const Tree& t);

/// Attaches s in place of leaf `site`: s's root takes the leaf's id, the
/// remaining subtree vertices get ids t.vertex_count() onwards.
Tree attach_at(const Tree& t, Vertex site, const RootedSubtree& s);

/// attach_at(t, attachment_site(t), s) for a chain subtree.
Tree merge_once(const Tree& t, const RootedSubtree& s);

/// Relabels by BFS from root, visiting children by non-increasing degree
/// and then by old id.
Tree bfs_relabel(const Tree& t, Vertex root);

struct ConstructionTrace {
  std::vector<SubtreeSpec> specs;
  std::vector<Tree> stages;  // base, then after each merge
  Tree result;
};

ConstructionTrace construct_with_trace(const DegreeSequence& d);

/// Candidate maximum-index tree realizing d.
Tree construct_max_tree(const DegreeSequence& d);

}  // namespace sombor
