#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class ErrorCode {
  InvalidTree,
  EntryBelowTwo,
  Infeasible,
  NoLeaves,
  NoAttachmentSite,
  OutOfRange,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Undirected labeled tree on dense vertex ids 0..n-1.
///
/// Construction validates the tree invariants (n-1 distinct edges, no
/// self-loops, connected) and throws Error{InvalidTree} otherwise. Adjacency
/// lists are kept sorted so that equal edge sets compare equal.
class Tree {
 public:
  Tree(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return vertex_count() - 1; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  std::vector<Vertex> leaves() const;

  /// Degrees of the non-leaf vertices, sorted non-increasing.
  std::vector<int> internal_degrees() const;

  /// Returns a copy with vertex v renamed to mapping[v]; mapping must be a
  /// permutation of 0..n-1.
  Tree relabeled(std::span<const Vertex> mapping) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Internal-vertex degree sequence of a tree, normalized non-increasing.
class DegreeSequence {
 public:
  /// Sorts and validates. Throws Error{EntryBelowTwo} or Error{Infeasible}.
  static DegreeSequence validate(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int internal_count() const noexcept { return static_cast<int>(degrees_.size()); }
  int leaf_count() const noexcept { return leaf_count_; }
  int vertex_count() const noexcept { return internal_count() + leaf_count_; }
  bool empty() const noexcept { return degrees_.empty(); }

  /// Comma-joined text, e.g. "5,5,4".
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  DegreeSequence(std::vector<int> degrees, int leaf_count)
      : degrees_(std::move(degrees)), leaf_count_(leaf_count) {}

  std::vector<int> degrees_;
  int leaf_count_ = 2;
};

/// Parses "5,5,4" (whitespace tolerated) into a validated sequence. An empty
/// string yields the empty sequence.
DegreeSequence parse_degrees(const std::string& text);

Tree make_star(int leaves);
Tree make_path(int n);

}  // namespace sombor
