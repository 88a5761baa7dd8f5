#include "sombor/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sombor {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::EntryBelowTwo: return "EntryBelowTwo";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NoLeaves: return "NoLeaves";
    case ErrorCode::NoAttachmentSite: return "NoAttachmentSite";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Tree::Tree(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 1) {
    throw Error(ErrorCode::InvalidTree, "tree needs at least one vertex");
  }
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw Error(ErrorCode::InvalidTree,
                "tree on " + std::to_string(vertex_count) + " vertices needs " +
                    std::to_string(vertex_count - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  adjacency_.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidTree, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidTree, "self-loop at " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorCode::InvalidTree, "duplicate edge");
    }
  }
  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(vertex_count, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    throw Error(ErrorCode::InvalidTree, "graph is not connected");
  }
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Tree::degrees() const {
  std::vector<int> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = degree(v);
  return out;
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Tree::internal_degrees() const {
  std::vector<int> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) >= 2) out.push_back(degree(v));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Tree Tree::relabeled(std::span<const Vertex> mapping) const {
  if (static_cast<int>(mapping.size()) != vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "relabel mapping has wrong size");
  }
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (auto [u, v] : edges()) out.emplace_back(mapping[u], mapping[v]);
  return Tree(vertex_count(), out);
}

DegreeSequence DegreeSequence::validate(std::vector<int> degrees) {
  for (int d : degrees) {
    if (d < 2) {
      throw Error(ErrorCode::EntryBelowTwo,
                  "internal degree " + std::to_string(d) + " is below 2");
    }
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const long long m = static_cast<long long>(degrees.size());
  const long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  const long long leaves = sum - 2 * m + 2;
  if (leaves < 2) {
    throw Error(ErrorCode::Infeasible,
                "degree sum leaves only " + std::to_string(leaves) + " leaves");
  }
  return DegreeSequence(std::move(degrees), static_cast<int>(leaves));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

DegreeSequence parse_degrees(const std::string& text) {
  std::vector<int> degrees;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    any = true;
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "empty entry in degree list '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw Error(ErrorCode::InvalidArgument, "malformed degree '" + item + "'");
    }
    degrees.push_back(value);
  }
  auto tail = text.find_last_not_of(" \t");
  if (tail != std::string::npos && text[tail] == ',') {
    throw Error(ErrorCode::InvalidArgument, "trailing comma in degree list '" + text + "'");
  }
  if (!any && tail != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "malformed degree list '" + text + "'");
  }
  return DegreeSequence::validate(std::move(degrees));
}

Tree make_star(int leaves) {
  if (leaves < 1) throw Error(ErrorCode::InvalidArgument, "star needs a leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Tree(leaves + 1, edges);
}

Tree make_path(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "path needs a vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Tree(n, edges);
}

}  // namespace sombor
