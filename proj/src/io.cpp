#include "sombor/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sombor {

nlohmann::json tree_to_json(const Tree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : t.edges()) edges.push_back({u, v});
  return {{"n", t.vertex_count()}, {"edges", std::move(edges)}};
}

Tree tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error(ErrorCode::InvalidTree, "tree JSON needs \"n\" and \"edges\"");
  }
  if (!j.at("n").is_number_integer() || !j.at("edges").is_array()) {
    throw Error(ErrorCode::InvalidTree, "tree JSON has wrong field types");
  }
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw Error(ErrorCode::InvalidTree, "edge must be a pair of integers");
    }
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Tree(n, edges);
}

std::string to_dot(const Tree& t) {
  std::ostringstream out;
  out << "graph T {\n";
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    out << "  " << v << " [label=\"v" << v << " (d=" << t.degree(v) << ")\"];\n";
  }
  for (auto [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Tree& t) {
  std::string out;
  for (auto [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Tree read_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Io, path.string() + ": " + e.what());
  }
  return tree_from_json(j);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string format_real(double x) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << x;
  return out.str();
}

}  // namespace sombor
