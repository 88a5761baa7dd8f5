#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "sombor/tree.hpp"

namespace sombor {

// Tree JSON: {"n": <int>, "edges": [[u, v], ...]} with u < v.
nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

std::string to_dot(const Tree& t);
std::string to_edge_list(const Tree& t);

Tree read_tree_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// 12 significant digits, '.' decimal, locale independent.
std::string format_real(double x);

}  // namespace sombor
