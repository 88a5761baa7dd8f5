#include "sombor/theorems.hpp"

#include <algorithm>
#include <map>

#include "sombor/index.hpp"

namespace sombor {

namespace {

void check_oriented(const DegreePath& path, std::size_t index, Theorem1Report& report) {
  const int k = path.interior_count();
  const auto& deg = path.degrees;
  for (int i = 1; i <= (k + 2) / 2; ++i) {
    const int mirror = k - i + 1;
    // Nothing is asserted for i without an admissible j.
    if (i + 1 > mirror) continue;
    const Parity parity = (i % 2 == 1) ? Parity::Odd : Parity::Even;
    auto ordered = [&](int lhs, int rhs) {
      return parity == Parity::Odd ? deg[lhs] >= deg[rhs] : deg[lhs] <= deg[rhs];
    };
    auto record = [&](Inequality which, int j, int lhs, int rhs) {
      Theorem1Record r;
      r.path = index;
      r.i = i;
      r.j = j;
      r.parity = parity;
      r.inequality = which;
      r.lhs_vertex = path.vertices[lhs];
      r.rhs_vertex = path.vertices[rhs];
      r.lhs_degree = deg[lhs];
      r.rhs_degree = deg[rhs];
      r.holds = ordered(lhs, rhs);
      if (!r.holds) ++report.violations;
      report.records.push_back(r);
    };
    record(Inequality::Outer, 0, i, mirror);
    for (int j = i + 1; j <= mirror; ++j) record(Inequality::Inner, j, mirror, j);
  }
}

const char* name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }
const char* name(Inequality q) { return q == Inequality::Outer ? "outer" : "inner"; }

}  // namespace

Theorem1Report check_theorem1(const Tree& t) {
  Theorem1Report report;
  auto paths = leaf_to_leaf_paths(t);
  report.leaf_pairs = paths.size();
  for (auto& path : paths) {
    const int k = path.interior_count();
    if (k < 1) continue;
    DegreePath reversed{{path.vertices.rbegin(), path.vertices.rend()},
                        {path.degrees.rbegin(), path.degrees.rend()}};
    const int first = path.degrees[1];
    const int last = path.degrees[k];
    if (first >= last) {
      report.paths.push_back(path);
      check_oriented(report.paths.back(), report.paths.size() - 1, report);
    }
    if (last >= first) {
      report.paths.push_back(std::move(reversed));
      check_oriented(report.paths.back(), report.paths.size() - 1, report);
    }
  }
  return report;
}

nlohmann::json Theorem1Report::to_json(bool include_passing) const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    if (!include_passing && r.holds) continue;
    nlohmann::json j{{"path", paths[r.path].vertices},
                     {"path_degrees", paths[r.path].degrees},
                     {"i", r.i},
                     {"parity", name(r.parity)},
                     {"inequality", name(r.inequality)},
                     {"lhs_vertex", r.lhs_vertex},
                     {"rhs_vertex", r.rhs_vertex},
                     {"lhs_degree", r.lhs_degree},
                     {"rhs_degree", r.rhs_degree},
                     {"holds", r.holds}};
    if (r.inequality == Inequality::Inner) j["j"] = r.j;
    recs.push_back(std::move(j));
  }
  return {{"leaf_pairs", leaf_pairs},
          {"oriented_paths", paths.size()},
          {"records_checked", records.size()},
          {"violations", violations},
          {"records", std::move(recs)}};
}

AttachmentProfile attachment_profile(const Tree& t, const RootedSubtree& s, double rel_tol) {
  if (s.kind != SubtreeKind::Chain) {
    throw Error(ErrorCode::InvalidArgument, "attachment profile needs a chain subtree");
  }
  const auto layers = leaf_layer_profile(t);
  AttachmentProfile profile;
  for (Vertex leaf : t.leaves()) {
    AttachmentEntry e;
    e.leaf = leaf;
    e.neighbor_degree = t.degree(t.neighbors(leaf).front());
    e.so = sombor_index(attach_at(t, leaf, s));
    e.in_l1m = std::binary_search(layers.l1m_leaves.begin(), layers.l1m_leaves.end(), leaf);
    profile.entries.push_back(e);
  }
  for (const auto& e : profile.entries) profile.max_so = std::max(profile.max_so, e.so);
  for (const auto& e : profile.entries) {
    if (approx_equal(e.so, profile.max_so, rel_tol)) profile.argmax_leaves.push_back(e.leaf);
  }

  // Per neighbor degree: value range, ascending by degree.
  std::map<int, std::pair<double, double>> by_degree;
  for (const auto& e : profile.entries) {
    auto [it, fresh] = by_degree.try_emplace(e.neighbor_degree, e.so, e.so);
    if (!fresh) {
      it->second.first = std::min(it->second.first, e.so);
      it->second.second = std::max(it->second.second, e.so);
    }
  }
  for (const auto& [deg, range] : by_degree) {
    if (!approx_equal(range.first, range.second, rel_tol)) profile.equal_degree_ties = false;
  }
  for (auto it = by_degree.begin(); it != by_degree.end(); ++it) {
    auto next = std::next(it);
    if (next == by_degree.end()) break;
    const double tol = rel_tol * std::max(1.0, it->second.first);
    if (next->second.second > it->second.first + tol) profile.non_increasing = false;
  }
  bool meets = false;
  for (const auto& e : profile.entries) {
    if (!e.in_l1m) continue;
    const bool at_max = approx_equal(e.so, profile.max_so, rel_tol);
    profile.max_on_every_l1m_leaf = profile.max_on_every_l1m_leaf && at_max;
    meets = meets || at_max;
  }
  profile.argmax_meets_l1m = meets;
  return profile;
}

nlohmann::json AttachmentProfile::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    rows.push_back({{"leaf", e.leaf},
                    {"neighbor_degree", e.neighbor_degree},
                    {"sombor_index", e.so},
                    {"in_l1m", e.in_l1m}});
  }
  return {{"entries", rows},
          {"max_so", max_so},
          {"argmax_leaves", argmax_leaves},
          {"equal_degree_ties", equal_degree_ties},
          {"non_increasing", non_increasing},
          {"max_on_every_l1m_leaf", max_on_every_l1m_leaf},
          {"argmax_meets_l1m", argmax_meets_l1m}};
}

}  // namespace sombor
