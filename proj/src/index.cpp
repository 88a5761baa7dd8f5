#include "sombor/index.hpp"

#include <algorithm>
#include <cmath>

namespace sombor {

double edge_weight(int x, int y) {
  if (x < 1 || y < 1) {
    throw Error(ErrorCode::InvalidArgument, "edge_weight needs positive degrees, got (" +
                                                std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  // x^2 + y^2 is exact in double for any realistic degree, so sqrt rounds once.
  return std::sqrt(static_cast<double>(x) * x + static_cast<double>(y) * y);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double sombor_index(const Tree& t) {
  CompensatedSum acc;
  for (auto [u, v] : t.edges()) acc.add(edge_weight(t.degree(u), t.degree(v)));
  return acc.value();
}

bool approx_equal(double a, double b, double rel_tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace sombor
