#pragma once

#include "sombor/tree.hpp"

namespace sombor {

/// Relative tolerance under which two index values count as equal.
inline constexpr double kRelTol = 1e-9;

/// sqrt(x^2 + y^2) for degrees x, y >= 1.
double edge_weight(int x, int y);

/// Sum of edge weights over all edges, in lexicographic edge order with
/// Neumaier-compensated summation.
double sombor_index(const Tree& t);

/// a and b agree within rel_tol relative to the larger magnitude.
bool approx_equal(double a, double b, double rel_tol = kRelTol);

/// Running sum with Neumaier compensation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace sombor
