#pragma once

#include <vector>

#include "core/matrix.hpp"
#include "oracles.hpp"

inline subent::Matrix to_matrix(const oracle::Dense& d) { return subent::Matrix(d.rows, d.cols, d.a); }

inline oracle::Dense to_dense(const subent::Matrix& m) {
  oracle::Dense d(m.rows(), m.cols());
  d.a.assign(m.entries().begin(), m.entries().end());
  return d;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
