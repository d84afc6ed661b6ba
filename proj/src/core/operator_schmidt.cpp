#include "core/operator_schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace subent {

double SchmidtString::sum() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

SchmidtString make_schmidt_string(std::vector<double> values, std::size_t length, double zero_threshold) {
  for (double& v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::numerical_failure, "non-finite Schmidt coefficient");
    }
    if (v < 0.0) {
      if (v < -kNegativeClampTol) {
        throw Error(ErrorCode::numerical_failure,
                    "negative Schmidt coefficient " + std::to_string(v) + " beyond clamp tolerance");
      }
      v = 0.0;
    }
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(total - 1.0) > kSumRuleTol) {
    throw Error(ErrorCode::numerical_failure,
                "Schmidt coefficients sum to " + std::to_string(total) + ", expected 1");
  }
  std::sort(values.begin(), values.end(), std::greater<>{});
  SchmidtString s;
  s.probs.assign(std::max(length, values.size()), 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= zero_threshold) {
      s.probs[i] = values[i];
      ++s.k;
    }
  }
  // Rescale the kept entries so rounding in the eigensolver does not leak
  // into E_D near product subspaces.
  const double kept = std::accumulate(s.probs.begin(), s.probs.end(), 0.0);
  if (kept <= 0.0) throw Error(ErrorCode::invalid_argument, "zero threshold removes every Schmidt coefficient");
  for (double& p : s.probs) p /= kept;
  // Only trailing entries can fall below the threshold; anything past
  // `length` must therefore be zero.
  if (s.probs.size() > length) {
    if (s.k > length) {
      throw Error(ErrorCode::numerical_failure, "more nonzero Schmidt coefficients than the string length");
    }
    s.probs.resize(length);
  }
  return s;
}

Matrix realign(const Projector& p) {
  const auto& f = p.factorization();
  const std::size_t d1 = f.d1;
  const std::size_t d2 = f.d2;
  const double scale = 1.0 / std::sqrt(static_cast<double>(p.dim()));
  const Matrix& m = p.matrix();
  Matrix a(d1 * d1, d2 * d2);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      for (std::size_t k = 0; k < d2; ++k) {
        for (std::size_t l = 0; l < d2; ++l) {
          a(i * d1 + j, k * d2 + l) = m(i * d2 + k, j * d2 + l) * scale;
        }
      }
    }
  }
  return a;
}

Matrix reduced_superop(const Projector& p, Side side) {
  const Matrix a = realign(p);
  switch (side) {
    case Side::first:
      return multiply(a, adjoint(a));
    case Side::second:
      return multiply(adjoint(a), a);
  }
  throw Error(ErrorCode::invalid_argument, "side must be 1 or 2");
}

SchmidtString schmidt_string(const Projector& p, double zero_threshold) {
  const auto& f = p.factorization();
  const Side smaller = f.d1 <= f.d2 ? Side::first : Side::second;
  return make_schmidt_string(hermitian_eigenvalues(reduced_superop(p, smaller)), f.string_length(),
                             zero_threshold);
}

Measures measures(const SchmidtString& s) {
  Measures m;
  const double p1 = s.probs.empty() ? 0.0 : s.probs.front();
  m.e_d = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(p1))));
  double purity = 0.0;
  for (double p : s.probs) {
    if (p > 0.0) m.e_i -= p * std::log2(p);
    purity += p * p;
  }
  m.e_t = 1.0 - purity;
  return m;
}

std::vector<double> vector_schmidt(std::span<const Complex> v, const Factorization& f) {
  if (v.size() != f.total()) {
    throw Error(ErrorCode::dimension_mismatch, "state vector length does not match d1*d2");
  }
  const double nv = norm(v);
  if (std::abs(nv - 1.0) > 1e-8) {
    throw Error(ErrorCode::invalid_argument, "state vector is not normalized (norm " + std::to_string(nv) + ")");
  }
  Matrix m(f.d1, f.d2, std::vector<Complex>(v.begin(), v.end()));
  const Matrix gram = f.d1 <= f.d2 ? multiply(m, adjoint(m)) : multiply(adjoint(m), m);
  auto eig = hermitian_eigenvalues(gram);
  for (double& e : eig) e = std::max(e, 0.0);
  return eig;
}

SchmidtString pure_subspace_string(std::span<const double> coeffs, const Factorization& f, double zero_threshold) {
  const double total = std::accumulate(coeffs.begin(), coeffs.end(), 0.0);
  if (std::abs(total - 1.0) > kSumRuleTol) {
    throw Error(ErrorCode::invalid_argument,
                "state Schmidt coefficients sum to " + std::to_string(total) + ", expected 1");
  }
  std::vector<double> products;
  products.reserve(coeffs.size() * coeffs.size());
  for (double a : coeffs) {
    for (double b : coeffs) products.push_back(a * b);
  }
  return make_schmidt_string(std::move(products), f.string_length(), zero_threshold);
}

}  // namespace subent
