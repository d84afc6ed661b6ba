#pragma once
// Reference implementations used only by tests. Written independently of the
// library: plain loops, no shared helpers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Rng = std::mt19937_64;

/// Row-major square or rectangular matrix as a flat vector plus shape.
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<cd> a;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  cd& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  cd at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline Dense naive_multiply(const Dense& x, const Dense& y) {
  Dense z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j) {
      cd s = 0;
      for (std::size_t k = 0; k < x.cols; ++k) s += x.at(i, k) * y.at(k, j);
      z.at(i, j) = s;
    }
  return z;
}

inline std::vector<cd> random_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<cd> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline std::vector<cd> random_unit_vector(std::size_t n, Rng& rng) {
  auto v = random_vector(n, rng);
  double s = 0;
  for (auto x : v) s += std::norm(x);
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

/// Classical Gram-Schmidt on random Gaussian vectors: `count` orthonormal vectors of length n.
inline std::vector<std::vector<cd>> random_orthonormal(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::vector<cd>> out;
  while (out.size() < count) {
    auto v = random_vector(n, rng);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : out) {
        cd c = 0;
        for (std::size_t i = 0; i < n; ++i) c += std::conj(u[i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
      }
    double s = 0;
    for (auto x : v) s += std::norm(x);
    if (s < 1e-6) continue;
    for (auto& x : v) x /= std::sqrt(s);
    out.push_back(std::move(v));
  }
  return out;
}

/// U diag(lambda) U^dagger with a random unitary U.
inline Dense hermitian_with_spectrum(const std::vector<double>& lambda, Rng& rng) {
  const std::size_t n = lambda.size();
  auto u = random_orthonormal(n, n, rng);
  Dense h(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h.at(i, j) += lambda[k] * u[k][i] * std::conj(u[k][j]);
  return h;
}

/// Characteristic polynomial coefficients c[0..n] of det(x I - H), c[n] = 1,
/// by the Faddeev-LeVerrier recursion. Fine for small n.
inline std::vector<double> charpoly(const Dense& h) {
  const std::size_t n = h.rows;
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Dense m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Dense t = m;
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
    m = naive_multiply(h, t);
    cd tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    c[n - k] = -tr.real() / static_cast<double>(k);
  }
  return c;
}

/// Real roots of a polynomial with only real roots, descending. Newton from
/// an upper bound finds the largest root; synthetic division deflates.
inline std::vector<double> real_roots(std::vector<double> c) {
  std::vector<double> roots;
  while (c.size() > 1) {
    const std::size_t deg = c.size() - 1;
    double bound = 0;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
    double x = 1.0 + bound;
    for (int it = 0; it < 500; ++it) {
      double p = c[deg], dp = 0;
      for (std::size_t i = deg; i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
      }
      if (dp == 0) break;
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    roots.push_back(x);
    std::vector<double> q(deg);
    double carry = c[deg];
    q[deg - 1] = carry;
    for (std::size_t i = deg - 1; i-- > 0;) {
      carry = c[i + 1] + carry * x;
      q[i] = carry;
    }
    c = std::move(q);
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

/// First-side reduced superoperator matrix by direct summation:
///   Q1[(i,j),(i',j')] = (1/d) sum_{k,l} P[(i,k),(j,l)] conj(P[(i',k),(j',l)]).
inline Dense reduced_first(const Dense& p, std::size_t d1, std::size_t d2, double dim) {
  Dense q(d1 * d1, d1 * d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t ii = 0; ii < d1; ++ii)
        for (std::size_t jj = 0; jj < d1; ++jj) {
          cd s = 0;
          for (std::size_t k = 0; k < d2; ++k)
            for (std::size_t l = 0; l < d2; ++l)
              s += p.at(i * d2 + k, j * d2 + l) * std::conj(p.at(ii * d2 + k, jj * d2 + l));
          q.at(i * d1 + j, ii * d1 + jj) = s / dim;
        }
  return q;
}

/// Second-side counterpart: Q2[(k,l),(k',l')] = (1/d) sum_{i,j} conj(P[(i,k),(j,l)]) P[(i,k'),(j,l')].
inline Dense reduced_second(const Dense& p, std::size_t d1, std::size_t d2, double dim) {
  Dense q(d2 * d2, d2 * d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t l = 0; l < d2; ++l)
      for (std::size_t kk = 0; kk < d2; ++kk)
        for (std::size_t ll = 0; ll < d2; ++ll) {
          cd s = 0;
          for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
              s += std::conj(p.at(i * d2 + k, j * d2 + l)) * p.at(i * d2 + kk, j * d2 + ll);
          q.at(k * d2 + l, kk * d2 + ll) = s / dim;
        }
  return q;
}

inline double entropy2(const std::vector<double>& p) {
  double s = 0;
  for (double x : p)
    if (x > 0) s -= x * std::log2(x);
  return s;
}

/// Random probability vector of length n, sorted descending.
inline std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  for (auto& x : p) x = e(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= s;
  std::sort(p.rbegin(), p.rend());
  return p;
}

/// Applies `steps` random T-transforms (convex mixing of two entries) to t.
/// The result is majorized by t.
inline std::vector<double> t_transform(std::vector<double> t, int steps, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const double l = lam(rng);
    const double x = t[a], y = t[b];
    t[a] = l * x + (1 - l) * y;
    t[b] = (1 - l) * x + l * y;
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

}  // namespace oracle
