#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "core/error.hpp"

namespace subent {

namespace {

void require_shape(bool ok, const char* op, const Matrix& a, const Matrix& b) {
  if (!ok) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(op) + ": incompatible shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::dimension_mismatch,
                "matrix entry count " + std::to_string(data_.size()) + " does not match " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::invalid_argument, "matrix entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_shape(rows_ == other.rows_ && cols_ == other.cols_, "add", *this, other);
  std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::plus<>{});
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_shape(rows_ == other.rows_ && cols_ == other.cols_, "subtract", *this, other);
  std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::minus<>{});
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_shape(a.cols() == b.rows(), "multiply", a, b);
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix adjoint(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "hs_inner", a, b);
  return inner(a.entries(), b.entries());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return k;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::dimension_mismatch, "inner product of vectors of different length");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(const Matrix& h, double hermiticity_tol) {
  EigenSettings settings;
  settings.hermiticity_tol = hermiticity_tol;
  return hermitian_eigenvalues(h, settings);
}

std::vector<double> hermitian_eigenvalues(const Matrix& input, const EigenSettings& settings) {
  if (!input.square()) {
    throw Error(ErrorCode::dimension_mismatch, "eigenvalues require a square matrix, got " +
                                                   std::to_string(input.rows()) + "x" +
                                                   std::to_string(input.cols()));
  }
  const std::size_t n = input.rows();
  const double defect = (input - adjoint(input)).frobenius_norm();
  if (defect > settings.hermiticity_tol) {
    throw Error(ErrorCode::not_hermitian,
                "matrix is not Hermitian: ||H - H^dagger||_F = " + std::to_string(defect));
  }

  // Work on the symmetrized copy so the diagonal is exactly real.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  }

  const double total = a.frobenius_norm();
  const double target = settings.relative_offdiag_tol * total;
  // Off-diagonal entries this small cannot move the off-norm above target.
  const double skip = 1e-17 * total;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep <= settings.max_sweeps; ++sweep) {
    if (off_norm() <= target) break;
    if (sweep == settings.max_sweeps) {
      throw Error(ErrorCode::not_converged, "Jacobi eigensolver did not converge in " +
                                                std::to_string(settings.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real symmetric rotation on [[app, mag], [mag, aqq]] after the phase
        // change D = diag(1, e^{-i phi}).
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = D R restricted to (p, q).
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<>{});
  return eig;
}

Orthonormalized gram_schmidt(std::span<const Vector> vectors, double drop_tol) {
  if (vectors.empty()) {
    throw Error(ErrorCode::invalid_argument, "gram_schmidt needs at least one vector");
  }
  const std::size_t len = vectors.front().size();
  Orthonormalized out;
  for (const auto& v : vectors) {
    if (v.size() != len) {
      throw Error(ErrorCode::dimension_mismatch, "gram_schmidt vectors differ in length");
    }
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : out.vectors) {
        const Complex c = inner(u, w);
        for (std::size_t i = 0; i < len; ++i) w[i] -= c * u[i];
      }
    }
    const double r = norm(w);
    if (r < drop_tol) {
      ++out.dropped;
      continue;
    }
    for (auto& z : w) z /= r;
    out.vectors.push_back(std::move(w));
  }
  return out;
}

}  // namespace subent
