#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace subent {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> diag);
  /// |a><b|
  static Matrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Complex trace() const;
  double frobenius_norm() const;
  /// Largest entrywise modulus.
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
/// Hilbert-Schmidt scalar product Tr(a^dagger b).
Complex hs_inner(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

struct EigenSettings {
  double hermiticity_tol = 1e-10;
  double relative_offdiag_tol = 1e-13;
  int max_sweeps = 100;
};

/// All eigenvalues of a Hermitian matrix, descending. Cyclic complex Jacobi;
/// throws not_hermitian if ||h - h^dagger||_F exceeds the tolerance and
/// not_converged after max_sweeps.
std::vector<double> hermitian_eigenvalues(const Matrix& h, const EigenSettings& settings = {});
std::vector<double> hermitian_eigenvalues(const Matrix& h, double hermiticity_tol);

struct Orthonormalized {
  std::vector<Vector> vectors;
  std::size_t dropped = 0;  // inputs whose residual fell below the drop tolerance
};

/// Modified Gram-Schmidt with one re-orthogonalization pass.
Orthonormalized gram_schmidt(std::span<const Vector> vectors, double drop_tol = 1e-10);

}  // namespace subent
