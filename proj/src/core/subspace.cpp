#include "core/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace subent {

Factorization::Factorization(std::size_t d1_, std::size_t d2_) : d1(d1_), d2(d2_) {
  if (d1 < 1 || d2 < 1) {
    throw Error(ErrorCode::invalid_argument, "factor dimensions must be at least 1");
  }
}

std::size_t Factorization::string_length() const noexcept {
  const std::size_t m = std::min(d1, d2);
  return m * m;
}

SubspaceBasis::SubspaceBasis(Factorization f, std::vector<Vector> vectors, double tol)
    : factorization_(f), vectors_(std::move(vectors)) {
  if (vectors_.empty()) {
    throw Error(ErrorCode::invalid_argument, "a subspace basis needs at least one vector");
  }
  if (vectors_.size() > f.total()) {
    throw Error(ErrorCode::dimension_mismatch, "more basis vectors than the ambient dimension");
  }
  for (const auto& v : vectors_) {
    if (v.size() != f.total()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "basis vector length " + std::to_string(v.size()) + " != d1*d2 = " +
                      std::to_string(f.total()));
    }
  }
  for (std::size_t a = 0; a < vectors_.size(); ++a) {
    for (std::size_t b = a; b < vectors_.size(); ++b) {
      const Complex g = inner(vectors_[a], vectors_[b]);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol) {
        throw Error(ErrorCode::not_orthonormal,
                    "basis is not orthonormal (<v" + std::to_string(a) + ", v" + std::to_string(b) +
                        "> off by " + std::to_string(std::abs(g - expected)) +
                        "); orthonormalize the input first");
      }
    }
  }
}

ProjectorReport validate_projector(const Matrix& p, std::optional<std::size_t> expected_dim) {
  ProjectorReport r;
  if (!p.square()) {
    r.hermiticity_defect = r.idempotency_defect = r.trace_defect = INFINITY;
    return r;
  }
  r.hermiticity_defect = (p - adjoint(p)).max_abs();
  r.idempotency_defect = (multiply(p, p) - p).max_abs();
  r.trace = p.trace().real();
  const double d = expected_dim ? static_cast<double>(*expected_dim) : std::round(r.trace);
  r.trace_defect = std::abs(p.trace() - d);
  r.passed = r.hermiticity_defect <= kProjectorEntryTol && r.idempotency_defect <= kProjectorEntryTol &&
             r.trace_defect <= kProjectorTraceTol && d >= 1.0;
  return r;
}

Projector::Projector(Factorization f, Matrix matrix) : factorization_(f), matrix_(std::move(matrix)) {
  if (matrix_.rows() != f.total() || matrix_.cols() != f.total()) {
    throw Error(ErrorCode::dimension_mismatch,
                "projector must be " + std::to_string(f.total()) + "x" + std::to_string(f.total()));
  }
  report_ = validate_projector(matrix_);
  if (!report_.passed) {
    throw Error(ErrorCode::not_projector,
                "matrix is not an orthogonal projector (hermiticity defect " +
                    std::to_string(report_.hermiticity_defect) + ", idempotency defect " +
                    std::to_string(report_.idempotency_defect) + ", trace " + std::to_string(report_.trace) +
                    ")");
  }
  dim_ = static_cast<std::size_t>(std::llround(report_.trace));
}

Projector projector_from_basis(const SubspaceBasis& basis) {
  const std::size_t n = basis.factorization().total();
  Matrix p(n, n);
  for (const auto& v : basis.vectors()) {
    for (std::size_t r = 0; r < n; ++r) {
      if (v[r] == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) p(r, c) += v[r] * std::conj(v[c]);
    }
  }
  Projector out(basis.factorization(), std::move(p));
  if (out.dim() != basis.dim()) {
    throw Error(ErrorCode::numerical_failure, "projector trace does not match basis size");
  }
  return out;
}

SubspaceBasis embed(const SubspaceBasis& basis, std::size_t d1_new, std::size_t d2_new) {
  const auto& f = basis.factorization();
  if (d1_new < f.d1 || d2_new < f.d2) {
    throw Error(ErrorCode::invalid_argument, "embedding cannot shrink a factor dimension");
  }
  const Factorization g(d1_new, d2_new);
  std::vector<Vector> out;
  out.reserve(basis.dim());
  for (const auto& v : basis.vectors()) {
    Vector w(g.total());
    for (std::size_t i = 0; i < f.d1; ++i) {
      for (std::size_t k = 0; k < f.d2; ++k) w[i * d2_new + k] = v[i * f.d2 + k];
    }
    out.push_back(std::move(w));
  }
  return SubspaceBasis(g, std::move(out));
}

}  // namespace subent
