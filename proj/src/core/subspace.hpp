#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "core/matrix.hpp"

namespace subent {

/// Bipartition H = H1 (x) H2. Composite index of |i>|k> is i * d2 + k.
struct Factorization {
  std::size_t d1 = 1;
  std::size_t d2 = 1;

  Factorization() = default;
  Factorization(std::size_t d1, std::size_t d2);

  std::size_t total() const noexcept { return d1 * d2; }
  /// Length of a Schmidt string for operators on this space: min(d1^2, d2^2).
  std::size_t string_length() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr double kOrthonormalityTol = 1e-10;
inline constexpr double kProjectorEntryTol = 1e-10;
inline constexpr double kProjectorTraceTol = 1e-8;

/// Orthonormal basis of a subspace V of H1 (x) H2.
class SubspaceBasis {
 public:
  /// Throws not_orthonormal if any pair's inner product is off delta by more than tol.
  SubspaceBasis(Factorization f, std::vector<Vector> vectors, double tol = kOrthonormalityTol);

  const Factorization& factorization() const noexcept { return factorization_; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  std::size_t dim() const noexcept { return vectors_.size(); }

 private:
  Factorization factorization_;
  std::vector<Vector> vectors_;
};

struct ProjectorReport {
  double hermiticity_defect = 0.0;  // max |P - P^dagger| entrywise
  double idempotency_defect = 0.0;  // max |P^2 - P| entrywise
  double trace_defect = 0.0;        // |Tr P - d|
  double trace = 0.0;
  bool passed = false;
};

/// Report-only check of the projector constraints. When expected_dim is not
/// given, the trace is compared against its nearest integer.
ProjectorReport validate_projector(const Matrix& p, std::optional<std::size_t> expected_dim = std::nullopt);

/// Hermitian idempotent with integer trace d on a factorized space.
class Projector {
 public:
  /// Validates; throws not_projector when any invariant is violated.
  Projector(Factorization f, Matrix matrix);

  const Factorization& factorization() const noexcept { return factorization_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return dim_; }
  const ProjectorReport& report() const noexcept { return report_; }

 private:
  Factorization factorization_;
  Matrix matrix_;
  std::size_t dim_ = 0;
  ProjectorReport report_;
};

Projector projector_from_basis(const SubspaceBasis& basis);

/// Pads H1 into the first d1 slots of H1' and H2 into the first d2 slots of H2'.
SubspaceBasis embed(const SubspaceBasis& basis, std::size_t d1_new, std::size_t d2_new);

}  // namespace subent
