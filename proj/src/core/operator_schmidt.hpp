#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/matrix.hpp"
#include "core/subspace.hpp"

namespace subent {

inline constexpr double kDefaultZeroThreshold = 1e-10;
inline constexpr double kSumRuleTol = 1e-8;
inline constexpr double kNegativeClampTol = 1e-10;

/// Descending squared operator-Schmidt coefficients of P/sqrt(d), zero-padded.
struct SchmidtString {
  std::vector<double> probs;
  std::size_t k = 0;  // number of entries above the zero threshold

  std::size_t length() const noexcept { return probs.size(); }
  double sum() const;
};

/// Builds a string from raw (possibly unsorted, slightly negative) values:
/// clamps, thresholds, sorts descending and pads to `length`. Throws
/// numerical_failure on values below -kNegativeClampTol or a sum off by more
/// than kSumRuleTol.
SchmidtString make_schmidt_string(std::vector<double> values, std::size_t length,
                                  double zero_threshold = kDefaultZeroThreshold);

struct Measures {
  double e_d = 0.0;  // distance to the closest product operator vector
  double e_i = 0.0;  // base-2 entropy of the string
  double e_t = 0.0;  // 1 - sum p^2
};

/// d1^2 x d2^2 realigned matrix of P/sqrt(d):
///   A[i*d1 + j, k*d2 + l] = P[i*d2 + k, j*d2 + l] / sqrt(d).
/// Its squared singular values are the Schmidt string.
Matrix realign(const Projector& p);

enum class Side { first = 1, second = 2 };

/// Reduced superoperator density matrix: A A^dagger (first) or A^dagger A (second).
Matrix reduced_superop(const Projector& p, Side side);

SchmidtString schmidt_string(const Projector& p, double zero_threshold = kDefaultZeroThreshold);

Measures measures(const SchmidtString& s);

/// Squared Schmidt coefficients of a unit state vector, descending, length min(d1, d2).
std::vector<double> vector_schmidt(std::span<const Complex> v, const Factorization& f);

/// Schmidt string of span{v} from the Schmidt coefficients of v: all products p_a p_b.
SchmidtString pure_subspace_string(std::span<const double> coeffs, const Factorization& f,
                                   double zero_threshold = kDefaultZeroThreshold);

}  // namespace subent
