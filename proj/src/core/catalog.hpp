#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/operator_schmidt.hpp"
#include "core/subspace.hpp"

namespace subent {

// Constructors for the standard entangled-subspace families together with
// their closed-form Schmidt strings and measures. The closed forms are kept
// independent of the numerical pipeline so each serves as an oracle for it.

/// Antisymmetric part of C^n (x) C^n, basis (e_k e_l - e_l e_k)/sqrt2, k < l. Requires n >= 2.
SubspaceBasis antisymmetric_subspace(int n);
/// Symmetric part of C^n (x) C^n: (e_k e_l + e_l e_k)/sqrt2 for k < l and e_k e_k. Requires n >= 1.
SubspaceBasis symmetric_subspace(int n);

/// ((n-1)^2, 1 x (n^2-1)) / (2n(n-1)), length n^2.
SchmidtString antisym_string_closed(int n);
/// ((n+1)^2, 1 x (n^2-1)) / (2n(n+1)), length n^2.
SchmidtString sym_string_closed(int n);

enum class Family { antisym, sym, spin_plus, spin_minus };

/// Closed-form E_D, E_I, E_T. `parameter` is n for antisym/sym and 2j for the spin branches.
Measures closed_measures(Family family, int parameter);

/// Spin j = two_j / 2. two_j = 0 is admitted for the orbital l = 0 shell.
struct SpinLabel {
  int two_j = 1;

  explicit SpinLabel(int two_j_);
  double j() const noexcept { return 0.5 * two_j; }
  std::size_t multiplicity() const noexcept { return static_cast<std::size_t>(two_j) + 1; }
};

/// plus: total spin j + 1/2; minus: j - 1/2 (needs two_j >= 1).
enum class Branch { plus, minus };

const char* to_string(Branch b) noexcept;

struct SpinOperators {
  Matrix raise;   // J+
  Matrix lower;   // J-
  Matrix z;       // J3
};

/// Matrices in the |m> basis ordered m = j, j-1, ..., -j.
SpinOperators spin_operators(SpinLabel s);

/// X = J+ (x) S- + J- (x) S+ + 2 J3 (x) S3 on H_j (x) H_1/2, factorization (2j+1, 2).
Matrix spin_x_operator(SpinLabel s);

/// Projector onto the j +- 1/2 subspace: +-(X + I/2 +- (j + 1/2) I) / (2j + 1).
Projector spin_projector(SpinLabel s, Branch b);

/// plus: (j+1, j/3, j/3, j/3)/(2j+1); minus: (j, (j+1)/3 x3)/(2j+1). Length 4, sorted.
SchmidtString spin_string_closed(SpinLabel s, Branch b);

/// Closed-form second-side reduced superoperator matrix of the plus branch,
/// in the realignment ordering |+><+|, |+><-|, |-><+|, |-><-|.
Matrix spin_plus_reduced_closed(SpinLabel s);

/// Large-j limit (1/2, 1/6, 1/6, 1/6).
SchmidtString limiting_string();
inline constexpr const char* kLimitingLabel = "S_0";

struct HydrogenEntry {
  std::string label;  // "V_3/2" (plus) or "Vt_1/2" (minus)
  int l = 0;
  Branch branch = Branch::plus;
  std::size_t dim = 0;
  SchmidtString string;
};

struct HydrogenLevel {
  int n = 1;
  std::vector<HydrogenEntry> entries;  // ordered by l, minus before plus
};

HydrogenLevel hydrogen_level(int n);

/// Label of the total-angular-momentum subspace built on orbital shell l.
std::string hydrogen_label(int l, Branch b);

/// Projector onto the (l, branch) subspace inside H^(n) (x) H_1/2, with
/// H^(n) = H_0 + ... + H_{n-1}; factorization (n^2, 2), shell l at offset l^2.
Projector hydrogen_subspace_projector(int n, int l, Branch b);

/// Least to most entangled: V_1/2, ..., V_{n-1/2}, S_0, Vt_{n-3/2}, ..., Vt_1/2.
std::vector<std::string> expected_hydrogen_chain(int n);

}  // namespace subent
