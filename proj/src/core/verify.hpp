#pragma once

#include <string>
#include <vector>

#include "core/operator_schmidt.hpp"

namespace subent {

struct VerifyOptions {
  int max_n = 12;           // antisym runs 2..max_n, sym 1..max_n
  int max_two_j = 20;       // spin runs 2j = 1..max_two_j
  int max_hydrogen_n = 8;   // hydrogen runs n = 1..max_hydrogen_n
  double string_tol = 1e-9;
  double reduced_tol = 1e-10;
  double identity_tol = 1e-12;
  double zero_threshold = kDefaultZeroThreshold;
};

/// Numerical-pipeline vs closed-form comparison for one family.
struct FamilyReport {
  std::string family;
  bool passed = true;
  int cases = 0;
  double max_string_deviation = 0.0;
  double max_measure_deviation = 0.0;
  double max_reduced_deviation = 0.0;  // Q entries (spin and hydrogen)
  std::string failure;                 // first offending parameter, if any
};

FamilyReport verify_antisym(const VerifyOptions& options);
FamilyReport verify_sym(const VerifyOptions& options);
FamilyReport verify_spin(const VerifyOptions& options);
FamilyReport verify_hydrogen(const VerifyOptions& options);

/// `family` is one of all, antisym, sym, spin, hydrogen.
std::vector<FamilyReport> verify(const std::string& family, const VerifyOptions& options);

/// Largest entrywise difference after zero-padding both strings to a common length.
double string_deviation(const SchmidtString& a, const SchmidtString& b);

}  // namespace subent
