#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/operator_schmidt.hpp"

namespace subent {

inline constexpr double kDefaultMajorizationTol = 1e-9;

/// Verdict for the first argument relative to the second.
enum class Verdict { more_entangled, less_entangled, equal, incomparable };

const char* to_string(Verdict v) noexcept;

struct Comparison {
  Verdict verdict = Verdict::incomparable;
  std::vector<double> partial_sums_first;
  std::vector<double> partial_sums_second;
  // Prefix lengths (1-based) where the first string's partial sum exceeds the
  // second's beyond tol, and vice versa.
  std::vector<std::size_t> first_exceeds;
  std::vector<std::size_t> second_exceeds;
};

/// Leading partial sums of the descending-sorted values, zero-padded to `length`.
std::vector<double> partial_sums(std::span<const double> values, std::size_t length);

/// s < t (s majorized by t) within tol: every partial sum of s is <= that of t + tol.
bool majorized_by(const SchmidtString& s, const SchmidtString& t, double tol = kDefaultMajorizationTol);

Comparison compare_detailed(const SchmidtString& s, const SchmidtString& t, double tol = kDefaultMajorizationTol);
Verdict compare(const SchmidtString& s, const SchmidtString& t, double tol = kDefaultMajorizationTol);

struct ConsistencyReport {
  // measure(s) - measure(t); all three are >= -slack when s < t.
  double margin_d = 0.0;
  double margin_i = 0.0;
  double margin_t = 0.0;
  bool holds = false;
};

inline constexpr double kConsistencySlack = 1e-12;

/// Requires s < t (more entangled or equal); throws invalid_argument otherwise.
ConsistencyReport measure_consistency(const SchmidtString& s, const SchmidtString& t,
                                      double tol = kDefaultMajorizationTol);

struct LabeledString {
  std::string label;
  SchmidtString string;
};

struct ChainResult {
  bool totally_ordered = false;
  std::vector<std::string> order;  // least to most entangled, when totally ordered
  std::vector<std::pair<std::string, std::string>> ties;
  std::vector<std::pair<std::string, std::string>> incomparable;
};

ChainResult sort_chain(std::span<const LabeledString> strings, double tol = kDefaultMajorizationTol);

}  // namespace subent
