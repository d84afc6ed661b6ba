#include "core/majorization.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"

namespace subent {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::more_entangled:
      return "more_entangled";
    case Verdict::less_entangled:
      return "less_entangled";
    case Verdict::equal:
      return "equal";
    case Verdict::incomparable:
      return "incomparable";
  }
  return "unknown";
}

std::vector<double> partial_sums(std::span<const double> values, std::size_t length) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  sorted.resize(std::max(length, sorted.size()), 0.0);
  std::vector<double> sums(sorted.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    acc += sorted[i];
    sums[i] = acc;
  }
  return sums;
}

Comparison compare_detailed(const SchmidtString& s, const SchmidtString& t, double tol) {
  const std::size_t len = std::max(s.length(), t.length());
  Comparison c;
  c.partial_sums_first = partial_sums(s.probs, len);
  c.partial_sums_second = partial_sums(t.probs, len);
  for (std::size_t i = 0; i < len; ++i) {
    const double a = c.partial_sums_first[i];
    const double b = c.partial_sums_second[i];
    if (a > b + tol) c.first_exceeds.push_back(i + 1);
    if (b > a + tol) c.second_exceeds.push_back(i + 1);
  }
  const bool s_below = c.first_exceeds.empty();
  const bool t_below = c.second_exceeds.empty();
  if (s_below && t_below) {
    c.verdict = Verdict::equal;
  } else if (s_below) {
    c.verdict = Verdict::more_entangled;
  } else if (t_below) {
    c.verdict = Verdict::less_entangled;
  } else {
    c.verdict = Verdict::incomparable;
  }
  return c;
}

Verdict compare(const SchmidtString& s, const SchmidtString& t, double tol) {
  return compare_detailed(s, t, tol).verdict;
}

bool majorized_by(const SchmidtString& s, const SchmidtString& t, double tol) {
  const Verdict v = compare(s, t, tol);
  return v == Verdict::more_entangled || v == Verdict::equal;
}

ConsistencyReport measure_consistency(const SchmidtString& s, const SchmidtString& t, double tol) {
  if (!majorized_by(s, t, tol)) {
    throw Error(ErrorCode::invalid_argument, "measure_consistency requires the first string to be majorized by the second");
  }
  const Measures ms = measures(s);
  const Measures mt = measures(t);
  ConsistencyReport r;
  r.margin_d = ms.e_d - mt.e_d;
  r.margin_i = ms.e_i - mt.e_i;
  r.margin_t = ms.e_t - mt.e_t;
  r.holds = r.margin_d >= -kConsistencySlack && r.margin_i >= -kConsistencySlack && r.margin_t >= -kConsistencySlack;
  return r;
}

ChainResult sort_chain(std::span<const LabeledString> strings, double tol) {
  ChainResult result;
  const std::size_t n = strings.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Verdict v = compare(strings[a].string, strings[b].string, tol);
      if (v == Verdict::incomparable) {
        result.incomparable.emplace_back(strings[a].label, strings[b].label);
      } else if (v == Verdict::equal) {
        result.ties.emplace_back(strings[a].label, strings[b].label);
      }
    }
  }
  result.totally_ordered = result.incomparable.empty();
  if (!result.totally_ordered) return result;

  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  // a precedes b when a majorizes b strictly, i.e. a is less entangled.
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare(strings[a].string, strings[b].string, tol) == Verdict::less_entangled;
  });
  for (std::size_t i : idx) result.order.push_back(strings[i].label);
  return result;
}

}  // namespace subent
