#include "core/verify.hpp"

#include <algorithm>
#include <cmath>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/majorization.hpp"

namespace subent {

namespace {

double measure_deviation(const Measures& a, const Measures& b) {
  return std::max({std::abs(a.e_d - b.e_d), std::abs(a.e_i - b.e_i), std::abs(a.e_t - b.e_t)});
}

// Tracks maxima and remembers the first case that breaks a tolerance.
class Recorder {
 public:
  explicit Recorder(std::string family) { report_.family = std::move(family); }

  void check(double& slot, double deviation, double tol, const std::string& where) {
    slot = std::max(slot, deviation);
    if (!(deviation <= tol) && report_.passed) {
      report_.passed = false;
      report_.failure = where + ": deviation " + std::to_string(deviation) + " exceeds " + std::to_string(tol);
    }
  }
  void fail(const std::string& where) {
    if (report_.passed) {
      report_.passed = false;
      report_.failure = where;
    }
  }
  FamilyReport& report() { return report_; }

 private:
  FamilyReport report_;
};

// Hydrogen strings in the k = l +- 1/2 labelling.
SchmidtString hydrogen_plus_formula(double k) {
  const double lead = (2.0 * k + 1.0) / (4.0 * k);
  const double rest = (2.0 * k - 1.0) / 3.0 / (4.0 * k);
  return make_schmidt_string({lead, rest, rest, rest}, 4);
}

SchmidtString hydrogen_minus_formula(double k) {
  const double lead = (2.0 * k + 1.0) / (4.0 * (k + 1.0));
  const double rest = (2.0 * k + 3.0) / 3.0 / (4.0 * (k + 1.0));
  return make_schmidt_string({lead, rest, rest, rest}, 4);
}

}  // namespace

double string_deviation(const SchmidtString& a, const SchmidtString& b) {
  const std::size_t len = std::max(a.length(), b.length());
  double dev = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < a.length() ? a.probs[i] : 0.0;
    const double y = i < b.length() ? b.probs[i] : 0.0;
    dev = std::max(dev, std::abs(x - y));
  }
  return dev;
}

FamilyReport verify_antisym(const VerifyOptions& o) {
  Recorder rec("antisym");
  auto& r = rec.report();
  for (int n = 2; n <= o.max_n; ++n) {
    const std::string where = "antisym n=" + std::to_string(n);
    const SchmidtString s = schmidt_string(projector_from_basis(antisymmetric_subspace(n)), o.zero_threshold);
    rec.check(r.max_string_deviation, string_deviation(s, antisym_string_closed(n)), o.string_tol, where);
    rec.check(r.max_measure_deviation, measure_deviation(measures(s), closed_measures(Family::antisym, n)),
              o.string_tol, where);
    ++r.cases;
  }
  return r;
}

FamilyReport verify_sym(const VerifyOptions& o) {
  Recorder rec("sym");
  auto& r = rec.report();
  for (int n = 1; n <= o.max_n; ++n) {
    const std::string where = "sym n=" + std::to_string(n);
    const SchmidtString s = schmidt_string(projector_from_basis(symmetric_subspace(n)), o.zero_threshold);
    rec.check(r.max_string_deviation, string_deviation(s, sym_string_closed(n)), o.string_tol, where);
    rec.check(r.max_measure_deviation, measure_deviation(measures(s), closed_measures(Family::sym, n)),
              o.string_tol, where);
    ++r.cases;
  }
  return r;
}

FamilyReport verify_spin(const VerifyOptions& o) {
  Recorder rec("spin");
  auto& r = rec.report();
  for (int two_j = 1; two_j <= o.max_two_j; ++two_j) {
    const SpinLabel spin(two_j);
    const std::string where = "spin 2j=" + std::to_string(two_j);
    const Projector plus = spin_projector(spin, Branch::plus);
    const Projector minus = spin_projector(spin, Branch::minus);

    const SchmidtString s_plus = schmidt_string(plus, o.zero_threshold);
    const SchmidtString s_minus = schmidt_string(minus, o.zero_threshold);
    rec.check(r.max_string_deviation, string_deviation(s_plus, spin_string_closed(spin, Branch::plus)),
              o.string_tol, where + " plus");
    rec.check(r.max_string_deviation, string_deviation(s_minus, spin_string_closed(spin, Branch::minus)),
              o.string_tol, where + " minus");
    rec.check(r.max_measure_deviation, measure_deviation(measures(s_plus), closed_measures(Family::spin_plus, two_j)),
              o.string_tol, where + " plus measures");
    rec.check(r.max_measure_deviation,
              measure_deviation(measures(s_minus), closed_measures(Family::spin_minus, two_j)), o.string_tol,
              where + " minus measures");

    const Matrix q = reduced_superop(plus, Side::second);
    rec.check(r.max_reduced_deviation, (q - spin_plus_reduced_closed(spin)).max_abs(), o.reduced_tol,
              where + " reduced matrix");

    const Matrix resolution = plus.matrix() + minus.matrix() - Matrix::identity(plus.matrix().rows());
    rec.check(r.max_reduced_deviation, resolution.max_abs(), o.identity_tol, where + " P+ + P- = I");

    const std::vector<double> x_spectrum = hermitian_eigenvalues(spin_x_operator(spin));
    const double j = spin.j();
    double x_dev = 0.0;
    for (std::size_t i = 0; i < x_spectrum.size(); ++i) {
      const double expected = i < static_cast<std::size_t>(two_j) + 2 ? j : -(j + 1.0);
      x_dev = std::max(x_dev, std::abs(x_spectrum[i] - expected));
    }
    rec.check(r.max_reduced_deviation, x_dev, o.string_tol, where + " X spectrum");

    if (compare(s_minus, s_plus) != Verdict::more_entangled) {
      rec.fail(where + ": minus branch not more entangled than plus branch");
    }
    ++r.cases;
  }
  return r;
}

FamilyReport verify_hydrogen(const VerifyOptions& o) {
  Recorder rec("hydrogen");
  auto& r = rec.report();
  for (int n = 1; n <= o.max_hydrogen_n; ++n) {
    const std::string where = "hydrogen n=" + std::to_string(n);
    const HydrogenLevel level = hydrogen_level(n);
    if (level.entries.size() != static_cast<std::size_t>(2 * n - 1)) {
      rec.fail(where + ": wrong entry count");
    }
    std::size_t total_dim = 0;
    std::vector<LabeledString> chain_input;
    for (const auto& entry : level.entries) {
      total_dim += entry.dim;
      const Projector p = hydrogen_subspace_projector(n, entry.l, entry.branch);
      const SchmidtString numeric = schmidt_string(p, o.zero_threshold);
      rec.check(r.max_string_deviation, string_deviation(numeric, entry.string), o.string_tol,
                where + " " + entry.label);
      const double k = entry.branch == Branch::plus ? entry.l + 0.5 : entry.l - 0.5;
      const SchmidtString printed =
          entry.branch == Branch::plus ? hydrogen_plus_formula(k) : hydrogen_minus_formula(k);
      rec.check(r.max_string_deviation, string_deviation(numeric, printed), o.string_tol,
                where + " " + entry.label + " level formula");
      if (entry.branch == Branch::plus) {
        const SpinLabel spin(2 * entry.l);
        const Matrix q = reduced_superop(spin_projector(spin, Branch::plus), Side::second);
        rec.check(r.max_reduced_deviation, (q - spin_plus_reduced_closed(spin)).max_abs(), o.reduced_tol,
                  where + " " + entry.label + " reduced matrix");
      }
      chain_input.push_back({entry.label, numeric});
    }
    if (total_dim != static_cast<std::size_t>(2 * n * n)) rec.fail(where + ": dimensions do not sum to 2n^2");

    chain_input.push_back({kLimitingLabel, limiting_string()});
    const ChainResult chain = sort_chain(chain_input);
    if (!chain.totally_ordered || !chain.ties.empty() || chain.order != expected_hydrogen_chain(n)) {
      rec.fail(where + ": chain does not reproduce the expected strict order");
    }
    ++r.cases;
  }
  return r;
}

std::vector<FamilyReport> verify(const std::string& family, const VerifyOptions& options) {
  std::vector<FamilyReport> out;
  const bool all = family == "all";
  if (!all && family != "antisym" && family != "sym" && family != "spin" && family != "hydrogen") {
    throw Error(ErrorCode::invalid_argument, "unknown family '" + family + "'");
  }
  if (all || family == "antisym") out.push_back(verify_antisym(options));
  if (all || family == "sym") out.push_back(verify_sym(options));
  if (all || family == "spin") out.push_back(verify_spin(options));
  if (all || family == "hydrogen") out.push_back(verify_hydrogen(options));
  return out;
}

}  // namespace subent
