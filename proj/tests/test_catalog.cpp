#include <cmath>

#include "doctest.h"
#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/majorization.hpp"
#include "support.hpp"

using namespace subent;

TEST_CASE("antisymmetric and symmetric bases") {
  CHECK(antisymmetric_subspace(3).dim() == 3);
  CHECK(symmetric_subspace(3).dim() == 6);
  CHECK(symmetric_subspace(1).dim() == 1);
  CHECK_THROWS_AS(antisymmetric_subspace(1), Error);
  CHECK_THROWS_AS(symmetric_subspace(0), Error);
  // Swap operator eigenvalue check: F v = -v on the antisymmetric basis.
  const auto a = antisymmetric_subspace(4);
  for (const auto& v : a.vectors())
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) CHECK(std::abs(v[i * 4 + k] + v[k * 4 + i]) < 1e-15);
}

TEST_CASE("antisymmetric n=3 and symmetric n=2 strings") {
  const auto a = schmidt_string(projector_from_basis(antisymmetric_subspace(3)));
  std::vector<double> want(9, 1.0 / 12);
  want[0] = 4.0 / 12;
  CHECK(max_diff(a.probs, want) < 1e-12);
  CHECK(measures(a).e_t == doctest::Approx(5.0 / 6));

  const auto s = schmidt_string(projector_from_basis(symmetric_subspace(2)));
  CHECK(max_diff(s.probs, {9.0 / 12, 1.0 / 12, 1.0 / 12, 1.0 / 12}) < 1e-12);
}

TEST_CASE("closed measures agree with the closed strings") {
  for (int n = 2; n <= 9; ++n) {
    const auto m = measures(antisym_string_closed(n));
    const auto c = closed_measures(Family::antisym, n);
    CHECK(m.e_d == doctest::Approx(c.e_d));
    CHECK(m.e_i == doctest::Approx(c.e_i));
    CHECK(m.e_t == doctest::Approx(c.e_t));
    const auto ms = measures(sym_string_closed(n));
    const auto cs = closed_measures(Family::sym, n);
    CHECK(ms.e_i == doctest::Approx(cs.e_i));
    CHECK(ms.e_t == doctest::Approx(cs.e_t));
  }
  for (int tj = 1; tj <= 8; ++tj) {
    for (auto [b, f] : {std::pair{Branch::plus, Family::spin_plus}, {Branch::minus, Family::spin_minus}}) {
      const auto m = measures(spin_string_closed(SpinLabel(tj), b));
      const auto c = closed_measures(f, tj);
      CHECK(m.e_d == doctest::Approx(c.e_d));
      CHECK(m.e_i == doctest::Approx(c.e_i));
      CHECK(m.e_t == doctest::Approx(c.e_t));
    }
  }
}

TEST_CASE("spin operators") {
  const auto ops = spin_operators(SpinLabel(2));
  // J+ |m=0> = sqrt2 |m=1>; basis index 0 is m=1.
  CHECK(ops.raise(0, 1) == Complex(std::sqrt(2.0)));
  CHECK(ops.raise(1, 2) == Complex(std::sqrt(2.0)));
  CHECK(ops.z(0, 0) == Complex(1.0));
  CHECK(ops.z(2, 2) == Complex(-1.0));
  // [J+, J-] = 2 J3
  const auto comm = multiply(ops.raise, ops.lower) - multiply(ops.lower, ops.raise);
  CHECK((comm - ops.z * Complex(2.0)).max_abs() < 1e-14);
  CHECK_THROWS_AS(SpinLabel(-1), Error);
  CHECK_THROWS_AS(spin_projector(SpinLabel(0), Branch::minus), Error);
}

TEST_CASE("spin j=1 reduced matrix in the (++, --, +-, -+) ordering") {
  // Native index k*2 + l for |k><l| with + = 0, - = 1.
  const std::size_t pp = 0, mm = 3, pm = 1, mp = 2;
  const auto q = reduced_superop(spin_projector(SpinLabel(2), Branch::plus), Side::second);
  CHECK(q(pp, pp).real() == doctest::Approx(7.0 / 18));
  CHECK(q(mm, mm).real() == doctest::Approx(7.0 / 18));
  CHECK(q(pm, pm).real() == doctest::Approx(1.0 / 9));
  CHECK(q(mp, mp).real() == doctest::Approx(1.0 / 9));
  CHECK(q(pp, mm).real() == doctest::Approx(5.0 / 18));
  CHECK(std::abs(q(pp, pm)) < 1e-14);
  CHECK((q - spin_plus_reduced_closed(SpinLabel(2))).max_abs() < 1e-14);
}

TEST_CASE("hydrogen levels") {
  CHECK(hydrogen_label(0, Branch::plus) == "V_1/2");
  CHECK(hydrogen_label(2, Branch::minus) == "Vt_3/2");
  const auto lvl = hydrogen_level(2);
  REQUIRE(lvl.entries.size() == 3);
  CHECK(lvl.entries[0].label == "V_1/2");
  CHECK(lvl.entries[1].label == "Vt_1/2");
  CHECK(lvl.entries[2].label == "V_3/2");
  std::size_t total = 0;
  for (const auto& e : lvl.entries) total += e.dim;
  CHECK(total == 8);
  CHECK(expected_hydrogen_chain(3) ==
        std::vector<std::string>{"V_1/2", "V_3/2", "V_5/2", "S_0", "Vt_3/2", "Vt_1/2"});
  CHECK(expected_hydrogen_chain(1) == std::vector<std::string>{"V_1/2", "S_0"});

  const auto p = hydrogen_subspace_projector(3, 1, Branch::minus);
  CHECK(p.dim() == 2);
  CHECK(p.factorization() == Factorization(9, 2));
  const auto s = schmidt_string(p);
  CHECK(max_diff(s.probs, {1.0 / 3, 2.0 / 9, 2.0 / 9, 2.0 / 9}) < 1e-12);
}

TEST_CASE("limiting string sits between the branches") {
  const auto lim = limiting_string();
  CHECK(max_diff(lim.probs, {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}) < 1e-15);
  for (int tj = 1; tj <= 30; ++tj) {
    CHECK(compare(spin_string_closed(SpinLabel(tj), Branch::plus), lim) == Verdict::less_entangled);
    CHECK(compare(spin_string_closed(SpinLabel(tj), Branch::minus), lim) == Verdict::more_entangled);
  }
}
