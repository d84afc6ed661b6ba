#include <cmath>
#include <numeric>

#include "doctest.h"
#include "core/error.hpp"
#include "core/operator_schmidt.hpp"
#include "support.hpp"

using namespace subent;

namespace {

Projector random_projector(std::size_t d1, std::size_t d2, std::size_t dim, oracle::Rng& rng) {
  auto vs = oracle::random_orthonormal(d1 * d2, dim, rng);
  return projector_from_basis(SubspaceBasis(Factorization(d1, d2), std::vector<Vector>(vs.begin(), vs.end())));
}

}  // namespace

TEST_CASE("realignment indices") {
  oracle::Rng rng(8);
  const auto p = random_projector(2, 3, 2, rng);
  const auto a = realign(p);
  CHECK(a.rows() == 4);
  CHECK(a.cols() == 9);
  const double s = std::sqrt(2.0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          CHECK(std::abs(a(i * 2 + j, k * 3 + l) - p.matrix()(i * 3 + k, j * 3 + l) / s) < 1e-15);
}

TEST_CASE("reduced superoperators match direct summation") {
  oracle::Rng rng(12);
  for (auto [d1, d2, dim] : {std::tuple{2, 2, 1}, {2, 3, 3}, {3, 2, 4}, {3, 3, 5}}) {
    const auto p = random_projector(d1, d2, dim, rng);
    const auto dp = to_dense(p.matrix());
    const auto q1 = reduced_superop(p, Side::first);
    const auto q2 = reduced_superop(p, Side::second);
    const auto w1 = oracle::reduced_first(dp, d1, d2, dim);
    const auto w2 = oracle::reduced_second(dp, d1, d2, dim);
    for (std::size_t i = 0; i < w1.a.size(); ++i) CHECK(std::abs(q1.entries()[i] - w1.a[i]) < 1e-13);
    for (std::size_t i = 0; i < w2.a.size(); ++i) CHECK(std::abs(q2.entries()[i] - w2.a[i]) < 1e-13);
    CHECK(std::abs(q1.trace() - 1.0) < 1e-12);
    CHECK(std::abs(q2.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("schmidt string of simple subspaces") {
  SUBCASE("whole space is a product") {
    std::vector<Vector> basis;
    for (int i = 0; i < 6; ++i) {
      Vector v(6);
      v[i] = 1.0;
      basis.push_back(v);
    }
    const auto s = schmidt_string(projector_from_basis(SubspaceBasis(Factorization(2, 3), basis)));
    CHECK(s.length() == 4);
    CHECK(s.k == 1);
    CHECK(max_diff(s.probs, {1, 0, 0, 0}) < 1e-12);
    const auto m = measures(s);
    CHECK(m.e_d == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(m.e_i == doctest::Approx(0.0));
    CHECK(m.e_t == doctest::Approx(0.0));
  }
  SUBCASE("singlet is uniform") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto p = projector_from_basis(SubspaceBasis(Factorization(2, 2), {Vector{0.0, r, -r, 0.0}}));
    const auto s = schmidt_string(p);
    CHECK(max_diff(s.probs, {0.25, 0.25, 0.25, 0.25}) < 1e-12);
    const auto m = measures(s);
    CHECK(m.e_i == doctest::Approx(2.0));
    CHECK(m.e_t == doctest::Approx(0.75));
    CHECK(m.e_d == doctest::Approx(1.0));
  }
  SUBCASE("string moments match the oracle reduced matrix") {
    // Tr Q^m = sum p^m; polynomial roots are too ill-conditioned here because
    // the spectra carry repeated zeros.
    oracle::Rng rng(21);
    for (int rep = 0; rep < 6; ++rep) {
      const auto p = random_projector(2, 2 + rep % 2, 1 + rep % 3, rng);
      const auto q2 = oracle::reduced_second(to_dense(p.matrix()), 2, 2 + rep % 2, static_cast<double>(p.dim()));
      const auto got = schmidt_string(p, 0.0).probs;
      oracle::Dense power = q2;
      for (int m = 1; m <= 4; ++m) {
        oracle::cd tr = 0;
        for (std::size_t i = 0; i < power.rows; ++i) tr += power.at(i, i);
        double sum = 0;
        for (double x : got) sum += std::pow(x, m);
        CHECK(std::abs(tr - sum) < 1e-12);
        power = oracle::naive_multiply(power, q2);
      }
    }
  }
}

TEST_CASE("make_schmidt_string") {
  const auto s = make_schmidt_string({0.25, 0.5, 1e-13, -1e-12, 0.25}, 6);
  CHECK(s.probs == std::vector<double>{0.5, 0.25, 0.25, 0, 0, 0});
  CHECK(s.k == 3);
  CHECK_THROWS_AS(make_schmidt_string({1.1, -0.1}, 2), Error);
  CHECK_THROWS_AS(make_schmidt_string({0.5, 0.4}, 2), Error);
  CHECK_THROWS_AS(make_schmidt_string({0.5, 0.25, 0.25}, 2), Error);
}

TEST_CASE("measures formulas") {
  const auto s = make_schmidt_string({0.5, 0.25, 0.25, 0.0}, 4);
  const auto m = measures(s);
  CHECK(m.e_d == doctest::Approx(std::sqrt(2 * (1 - std::sqrt(0.5)))));
  CHECK(m.e_i == doctest::Approx(1.5));
  CHECK(m.e_t == doctest::Approx(1 - 0.375));
}

TEST_CASE("vector schmidt and pure-subspace strings") {
  oracle::Rng rng(30);
  for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 4}}) {
    const auto v = oracle::random_unit_vector(d1 * d2, rng);
    const Factorization f(d1, d2);
    const auto coeffs = vector_schmidt(v, f);
    CHECK(coeffs.size() == static_cast<std::size_t>(std::min(d1, d2)));
    CHECK(std::accumulate(coeffs.begin(), coeffs.end(), 0.0) == doctest::Approx(1.0));

    const auto pure = pure_subspace_string(coeffs, f);
    const auto full = schmidt_string(projector_from_basis(SubspaceBasis(f, {v})));
    CHECK(max_diff(pure.probs, full.probs) < 1e-9);
    CHECK(measures(full).e_i == doctest::Approx(2 * oracle::entropy2(coeffs)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(vector_schmidt(Vector{1.0, 1.0, 0.0, 0.0}, Factorization(2, 2)), Error);
}
