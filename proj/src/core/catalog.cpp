#include "core/catalog.hpp"

#include <cmath>

#include "core/error.hpp"

namespace subent {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_argument, message);
}

std::size_t composite(std::size_t i, std::size_t k, std::size_t d2) { return i * d2 + k; }

SchmidtString closed_pair_string(int n, int shift) {
  const double nn = n;
  const double denom = 2.0 * nn * (nn + shift);
  std::vector<double> values(static_cast<std::size_t>(n) * n, 1.0 / denom);
  values[0] = (nn + shift) * (nn + shift) / denom;
  const std::size_t len = values.size();
  return make_schmidt_string(std::move(values), len);
}

}  // namespace

SubspaceBasis antisymmetric_subspace(int n) {
  require(n >= 2, "antisymmetric subspace needs n >= 2");
  const auto d = static_cast<std::size_t>(n);
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      Vector v(d * d);
      v[composite(k, l, d)] = r;
      v[composite(l, k, d)] = -r;
      vectors.push_back(std::move(v));
    }
  }
  return SubspaceBasis(Factorization(d, d), std::move(vectors));
}

SubspaceBasis symmetric_subspace(int n) {
  require(n >= 1, "symmetric subspace needs n >= 1");
  const auto d = static_cast<std::size_t>(n);
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k; l < d; ++l) {
      Vector v(d * d);
      if (k == l) {
        v[composite(k, k, d)] = 1.0;
      } else {
        v[composite(k, l, d)] = r;
        v[composite(l, k, d)] = r;
      }
      vectors.push_back(std::move(v));
    }
  }
  return SubspaceBasis(Factorization(d, d), std::move(vectors));
}

SchmidtString antisym_string_closed(int n) {
  require(n >= 2, "antisymmetric string needs n >= 2");
  return closed_pair_string(n, -1);
}

SchmidtString sym_string_closed(int n) {
  require(n >= 1, "symmetric string needs n >= 1");
  return closed_pair_string(n, +1);
}

Measures closed_measures(Family family, int parameter) {
  Measures m;
  switch (family) {
    case Family::antisym: {
      require(parameter >= 2, "antisym closed measures need n >= 2");
      const double n = parameter;
      m.e_d = std::sqrt(2.0 * (1.0 - std::sqrt((n - 1.0) / (2.0 * n))));
      m.e_i = std::log2(2.0 * n * std::pow(n - 1.0, 1.0 / n));
      m.e_t = (n + 1.0) * (3.0 * n - 4.0) / (4.0 * n * (n - 1.0));
      return m;
    }
    case Family::sym: {
      require(parameter >= 1, "sym closed measures need n >= 1");
      const double n = parameter;
      m.e_d = std::sqrt(2.0 * (1.0 - std::sqrt((n + 1.0) / (2.0 * n))));
      m.e_i = std::log2(2.0 * n / std::pow(n + 1.0, 1.0 / n));
      m.e_t = (n - 1.0) * (3.0 * n + 4.0) / (4.0 * n * (n + 1.0));
      return m;
    }
    case Family::spin_plus: {
      require(parameter >= 0, "spin_plus closed measures need 2j >= 0");
      const double j = 0.5 * parameter;
      const double w = 2.0 * j + 1.0;
      m.e_d = std::sqrt(2.0 * (1.0 - std::sqrt((j + 1.0) / w)));
      m.e_i = -std::log2(std::pow(j / 3.0, j / w) * std::pow(j + 1.0, (j + 1.0) / w) / w);
      m.e_t = 2.0 * j * (4.0 * j + 3.0) / (3.0 * w * w);
      return m;
    }
    case Family::spin_minus: {
      require(parameter >= 1, "spin_minus closed measures need 2j >= 1");
      const double j = 0.5 * parameter;
      const double w = 2.0 * j + 1.0;
      m.e_d = std::sqrt(2.0 * (1.0 - std::sqrt(j / w)));
      m.e_i = -std::log2(std::pow((j + 1.0) / 3.0, (j + 1.0) / w) * std::pow(j, j / w) / w);
      m.e_t = 2.0 * (j + 1.0) * (4.0 * j + 1.0) / (3.0 * w * w);
      return m;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

SpinLabel::SpinLabel(int two_j_) : two_j(two_j_) { require(two_j >= 0, "2j must be non-negative"); }

const char* to_string(Branch b) noexcept { return b == Branch::plus ? "plus" : "minus"; }

SpinOperators spin_operators(SpinLabel s) {
  const std::size_t dim = s.multiplicity();
  SpinOperators ops{Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)};
  for (std::size_t a = 0; a < dim; ++a) ops.z(a, a) = s.j() - static_cast<double>(a);
  for (std::size_t k = 1; k < dim; ++k) {
    ops.raise(k - 1, k) = std::sqrt(static_cast<double>(k) * static_cast<double>(dim - k));
  }
  ops.lower = adjoint(ops.raise);
  return ops;
}

Matrix spin_x_operator(SpinLabel s) {
  const SpinOperators j_ops = spin_operators(s);
  const SpinOperators s_ops = spin_operators(SpinLabel(1));
  return kron(j_ops.raise, s_ops.lower) + kron(j_ops.lower, s_ops.raise) + 2.0 * kron(j_ops.z, s_ops.z);
}

Projector spin_projector(SpinLabel s, Branch b) {
  require(b == Branch::plus || s.two_j >= 1, "minus branch needs 2j >= 1");
  const double j = s.j();
  const double sign = b == Branch::plus ? 1.0 : -1.0;
  const Matrix x = spin_x_operator(s);
  const Matrix id = Matrix::identity(x.rows());
  Matrix p = (sign / (2.0 * j + 1.0)) * (x + (0.5 + sign * (j + 0.5)) * id);
  return Projector(Factorization(s.multiplicity(), 2), std::move(p));
}

SchmidtString spin_string_closed(SpinLabel s, Branch b) {
  require(b == Branch::plus || s.two_j >= 1, "minus branch needs 2j >= 1");
  const double j = s.j();
  const double w = 2.0 * j + 1.0;
  const double lead = b == Branch::plus ? j + 1.0 : j;
  const double rest = (b == Branch::plus ? j : j + 1.0) / 3.0;
  return make_schmidt_string({lead / w, rest / w, rest / w, rest / w}, 4);
}

Matrix spin_plus_reduced_closed(SpinLabel s) {
  const double j = s.j();
  const double w = 2.0 * j + 1.0;
  const double diag_outer = (4.0 * j + 3.0) / (6.0 * w);
  const double diag_inner = j / (3.0 * w);
  const double cross = (2.0 * j + 3.0) / (6.0 * w);
  Matrix q(4, 4);
  q(0, 0) = q(3, 3) = diag_outer;
  q(1, 1) = q(2, 2) = diag_inner;
  q(0, 3) = q(3, 0) = cross;
  return q;
}

SchmidtString limiting_string() { return make_schmidt_string({0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}, 4); }

std::string hydrogen_label(int l, Branch b) {
  require(l >= 0, "orbital quantum number must be non-negative");
  require(b == Branch::plus || l >= 1, "minus branch needs l >= 1");
  const int two_k = b == Branch::plus ? 2 * l + 1 : 2 * l - 1;
  return std::string(b == Branch::plus ? "V_" : "Vt_") + std::to_string(two_k) + "/2";
}

HydrogenLevel hydrogen_level(int n) {
  require(n >= 1, "principal quantum number must be >= 1");
  HydrogenLevel level;
  level.n = n;
  for (int l = 0; l < n; ++l) {
    const SpinLabel s(2 * l);
    if (l >= 1) {
      level.entries.push_back({hydrogen_label(l, Branch::minus), l, Branch::minus,
                               static_cast<std::size_t>(2 * l), spin_string_closed(s, Branch::minus)});
    }
    level.entries.push_back({hydrogen_label(l, Branch::plus), l, Branch::plus,
                             static_cast<std::size_t>(2 * l + 2), spin_string_closed(s, Branch::plus)});
  }
  return level;
}

Projector hydrogen_subspace_projector(int n, int l, Branch b) {
  require(n >= 1, "principal quantum number must be >= 1");
  require(l >= 0 && l < n, "orbital quantum number must satisfy 0 <= l < n");
  const Projector shell = spin_projector(SpinLabel(2 * l), b);
  const auto orbital_dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto offset = static_cast<std::size_t>(l) * static_cast<std::size_t>(l);
  const std::size_t shell_dim = shell.factorization().d1;
  Matrix p(2 * orbital_dim, 2 * orbital_dim);
  for (std::size_t a = 0; a < shell_dim; ++a) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t c = 0; c < shell_dim; ++c) {
        for (std::size_t t = 0; t < 2; ++t) {
          p(composite(offset + a, s, 2), composite(offset + c, t, 2)) = shell.matrix()(composite(a, s, 2), composite(c, t, 2));
        }
      }
    }
  }
  return Projector(Factorization(orbital_dim, 2), std::move(p));
}

std::vector<std::string> expected_hydrogen_chain(int n) {
  require(n >= 1, "principal quantum number must be >= 1");
  std::vector<std::string> chain;
  for (int l = 0; l < n; ++l) chain.push_back(hydrogen_label(l, Branch::plus));
  chain.emplace_back(kLimitingLabel);
  for (int l = n - 1; l >= 1; --l) chain.push_back(hydrogen_label(l, Branch::minus));
  return chain;
}

}  // namespace subent
