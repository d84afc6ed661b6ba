#include "subent/subent.h"

#include <complex>
#include <new>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/majorization.hpp"
#include "core/operator_schmidt.hpp"
#include "core/subspace.hpp"
#include "core/verify.hpp"

struct subent_projector_s {
  subent::Projector value;
};

struct subent_string_s {
  subent::SchmidtString value;
};

struct subent_chain_s {
  subent::ChainResult value;
};

struct subent_hydrogen_s {
  subent::HydrogenLevel value;
  std::vector<std::string> expected;
};

struct subent_verify_s {
  std::vector<subent::FamilyReport> value;
};

namespace {

thread_local std::string g_last_error;

subent_status to_status(subent::ErrorCode code) {
  using subent::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return SUBENT_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch:
      return SUBENT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_orthonormal:
      return SUBENT_ERR_NOT_ORTHONORMAL;
    case ErrorCode::not_hermitian:
      return SUBENT_ERR_NOT_HERMITIAN;
    case ErrorCode::not_projector:
      return SUBENT_ERR_NOT_PROJECTOR;
    case ErrorCode::numerical_failure:
      return SUBENT_ERR_NUMERICAL;
    case ErrorCode::not_converged:
      return SUBENT_ERR_NOT_CONVERGED;
  }
  return SUBENT_ERR_UNKNOWN;
}

subent_status fail(subent_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
subent_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const subent::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SUBENT_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(SUBENT_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(SUBENT_ERR_UNKNOWN, "unknown error");
  }
}

#define SUBENT_REQUIRE(cond, status, msg) \
  do {                                    \
    if (!(cond)) return fail(status, msg); \
  } while (0)

subent::Branch to_branch(subent_branch b) {
  if (b == SUBENT_BRANCH_PLUS) return subent::Branch::plus;
  if (b == SUBENT_BRANCH_MINUS) return subent::Branch::minus;
  throw subent::Error(subent::ErrorCode::invalid_argument, "unknown branch");
}

subent::Family to_family(subent_family f) {
  switch (f) {
    case SUBENT_FAMILY_ANTISYM:
      return subent::Family::antisym;
    case SUBENT_FAMILY_SYM:
      return subent::Family::sym;
    case SUBENT_FAMILY_SPIN_PLUS:
      return subent::Family::spin_plus;
    case SUBENT_FAMILY_SPIN_MINUS:
      return subent::Family::spin_minus;
  }
  throw subent::Error(subent::ErrorCode::invalid_argument, "unknown family");
}

subent_verdict to_verdict(subent::Verdict v) {
  switch (v) {
    case subent::Verdict::more_entangled:
      return SUBENT_MORE_ENTANGLED;
    case subent::Verdict::less_entangled:
      return SUBENT_LESS_ENTANGLED;
    case subent::Verdict::equal:
      return SUBENT_EQUAL;
    case subent::Verdict::incomparable:
      break;
  }
  return SUBENT_INCOMPARABLE;
}

std::vector<subent::Complex> read_complex(const double* data, std::size_t count) {
  std::vector<subent::Complex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {data[2 * i], data[2 * i + 1]};
  return out;
}

void fill_report(const subent::ProjectorReport& r, subent_projector_report* out) {
  out->hermiticity_defect = r.hermiticity_defect;
  out->idempotency_defect = r.idempotency_defect;
  out->trace_defect = r.trace_defect;
  out->trace = r.trace;
  out->passed = r.passed ? 1 : 0;
}

subent_status emit_projector(subent::Projector p, subent_projector* out) {
  *out = new subent_projector_s{std::move(p)};
  return SUBENT_OK;
}

subent_status emit_string(subent::SchmidtString s, subent_string* out) {
  *out = new subent_string_s{std::move(s)};
  return SUBENT_OK;
}

template <class H>
subent_status destroy(H** handle) {
  SUBENT_REQUIRE(handle != nullptr, SUBENT_ERR_INVALID_HANDLE, "null handle pointer");
  delete *handle;
  *handle = nullptr;
  return SUBENT_OK;
}

}  // namespace

extern "C" {

const char* subent_last_error(void) { return g_last_error.c_str(); }

const char* subent_status_string(subent_status status) {
  switch (status) {
    case SUBENT_OK:
      return "ok";
    case SUBENT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SUBENT_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case SUBENT_ERR_NOT_ORTHONORMAL:
      return "basis not orthonormal";
    case SUBENT_ERR_NOT_HERMITIAN:
      return "matrix not Hermitian";
    case SUBENT_ERR_NOT_PROJECTOR:
      return "matrix not a projector";
    case SUBENT_ERR_NUMERICAL:
      return "numerical failure";
    case SUBENT_ERR_NOT_CONVERGED:
      return "eigensolver did not converge";
    case SUBENT_ERR_INVALID_HANDLE:
      return "invalid handle";
    case SUBENT_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case SUBENT_ERR_UNKNOWN:
      break;
  }
  return "unknown error";
}

const char* subent_verdict_string(subent_verdict verdict) {
  switch (verdict) {
    case SUBENT_MORE_ENTANGLED:
      return "more_entangled";
    case SUBENT_LESS_ENTANGLED:
      return "less_entangled";
    case SUBENT_EQUAL:
      return "equal";
    case SUBENT_INCOMPARABLE:
      return "incomparable";
  }
  return "unknown";
}

const char* subent_version(void) { return "0.1.0"; }

subent_status subent_projector_from_basis(size_t d1, size_t d2, size_t count, const double* vectors,
                                          int orthonormalize, double drop_tol, size_t* dropped,
                                          subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    SUBENT_REQUIRE(vectors != nullptr || count == 0, SUBENT_ERR_INVALID_ARGUMENT, "null vector data");
    const subent::Factorization f(d1, d2);
    std::vector<subent::Vector> basis;
    basis.reserve(count);
    for (std::size_t a = 0; a < count; ++a) basis.push_back(read_complex(vectors + 2 * a * f.total(), f.total()));
    if (orthonormalize) {
      auto ortho = subent::gram_schmidt(basis, drop_tol);
      if (dropped) *dropped = ortho.dropped;
      basis = std::move(ortho.vectors);
    } else if (dropped) {
      *dropped = 0;
    }
    return emit_projector(subent::projector_from_basis(subent::SubspaceBasis(f, std::move(basis))), out);
  });
}

subent_status subent_projector_from_matrix(size_t d1, size_t d2, const double* matrix, subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    SUBENT_REQUIRE(matrix != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null matrix data");
    const subent::Factorization f(d1, d2);
    const std::size_t n = f.total();
    return emit_projector(subent::Projector(f, subent::Matrix(n, n, read_complex(matrix, n * n))), out);
  });
}

subent_status subent_projector_destroy(subent_projector* p) { return destroy(p); }

subent_status subent_projector_info(subent_projector p, size_t* d1, size_t* d2, size_t* dim) {
  SUBENT_REQUIRE(p != nullptr, SUBENT_ERR_INVALID_HANDLE, "null projector");
  if (d1) *d1 = p->value.factorization().d1;
  if (d2) *d2 = p->value.factorization().d2;
  if (dim) *dim = p->value.dim();
  return SUBENT_OK;
}

subent_status subent_projector_report_get(subent_projector p, subent_projector_report* report) {
  SUBENT_REQUIRE(p != nullptr, SUBENT_ERR_INVALID_HANDLE, "null projector");
  SUBENT_REQUIRE(report != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null report");
  fill_report(p->value.report(), report);
  return SUBENT_OK;
}

subent_status subent_validate_matrix(size_t n, const double* matrix, subent_projector_report* report) {
  return guarded([&] {
    SUBENT_REQUIRE(matrix != nullptr && report != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null argument");
    fill_report(subent::validate_projector(subent::Matrix(n, n, read_complex(matrix, n * n))), report);
    return SUBENT_OK;
  });
}

subent_status subent_reduced_superop(subent_projector p, int side, double* buffer, size_t capacity, size_t* rows) {
  return guarded([&] {
    SUBENT_REQUIRE(p != nullptr, SUBENT_ERR_INVALID_HANDLE, "null projector");
    SUBENT_REQUIRE(side == 1 || side == 2, SUBENT_ERR_INVALID_ARGUMENT, "side must be 1 or 2");
    const auto& f = p->value.factorization();
    const std::size_t order = side == 1 ? f.d1 * f.d1 : f.d2 * f.d2;
    if (rows) *rows = order;
    if (buffer == nullptr) return SUBENT_OK;
    SUBENT_REQUIRE(capacity >= order * order, SUBENT_ERR_BUFFER_TOO_SMALL, "reduced matrix buffer too small");
    const subent::Matrix m = subent::reduced_superop(p->value, side == 1 ? subent::Side::first : subent::Side::second);
    const auto entries = m.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      buffer[2 * i] = entries[i].real();
      buffer[2 * i + 1] = entries[i].imag();
    }
    return SUBENT_OK;
  });
}

subent_status subent_preset_antisym(int n, subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_projector(subent::projector_from_basis(subent::antisymmetric_subspace(n)), out);
  });
}

subent_status subent_preset_sym(int n, subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_projector(subent::projector_from_basis(subent::symmetric_subspace(n)), out);
  });
}

subent_status subent_preset_spin(int two_j, subent_branch branch, subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_projector(subent::spin_projector(subent::SpinLabel(two_j), to_branch(branch)), out);
  });
}

subent_status subent_preset_hydrogen(int n, int l, subent_branch branch, subent_projector* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_projector(subent::hydrogen_subspace_projector(n, l, to_branch(branch)), out);
  });
}

subent_status subent_schmidt_string(subent_projector p, double zero_threshold, subent_string* out) {
  return guarded([&] {
    SUBENT_REQUIRE(p != nullptr, SUBENT_ERR_INVALID_HANDLE, "null projector");
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_string(subent::schmidt_string(p->value, zero_threshold), out);
  });
}

subent_status subent_string_from_values(size_t count, const double* values, size_t length, double zero_threshold,
                                        subent_string* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    SUBENT_REQUIRE(values != nullptr || count == 0, SUBENT_ERR_INVALID_ARGUMENT, "null values");
    SUBENT_REQUIRE(length >= 1, SUBENT_ERR_INVALID_ARGUMENT, "string length must be positive");
    return emit_string(subent::make_schmidt_string(std::vector<double>(values, values + count), length, zero_threshold),
                       out);
  });
}

subent_status subent_closed_string(subent_family family, int parameter, subent_string* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    switch (to_family(family)) {
      case subent::Family::antisym:
        return emit_string(subent::antisym_string_closed(parameter), out);
      case subent::Family::sym:
        return emit_string(subent::sym_string_closed(parameter), out);
      case subent::Family::spin_plus:
        return emit_string(subent::spin_string_closed(subent::SpinLabel(parameter), subent::Branch::plus), out);
      case subent::Family::spin_minus:
        return emit_string(subent::spin_string_closed(subent::SpinLabel(parameter), subent::Branch::minus), out);
    }
    return fail(SUBENT_ERR_INVALID_ARGUMENT, "unknown family");
  });
}

subent_status subent_limiting_string(subent_string* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    return emit_string(subent::limiting_string(), out);
  });
}

subent_status subent_string_destroy(subent_string* s) { return destroy(s); }

subent_status subent_string_length(subent_string s, size_t* length, size_t* k) {
  SUBENT_REQUIRE(s != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  if (length) *length = s->value.length();
  if (k) *k = s->value.k;
  return SUBENT_OK;
}

subent_status subent_string_values(subent_string s, double* buffer, size_t capacity) {
  SUBENT_REQUIRE(s != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  SUBENT_REQUIRE(buffer != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null buffer");
  SUBENT_REQUIRE(capacity >= s->value.length(), SUBENT_ERR_BUFFER_TOO_SMALL, "string buffer too small");
  std::copy(s->value.probs.begin(), s->value.probs.end(), buffer);
  return SUBENT_OK;
}

subent_status subent_string_measures(subent_string s, subent_measures* out) {
  SUBENT_REQUIRE(s != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  const subent::Measures m = subent::measures(s->value);
  *out = {m.e_d, m.e_i, m.e_t};
  return SUBENT_OK;
}

subent_status subent_closed_measures(subent_family family, int parameter, subent_measures* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
    const subent::Measures m = subent::closed_measures(to_family(family), parameter);
    *out = {m.e_d, m.e_i, m.e_t};
    return SUBENT_OK;
  });
}

subent_status subent_compare(subent_string first, subent_string second, double tol, subent_verdict* verdict) {
  SUBENT_REQUIRE(first != nullptr && second != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  SUBENT_REQUIRE(verdict != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *verdict = to_verdict(subent::compare(first->value, second->value, tol));
    return SUBENT_OK;
  });
}

subent_status subent_compare_partial_sums(subent_string first, subent_string second, double* sums_first,
                                          double* sums_second, size_t capacity, size_t* padded) {
  SUBENT_REQUIRE(first != nullptr && second != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  return guarded([&] {
    const std::size_t len = std::max(first->value.length(), second->value.length());
    if (padded) *padded = len;
    if (sums_first || sums_second) {
      SUBENT_REQUIRE(capacity >= len, SUBENT_ERR_BUFFER_TOO_SMALL, "partial-sum buffer too small");
    }
    if (sums_first) {
      const auto s = subent::partial_sums(first->value.probs, len);
      std::copy(s.begin(), s.end(), sums_first);
    }
    if (sums_second) {
      const auto s = subent::partial_sums(second->value.probs, len);
      std::copy(s.begin(), s.end(), sums_second);
    }
    return SUBENT_OK;
  });
}

subent_status subent_measure_consistency(subent_string first, subent_string second, double tol,
                                         subent_consistency* out) {
  SUBENT_REQUIRE(first != nullptr && second != nullptr, SUBENT_ERR_INVALID_HANDLE, "null string");
  SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const auto r = subent::measure_consistency(first->value, second->value, tol);
    *out = {r.margin_d, r.margin_i, r.margin_t, r.holds ? 1 : 0};
    return SUBENT_OK;
  });
}

subent_status subent_chain_sort(size_t count, const char* const* labels, const subent_string* strings, double tol,
                                subent_chain* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    SUBENT_REQUIRE(count == 0 || (labels != nullptr && strings != nullptr), SUBENT_ERR_INVALID_ARGUMENT,
                   "null chain input");
    std::vector<subent::LabeledString> items;
    items.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      SUBENT_REQUIRE(strings[i] != nullptr && labels[i] != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain entry");
      items.push_back({labels[i], strings[i]->value});
    }
    *out = new subent_chain_s{subent::sort_chain(items, tol)};
    return SUBENT_OK;
  });
}

subent_status subent_chain_destroy(subent_chain* c) { return destroy(c); }

subent_status subent_chain_is_total(subent_chain c, int* total) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(total != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *total = c->value.totally_ordered ? 1 : 0;
  return SUBENT_OK;
}

subent_status subent_chain_size(subent_chain c, size_t* size) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(size != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *size = c->value.order.size();
  return SUBENT_OK;
}

subent_status subent_chain_label(subent_chain c, size_t index, const char** label) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(label != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  SUBENT_REQUIRE(index < c->value.order.size(), SUBENT_ERR_INVALID_ARGUMENT, "chain index out of range");
  *label = c->value.order[index].c_str();
  return SUBENT_OK;
}

subent_status subent_chain_tie_count(subent_chain c, size_t* count) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(count != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *count = c->value.ties.size();
  return SUBENT_OK;
}

subent_status subent_chain_tie(subent_chain c, size_t index, const char** a, const char** b) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(a != nullptr && b != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  SUBENT_REQUIRE(index < c->value.ties.size(), SUBENT_ERR_INVALID_ARGUMENT, "tie index out of range");
  *a = c->value.ties[index].first.c_str();
  *b = c->value.ties[index].second.c_str();
  return SUBENT_OK;
}

subent_status subent_chain_incomparable_count(subent_chain c, size_t* count) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(count != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *count = c->value.incomparable.size();
  return SUBENT_OK;
}

subent_status subent_chain_incomparable(subent_chain c, size_t index, const char** a, const char** b) {
  SUBENT_REQUIRE(c != nullptr, SUBENT_ERR_INVALID_HANDLE, "null chain");
  SUBENT_REQUIRE(a != nullptr && b != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  SUBENT_REQUIRE(index < c->value.incomparable.size(), SUBENT_ERR_INVALID_ARGUMENT, "pair index out of range");
  *a = c->value.incomparable[index].first.c_str();
  *b = c->value.incomparable[index].second.c_str();
  return SUBENT_OK;
}

subent_status subent_hydrogen_level(int n, subent_hydrogen* out) {
  return guarded([&] {
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    *out = new subent_hydrogen_s{subent::hydrogen_level(n), subent::expected_hydrogen_chain(n)};
    return SUBENT_OK;
  });
}

subent_status subent_hydrogen_destroy(subent_hydrogen* h) { return destroy(h); }

subent_status subent_hydrogen_size(subent_hydrogen h, size_t* count) {
  SUBENT_REQUIRE(h != nullptr, SUBENT_ERR_INVALID_HANDLE, "null hydrogen level");
  SUBENT_REQUIRE(count != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *count = h->value.entries.size();
  return SUBENT_OK;
}

subent_status subent_hydrogen_entry(subent_hydrogen h, size_t index, const char** label, int* l,
                                    subent_branch* branch, size_t* dim) {
  SUBENT_REQUIRE(h != nullptr, SUBENT_ERR_INVALID_HANDLE, "null hydrogen level");
  SUBENT_REQUIRE(index < h->value.entries.size(), SUBENT_ERR_INVALID_ARGUMENT, "entry index out of range");
  const auto& e = h->value.entries[index];
  if (label) *label = e.label.c_str();
  if (l) *l = e.l;
  if (branch) *branch = e.branch == subent::Branch::plus ? SUBENT_BRANCH_PLUS : SUBENT_BRANCH_MINUS;
  if (dim) *dim = e.dim;
  return SUBENT_OK;
}

subent_status subent_hydrogen_entry_string(subent_hydrogen h, size_t index, subent_string* out) {
  SUBENT_REQUIRE(h != nullptr, SUBENT_ERR_INVALID_HANDLE, "null hydrogen level");
  SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
  SUBENT_REQUIRE(index < h->value.entries.size(), SUBENT_ERR_INVALID_ARGUMENT, "entry index out of range");
  return guarded([&] { return emit_string(h->value.entries[index].string, out); });
}

subent_status subent_hydrogen_expected_label(subent_hydrogen h, size_t index, const char** label) {
  SUBENT_REQUIRE(h != nullptr, SUBENT_ERR_INVALID_HANDLE, "null hydrogen level");
  SUBENT_REQUIRE(label != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  SUBENT_REQUIRE(index < h->expected.size(), SUBENT_ERR_INVALID_ARGUMENT, "chain index out of range");
  *label = h->expected[index].c_str();
  return SUBENT_OK;
}

void subent_verify_options_default(subent_verify_options* options) {
  if (!options) return;
  const subent::VerifyOptions d;
  options->max_n = d.max_n;
  options->max_two_j = d.max_two_j;
  options->max_hydrogen_n = d.max_hydrogen_n;
  options->string_tol = d.string_tol;
  options->zero_threshold = d.zero_threshold;
}

subent_status subent_verify(const char* family, const subent_verify_options* options, subent_verify_result* out) {
  return guarded([&] {
    SUBENT_REQUIRE(family != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null family");
    SUBENT_REQUIRE(out != nullptr, SUBENT_ERR_INVALID_HANDLE, "null output handle");
    subent::VerifyOptions o;
    if (options) {
      o.max_n = options->max_n;
      o.max_two_j = options->max_two_j;
      o.max_hydrogen_n = options->max_hydrogen_n;
      o.string_tol = options->string_tol;
      o.zero_threshold = options->zero_threshold;
    }
    *out = new subent_verify_s{subent::verify(family, o)};
    return SUBENT_OK;
  });
}

subent_status subent_verify_destroy(subent_verify_result* v) { return destroy(v); }

subent_status subent_verify_size(subent_verify_result v, size_t* count) {
  SUBENT_REQUIRE(v != nullptr, SUBENT_ERR_INVALID_HANDLE, "null verify result");
  SUBENT_REQUIRE(count != nullptr, SUBENT_ERR_INVALID_ARGUMENT, "null output");
  *count = v->value.size();
  return SUBENT_OK;
}

subent_status subent_verify_entry(subent_verify_result v, size_t index, const char** family, int* passed, int* cases,
                                  double* max_string_deviation, double* max_measure_deviation,
                                  double* max_reduced_deviation, const char** failure) {
  SUBENT_REQUIRE(v != nullptr, SUBENT_ERR_INVALID_HANDLE, "null verify result");
  SUBENT_REQUIRE(index < v->value.size(), SUBENT_ERR_INVALID_ARGUMENT, "entry index out of range");
  const auto& r = v->value[index];
  if (family) *family = r.family.c_str();
  if (passed) *passed = r.passed ? 1 : 0;
  if (cases) *cases = r.cases;
  if (max_string_deviation) *max_string_deviation = r.max_string_deviation;
  if (max_measure_deviation) *max_measure_deviation = r.max_measure_deviation;
  if (max_reduced_deviation) *max_reduced_deviation = r.max_reduced_deviation;
  if (failure) *failure = r.failure.c_str();
  return SUBENT_OK;
}

}  // extern "C"
