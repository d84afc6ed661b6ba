#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "subent/subent.h"

namespace subent::cli {

/// Malformed or inconsistent user input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure reported by the library (exit code 2 or 3 depending on status).
class LibraryError : public std::runtime_error {
 public:
  LibraryError(subent_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  subent_status status() const noexcept { return status_; }

 private:
  subent_status status_;
};

void check(subent_status status, const std::string& context);

// RAII owners for the C handles.
template <class H, subent_status (*Destroy)(H*)>
class Handle {
 public:
  Handle() = default;
  explicit Handle(H h) : h_(h) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : h_(o.h_) { o.h_ = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      reset();
      h_ = o.h_;
      o.h_ = nullptr;
    }
    return *this;
  }
  ~Handle() { reset(); }

  H get() const noexcept { return h_; }
  H* out() noexcept {
    reset();
    return &h_;
  }
  void reset() noexcept {
    if (h_) Destroy(&h_);
  }

 private:
  H h_ = nullptr;
};

using ProjectorHandle = Handle<subent_projector, subent_projector_destroy>;
using StringHandle = Handle<subent_string, subent_string_destroy>;
using ChainHandle = Handle<subent_chain, subent_chain_destroy>;
using HydrogenHandle = Handle<subent_hydrogen, subent_hydrogen_destroy>;
using VerifyHandle = Handle<subent_verify_result, subent_verify_destroy>;

using ComplexPair = std::array<double, 2>;

/// Input: a factorization plus either a spanning set or a projector matrix.
struct SubspaceDocument {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::optional<std::vector<std::vector<ComplexPair>>> basis;
  std::optional<std::vector<ComplexPair>> projector;  // row-major, (d1*d2)^2 entries
  std::string label;
};

SubspaceDocument parse_subspace_document(const nlohmann::json& j);
SubspaceDocument read_subspace_document(const std::string& path);

struct Defects {
  double hermiticity = 0.0;
  double idempotency = 0.0;
  double trace = 0.0;
  bool passed = false;

  friend bool operator==(const Defects&, const Defects&) = default;
};

struct ResultDocument {
  std::string label;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t dim = 0;
  std::vector<double> schmidt_string;
  std::size_t k = 0;
  subent_measures measures{};
  Defects defects;
  std::size_t rank_dropped = 0;

  bool operator==(const ResultDocument& o) const;
};

nlohmann::json to_json(const ResultDocument& r);
ResultDocument result_from_json(const nlohmann::json& j);

/// label,d1,d2,dim,p1..pK,e_d,e_i,e_t
std::string csv_header(std::size_t string_length);
std::string csv_row(const ResultDocument& r, std::size_t string_length);
std::string table(const std::vector<ResultDocument>& rows);

struct PipelineOptions {
  double zero_threshold = 1e-10;
  double drop_tol = 1e-10;
  bool orthonormalize = true;
};

ProjectorHandle build_projector(const SubspaceDocument& doc, const PipelineOptions& options, std::size_t* dropped);
ResultDocument evaluate(subent_projector p, const std::string& label, const PipelineOptions& options,
                        std::size_t dropped = 0);
std::vector<double> string_values(subent_string s);

/// Catalog preset: name is antisym, sym, spin, hydrogen or limiting.
struct PresetSpec {
  std::string name;
  int n = 0;
  int two_j = 0;
  int l = 0;
  subent_branch branch = SUBENT_BRANCH_PLUS;
};

/// "preset:antisym:n=3", "preset:spin:two_j=3:branch=minus", "preset:limiting", ...
std::optional<PresetSpec> parse_preset_spec(const std::string& text);
ProjectorHandle build_preset(const PresetSpec& spec);
std::string preset_label(const PresetSpec& spec);

}  // namespace subent::cli
