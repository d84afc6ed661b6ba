// subent: command-line front end over the subent C library.
//
//   subent schmidt  FILE | --preset NAME [--n N] [--two-j J] [--l L] [--branch plus|minus]
//   subent compare  A B            (each a JSON file or preset:NAME[:key=value...])
//   subent hydrogen --n N [--format json|csv|table]
//   subent verify   [--family all|antisym|sym|spin|hydrogen] [--max-n N] [--max-two-j J]
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 numerical error.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "documents.hpp"

namespace cli = subent::cli;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
  double tol = 1e-9;
  double zero_threshold = 1e-10;
  double drop_tol = 1e-10;
  std::string format = "json";
  bool no_orthonormalize = false;
};

cli::PipelineOptions pipeline(const CommonFlags& f) {
  return {f.zero_threshold, f.drop_tol, !f.no_orthonormalize};
}

struct LabeledHandle {
  std::string label;
  cli::StringHandle string;
};

// A compare operand: a preset string or a subspace document on disk.
LabeledHandle load_operand(const std::string& arg, const CommonFlags& flags) {
  LabeledHandle out;
  if (auto spec = cli::parse_preset_spec(arg)) {
    if (spec->name == "limiting") {
      out.label = "S_0";
      cli::check(subent_limiting_string(out.string.out()), "limiting string");
      return out;
    }
    auto p = cli::build_preset(*spec);
    out.label = cli::preset_label(*spec);
    cli::check(subent_schmidt_string(p.get(), flags.zero_threshold, out.string.out()), "computing Schmidt string");
    return out;
  }
  const auto doc = cli::read_subspace_document(arg);
  std::size_t dropped = 0;
  auto p = cli::build_projector(doc, pipeline(flags), &dropped);
  out.label = doc.label;
  cli::check(subent_schmidt_string(p.get(), flags.zero_threshold, out.string.out()), "computing Schmidt string");
  return out;
}

void emit(const std::vector<cli::ResultDocument>& rows, const std::string& format, std::size_t string_length) {
  if (format == "csv") {
    std::cout << cli::csv_header(string_length) << '\n';
    for (const auto& r : rows) std::cout << cli::csv_row(r, string_length) << '\n';
  } else if (format == "table") {
    std::cout << cli::table(rows);
  } else {
    if (rows.size() == 1) {
      std::cout << cli::to_json(rows.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(cli::to_json(r));
      std::cout << arr.dump(2) << '\n';
    }
  }
}

int cmd_schmidt(const std::string& input, const cli::PresetSpec& preset, bool use_preset, const CommonFlags& flags) {
  if (use_preset == !input.empty()) throw cli::InputError("give exactly one of an input file or --preset");
  cli::ResultDocument result;
  if (use_preset) {
    if (preset.name == "limiting") throw cli::InputError("the limiting string is not a subspace; use it with compare");
    auto p = cli::build_preset(preset);
    result = cli::evaluate(p.get(), cli::preset_label(preset), pipeline(flags));
  } else {
    const auto doc = cli::read_subspace_document(input);
    std::size_t dropped = 0;
    auto p = cli::build_projector(doc, pipeline(flags), &dropped);
    result = cli::evaluate(p.get(), doc.label, pipeline(flags), dropped);
    if (dropped > 0) std::cerr << fmt::format("note: {} dependent input vector(s) dropped\n", dropped);
  }
  emit({result}, flags.format, result.schmidt_string.size());
  return kExitOk;
}

int cmd_compare(const std::string& a_arg, const std::string& b_arg, const CommonFlags& flags) {
  const auto a = load_operand(a_arg, flags);
  const auto b = load_operand(b_arg, flags);
  subent_verdict verdict{};
  cli::check(subent_compare(a.string.get(), b.string.get(), flags.tol, &verdict), "compare");

  std::size_t padded = 0;
  cli::check(subent_compare_partial_sums(a.string.get(), b.string.get(), nullptr, nullptr, 0, &padded), "partial sums");
  std::vector<double> sa(padded), sb(padded);
  cli::check(subent_compare_partial_sums(a.string.get(), b.string.get(), sa.data(), sb.data(), padded, &padded),
             "partial sums");

  json table = json::array();
  json first_exceeds = json::array();
  json second_exceeds = json::array();
  for (std::size_t i = 0; i < padded; ++i) {
    table.push_back({{"prefix", i + 1}, {"first", sa[i]}, {"second", sb[i]}});
    if (sa[i] > sb[i] + flags.tol) first_exceeds.push_back({{"prefix", i + 1}, {"first", sa[i]}, {"second", sb[i]}});
    if (sb[i] > sa[i] + flags.tol) second_exceeds.push_back({{"prefix", i + 1}, {"first", sa[i]}, {"second", sb[i]}});
  }
  json out = {
      {"verdict", subent_verdict_string(verdict)},
      {"first", {{"label", a.label}, {"schmidt_string", cli::string_values(a.string.get())}}},
      {"second", {{"label", b.label}, {"schmidt_string", cli::string_values(b.string.get())}}},
      {"tol", flags.tol},
      {"partial_sums", table},
      {"first_exceeds", first_exceeds},
      {"second_exceeds", second_exceeds},
  };
  std::cout << subent_verdict_string(verdict) << '\n' << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_hydrogen(int n, const CommonFlags& flags) {
  cli::HydrogenHandle level;
  cli::check(subent_hydrogen_level(n, level.out()), "hydrogen level");
  std::size_t count = 0;
  cli::check(subent_hydrogen_size(level.get(), &count), "hydrogen level size");

  constexpr std::size_t kSpinStringLength = 4;
  std::vector<cli::ResultDocument> rows;
  std::vector<cli::StringHandle> strings;
  std::vector<std::string> labels;
  double max_dev = 0.0;
  json closed_forms = json::object();
  for (std::size_t i = 0; i < count; ++i) {
    const char* label = nullptr;
    int l = 0;
    subent_branch branch{};
    cli::check(subent_hydrogen_entry(level.get(), i, &label, &l, &branch, nullptr), "hydrogen entry");
    cli::ProjectorHandle p;
    cli::check(subent_preset_hydrogen(n, l, branch, p.out()), "hydrogen projector");
    auto row = cli::evaluate(p.get(), label, pipeline(flags));
    // Strings of the whole level share the spin-side length.
    row.schmidt_string.resize(std::max(row.schmidt_string.size(), kSpinStringLength), 0.0);

    cli::StringHandle closed;
    cli::check(subent_hydrogen_entry_string(level.get(), i, closed.out()), "closed-form string");
    const auto closed_values = cli::string_values(closed.get());
    for (std::size_t k = 0; k < closed_values.size(); ++k) {
      max_dev = std::max(max_dev, std::abs(closed_values[k] - row.schmidt_string[k]));
    }
    closed_forms[label] = closed_values;

    cli::StringHandle numeric;
    cli::check(subent_string_from_values(row.schmidt_string.size(), row.schmidt_string.data(),
                                         row.schmidt_string.size(), flags.zero_threshold, numeric.out()),
               "numeric string");
    strings.push_back(std::move(numeric));
    labels.push_back(label);
    rows.push_back(std::move(row));
  }

  cli::StringHandle limiting;
  cli::check(subent_limiting_string(limiting.out()), "limiting string");
  labels.emplace_back("S_0");
  std::vector<subent_string> raw;
  for (const auto& s : strings) raw.push_back(s.get());
  raw.push_back(limiting.get());
  std::vector<const char*> label_ptrs;
  for (const auto& l : labels) label_ptrs.push_back(l.c_str());

  cli::ChainHandle chain;
  cli::check(subent_chain_sort(raw.size(), label_ptrs.data(), raw.data(), flags.tol, chain.out()), "chain sort");
  int total = 0;
  cli::check(subent_chain_is_total(chain.get(), &total), "chain");
  std::size_t chain_size = 0, ties = 0;
  cli::check(subent_chain_size(chain.get(), &chain_size), "chain");
  cli::check(subent_chain_tie_count(chain.get(), &ties), "chain");
  std::vector<std::string> order, expected;
  for (std::size_t i = 0; i < chain_size; ++i) {
    const char* l = nullptr;
    cli::check(subent_chain_label(chain.get(), i, &l), "chain label");
    order.emplace_back(l);
  }
  for (std::size_t i = 0; i < count + 1; ++i) {
    const char* l = nullptr;
    cli::check(subent_hydrogen_expected_label(level.get(), i, &l), "expected chain");
    expected.emplace_back(l);
  }
  const bool verified = total != 0 && ties == 0 && order == expected && max_dev <= flags.tol;

  if (flags.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr = cli::to_json(r);
      jr["closed_form"] = closed_forms[r.label];
      jrows.push_back(jr);
    }
    json out = {
        {"n", n},
        {"rows", jrows},
        {"limiting", {{"label", "S_0"}, {"schmidt_string", cli::string_values(limiting.get())}}},
        {"order_least_to_most_entangled", order},
        {"expected_order", expected},
        {"strict", total != 0 && ties == 0},
        {"max_closed_form_deviation", max_dev},
        {"verified", verified},
    };
    std::cout << out.dump(2) << '\n';
  } else {
    emit(rows, flags.format, kSpinStringLength);
    if (flags.format == "table") {
      std::string chain_text;
      for (std::size_t i = 0; i < order.size(); ++i) chain_text += (i ? " > " : "") + order[i];
      std::cout << fmt::format("\nleast to most entangled (each majorizes the next): {}\n", chain_text);
      std::cout << fmt::format("max deviation from closed form: {:.3g}\nverified: {}\n", max_dev,
                               verified ? "yes" : "no");
    }
  }
  return verified ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& family, int max_n, int max_two_j, int max_hydrogen_n, const CommonFlags& flags) {
  subent_verify_options options{};
  subent_verify_options_default(&options);
  if (max_n > 0) {
    options.max_n = max_n;
    if (max_hydrogen_n <= 0) options.max_hydrogen_n = max_n;
  }
  if (max_two_j > 0) options.max_two_j = max_two_j;
  if (max_hydrogen_n > 0) options.max_hydrogen_n = max_hydrogen_n;
  options.string_tol = flags.tol;
  options.zero_threshold = flags.zero_threshold;

  cli::VerifyHandle result;
  cli::check(subent_verify(family.c_str(), &options, result.out()), "verify");
  std::size_t count = 0;
  cli::check(subent_verify_size(result.get(), &count), "verify");
  bool all_passed = true;
  std::cout << fmt::format("{:<10} {:>6} {:>6} {:>14} {:>14} {:>14}\n", "family", "status", "cases", "max_string_dev",
                           "max_measure_dev", "max_aux_dev");
  for (std::size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    const char* failure = nullptr;
    int passed = 0, cases = 0;
    double ds = 0, dm = 0, dr = 0;
    cli::check(subent_verify_entry(result.get(), i, &name, &passed, &cases, &ds, &dm, &dr, &failure), "verify");
    std::cout << fmt::format("{:<10} {:>6} {:>6} {:>14.3e} {:>14.3e} {:>14.3e}\n", name, passed ? "PASS" : "FAIL",
                             cases, ds, dm, dr);
    if (!passed) {
      std::cout << fmt::format("  failure: {}\n", failure);
      all_passed = false;
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int exit_for(subent_status status) {
  return status == SUBENT_ERR_NUMERICAL || status == SUBENT_ERR_NOT_CONVERGED ? kExitNumerical : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator-Schmidt entanglement of subspaces of bipartite Hilbert spaces"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--tol", flags.tol, "Majorization partial-sum tolerance")->capture_default_str();
    sub->add_option("--zero-threshold", flags.zero_threshold, "Schmidt coefficients below this are zero")
        ->capture_default_str();
    if (with_format) {
      sub->add_option("--format", flags.format, "Output format")
          ->check(CLI::IsMember({"json", "csv", "table"}))
          ->capture_default_str();
    }
  };

  std::string input;
  cli::PresetSpec preset;
  std::string branch = "plus";
  auto* schmidt = app.add_subcommand("schmidt", "Schmidt string and measures of one subspace");
  schmidt->add_option("input", input, "Subspace document (JSON)");
  auto* preset_opt = schmidt->add_option("--preset", preset.name, "Catalog preset")
                         ->check(CLI::IsMember({"antisym", "sym", "spin", "hydrogen"}));
  schmidt->add_option("--n", preset.n, "n for antisym/sym, principal quantum number for hydrogen");
  schmidt->add_option("--two-j", preset.two_j, "2j for the spin preset");
  schmidt->add_option("--l", preset.l, "orbital quantum number for the hydrogen preset");
  schmidt->add_option("--branch", branch, "plus (j+1/2) or minus (j-1/2)")->check(CLI::IsMember({"plus", "minus"}));
  schmidt->add_flag("--no-orthonormalize", flags.no_orthonormalize, "Require the basis to be orthonormal already");
  schmidt->add_option("--drop-tol", flags.drop_tol, "Gram-Schmidt drop tolerance")->capture_default_str();
  add_common(schmidt, true);

  std::string a_arg, b_arg;
  auto* compare = app.add_subcommand("compare", "Majorization verdict of A relative to B");
  compare->add_option("a", a_arg, "First subspace: JSON file or preset:NAME[:key=value...]")->required();
  compare->add_option("b", b_arg, "Second subspace")->required();
  compare->add_flag("--no-orthonormalize", flags.no_orthonormalize, "Require orthonormal bases");
  add_common(compare, false);

  int hydrogen_n = 1;
  auto* hydrogen = app.add_subcommand("hydrogen", "Spin-orbit subspaces of a hydrogen level, ordered by entanglement");
  hydrogen->add_option("--n", hydrogen_n, "Principal quantum number")->required()->check(CLI::PositiveNumber);
  add_common(hydrogen, true);

  std::string family = "all";
  int max_n = 0, max_two_j = 0, max_hydrogen_n = 0;
  auto* verify = app.add_subcommand("verify", "Numerical pipeline against closed forms");
  verify->add_option("--family", family)->check(CLI::IsMember({"all", "antisym", "sym", "spin", "hydrogen"}))
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "Largest n (antisym/sym; hydrogen unless --max-hydrogen-n)");
  verify->add_option("--max-two-j", max_two_j, "Largest 2j for spin coupling");
  verify->add_option("--max-hydrogen-n", max_hydrogen_n, "Largest hydrogen principal quantum number");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*schmidt) {
      preset.branch = branch == "plus" ? SUBENT_BRANCH_PLUS : SUBENT_BRANCH_MINUS;
      return cmd_schmidt(input, preset, preset_opt->count() > 0, flags);
    }
    if (*compare) return cmd_compare(a_arg, b_arg, flags);
    if (*hydrogen) return cmd_hydrogen(hydrogen_n, flags);
    if (*verify) return cmd_verify(family, max_n, max_two_j, max_hydrogen_n, flags);
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const cli::LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.status());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
