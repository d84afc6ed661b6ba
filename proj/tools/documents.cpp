#include "documents.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace subent::cli {

using nlohmann::json;

void check(subent_status status, const std::string& context) {
  if (status != SUBENT_OK) {
    throw LibraryError(status, fmt::format("{}: {} ({})", context, subent_status_string(status), subent_last_error()));
  }
}

namespace {

std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(fmt::format("missing field '{}'", key));
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(fmt::format("field '{}' must be a positive integer", key));
  }
  return v.get<std::size_t>();
}

ComplexPair parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError(fmt::format("{}: complex entries must be [re, im] pairs", where));
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<ComplexPair> parse_complex_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(fmt::format("{}: expected a list", where));
  std::vector<ComplexPair> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_complex(v[i], fmt::format("{}[{}]", where, i)));
  return out;
}

std::vector<double> flatten(const std::vector<ComplexPair>& pairs) {
  std::vector<double> out;
  out.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    out.push_back(p[0]);
    out.push_back(p[1]);
  }
  return out;
}

std::string fmt12(double v) { return fmt::format("{:.12g}", v); }
std::string fmt17(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

SubspaceDocument parse_subspace_document(const json& j) {
  if (!j.is_object()) throw InputError("subspace document must be a JSON object");
  SubspaceDocument doc;
  doc.d1 = positive_size(j, "d1");
  doc.d2 = positive_size(j, "d2");
  const std::size_t n = doc.d1 * doc.d2;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError("field 'label' must be text");
    doc.label = j["label"].get<std::string>();
  }
  const bool has_basis = j.contains("basis");
  const bool has_projector = j.contains("projector");
  if (has_basis == has_projector) throw InputError("exactly one of 'basis' or 'projector' must be present");

  if (has_basis) {
    const json& b = j["basis"];
    if (!b.is_array() || b.empty()) throw InputError("'basis' must be a non-empty list of vectors");
    std::vector<std::vector<ComplexPair>> vectors;
    for (std::size_t a = 0; a < b.size(); ++a) {
      auto v = parse_complex_list(b[a], fmt::format("basis[{}]", a));
      if (v.size() != n) {
        throw InputError(fmt::format("basis[{}] has {} entries, expected d1*d2 = {}", a, v.size(), n));
      }
      vectors.push_back(std::move(v));
    }
    doc.basis = std::move(vectors);
  } else {
    const json& p = j["projector"];
    if (!p.is_array()) throw InputError("'projector' must be a matrix");
    std::vector<ComplexPair> entries;
    const bool nested = !p.empty() && p[0].is_array() && !p[0].empty() && p[0][0].is_array();
    if (nested) {
      if (p.size() != n) throw InputError(fmt::format("'projector' must have {} rows", n));
      for (std::size_t r = 0; r < p.size(); ++r) {
        auto row = parse_complex_list(p[r], fmt::format("projector[{}]", r));
        if (row.size() != n) throw InputError(fmt::format("projector row {} must have {} entries", r, n));
        entries.insert(entries.end(), row.begin(), row.end());
      }
    } else {
      entries = parse_complex_list(p, "projector");
      if (entries.size() != n * n) throw InputError(fmt::format("'projector' must hold {} entries", n * n));
    }
    doc.projector = std::move(entries);
  }
  return doc;
}

SubspaceDocument read_subspace_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path));
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
  }
  auto doc = parse_subspace_document(j);
  if (doc.label.empty()) doc.label = path;
  return doc;
}

bool ResultDocument::operator==(const ResultDocument& o) const {
  return label == o.label && d1 == o.d1 && d2 == o.d2 && dim == o.dim && schmidt_string == o.schmidt_string &&
         k == o.k && measures.e_d == o.measures.e_d && measures.e_i == o.measures.e_i &&
         measures.e_t == o.measures.e_t && defects == o.defects && rank_dropped == o.rank_dropped;
}

json to_json(const ResultDocument& r) {
  return json{
      {"label", r.label},
      {"d1", r.d1},
      {"d2", r.d2},
      {"dim", r.dim},
      {"schmidt_string", r.schmidt_string},
      {"k", r.k},
      {"measures", {{"e_d", r.measures.e_d}, {"e_i", r.measures.e_i}, {"e_t", r.measures.e_t}}},
      {"defects",
       {{"hermiticity", r.defects.hermiticity},
        {"idempotency", r.defects.idempotency},
        {"trace", r.defects.trace},
        {"passed", r.defects.passed}}},
      {"rank_dropped", r.rank_dropped},
  };
}

ResultDocument result_from_json(const json& j) {
  try {
    ResultDocument r;
    r.label = j.at("label").get<std::string>();
    r.d1 = j.at("d1").get<std::size_t>();
    r.d2 = j.at("d2").get<std::size_t>();
    r.dim = j.at("dim").get<std::size_t>();
    r.schmidt_string = j.at("schmidt_string").get<std::vector<double>>();
    r.k = j.at("k").get<std::size_t>();
    const json& m = j.at("measures");
    r.measures = {m.at("e_d").get<double>(), m.at("e_i").get<double>(), m.at("e_t").get<double>()};
    const json& d = j.at("defects");
    r.defects = {d.at("hermiticity").get<double>(), d.at("idempotency").get<double>(), d.at("trace").get<double>(),
                 d.at("passed").get<bool>()};
    r.rank_dropped = j.value("rank_dropped", std::size_t{0});
    return r;
  } catch (const json::exception& e) {
    throw InputError(fmt::format("malformed result document: {}", e.what()));
  }
}

std::string csv_header(std::size_t string_length) {
  std::string h = "label,d1,d2,dim";
  for (std::size_t i = 1; i <= string_length; ++i) h += fmt::format(",p{}", i);
  return h + ",e_d,e_i,e_t";
}

std::string csv_row(const ResultDocument& r, std::size_t string_length) {
  std::string row = fmt::format("{},{},{},{}", r.label, r.d1, r.d2, r.dim);
  for (std::size_t i = 0; i < string_length; ++i) {
    row += "," + fmt17(i < r.schmidt_string.size() ? r.schmidt_string[i] : 0.0);
  }
  row += fmt::format(",{},{},{}", fmt17(r.measures.e_d), fmt17(r.measures.e_i), fmt17(r.measures.e_t));
  return row;
}

std::string table(const std::vector<ResultDocument>& rows) {
  std::ostringstream os;
  os << fmt::format("{:<14} {:>4} {:>4} {:>5} {:>16} {:>16} {:>16}  {}\n", "label", "d1", "d2", "dim", "E_D", "E_I",
                    "E_T", "schmidt string");
  for (const auto& r : rows) {
    std::string s;
    for (std::size_t i = 0; i < r.schmidt_string.size(); ++i) {
      if (i) s += ", ";
      s += fmt12(r.schmidt_string[i]);
    }
    os << fmt::format("{:<14} {:>4} {:>4} {:>5} {:>16} {:>16} {:>16}  ({})\n", r.label, r.d1, r.d2, r.dim,
                      fmt12(r.measures.e_d), fmt12(r.measures.e_i), fmt12(r.measures.e_t), s);
  }
  return os.str();
}

ProjectorHandle build_projector(const SubspaceDocument& doc, const PipelineOptions& options, std::size_t* dropped) {
  ProjectorHandle p;
  if (doc.basis) {
    std::vector<double> data;
    for (const auto& v : *doc.basis) {
      const auto flat = flatten(v);
      data.insert(data.end(), flat.begin(), flat.end());
    }
    check(subent_projector_from_basis(doc.d1, doc.d2, doc.basis->size(), data.data(), options.orthonormalize ? 1 : 0,
                                      options.drop_tol, dropped, p.out()),
          "building projector from basis");
  } else {
    const auto data = flatten(*doc.projector);
    if (dropped) *dropped = 0;
    check(subent_projector_from_matrix(doc.d1, doc.d2, data.data(), p.out()), "reading projector");
  }
  return p;
}

std::vector<double> string_values(subent_string s) {
  std::size_t len = 0;
  check(subent_string_length(s, &len, nullptr), "string length");
  std::vector<double> v(len);
  check(subent_string_values(s, v.data(), v.size()), "string values");
  return v;
}

ResultDocument evaluate(subent_projector p, const std::string& label, const PipelineOptions& options,
                        std::size_t dropped) {
  ResultDocument r;
  r.label = label;
  check(subent_projector_info(p, &r.d1, &r.d2, &r.dim), "projector info");
  subent_projector_report report{};
  check(subent_projector_report_get(p, &report), "projector report");
  r.defects = {report.hermiticity_defect, report.idempotency_defect, report.trace_defect, report.passed != 0};
  StringHandle s;
  check(subent_schmidt_string(p, options.zero_threshold, s.out()), "computing Schmidt string");
  r.schmidt_string = string_values(s.get());
  check(subent_string_length(s.get(), nullptr, &r.k), "string length");
  check(subent_string_measures(s.get(), &r.measures), "measures");
  r.rank_dropped = dropped;
  return r;
}

std::optional<PresetSpec> parse_preset_spec(const std::string& text) {
  const std::string prefix = "preset:";
  if (text.rfind(prefix, 0) != 0) return std::nullopt;
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(prefix.size()));
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw InputError(fmt::format("empty preset in '{}'", text));
  PresetSpec spec;
  spec.name = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw InputError(fmt::format("preset option '{}' must be key=value", parts[i]));
    const std::string key = parts[i].substr(0, eq);
    const std::string value = parts[i].substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoi(value);
      } else if (key == "two_j" || key == "two-j") {
        spec.two_j = std::stoi(value);
      } else if (key == "l") {
        spec.l = std::stoi(value);
      } else if (key == "branch") {
        if (value != "plus" && value != "minus") throw InputError("branch must be plus or minus");
        spec.branch = value == "plus" ? SUBENT_BRANCH_PLUS : SUBENT_BRANCH_MINUS;
      } else {
        throw InputError(fmt::format("unknown preset option '{}'", key));
      }
    } catch (const std::logic_error&) {
      throw InputError(fmt::format("preset option '{}' needs an integer value", key));
    }
  }
  return spec;
}

ProjectorHandle build_preset(const PresetSpec& spec) {
  ProjectorHandle p;
  if (spec.name == "antisym") {
    check(subent_preset_antisym(spec.n, p.out()), "antisym preset");
  } else if (spec.name == "sym") {
    check(subent_preset_sym(spec.n, p.out()), "sym preset");
  } else if (spec.name == "spin") {
    check(subent_preset_spin(spec.two_j, spec.branch, p.out()), "spin preset");
  } else if (spec.name == "hydrogen") {
    check(subent_preset_hydrogen(spec.n, spec.l, spec.branch, p.out()), "hydrogen preset");
  } else {
    throw InputError(fmt::format("unknown preset '{}' (antisym, sym, spin, hydrogen, limiting)", spec.name));
  }
  return p;
}

std::string preset_label(const PresetSpec& spec) {
  const char* branch = spec.branch == SUBENT_BRANCH_PLUS ? "plus" : "minus";
  if (spec.name == "antisym" || spec.name == "sym") return fmt::format("{}_n{}", spec.name, spec.n);
  if (spec.name == "spin") return fmt::format("spin_2j{}_{}", spec.two_j, branch);
  if (spec.name == "hydrogen") return fmt::format("hydrogen_n{}_l{}_{}", spec.n, spec.l, branch);
  return spec.name;
}

}  // namespace subent::cli
