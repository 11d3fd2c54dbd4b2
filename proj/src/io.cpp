#include "sumur/io.hpp"

#include <cmath>
#include <ostream>

#include <fmt/core.h>

#include "sumur/error.hpp"

namespace sumur {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::Parse, field + ": " + msg);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

cplx parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(field, "expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector parse_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array of [re, im] pairs");
  CVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_complex(j[i], fmt::format("{}[{}]", field, i)));
  return v;
}

ComplexMatrix parse_matrix(const json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array() || j.size() != dim) fail(field, fmt::format("expected {} rows", dim));
  std::vector<cplx> entries;
  for (std::size_t r = 0; r < dim; ++r) {
    const auto row_field = fmt::format("{}[{}]", field, r);
    if (!j[r].is_array() || j[r].size() != dim) fail(row_field, fmt::format("expected {} entries", dim));
    for (std::size_t c = 0; c < dim; ++c) {
      entries.push_back(parse_complex(j[r][c], fmt::format("{}[{}]", row_field, c)));
    }
  }
  try {
    return ComplexMatrix(dim, std::move(entries));
  } catch (const Error& e) {
    throw Error(e.kind(), field + ": " + e.what());
  }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
auto with_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), field + ": " + e.what());
  }
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

ObservableFile parse_observable_file(std::string_view text) {
  const json root = parse_text(text);
  const json& dim_j = require(root, "dim", "<root>");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) fail("dim", "expected a positive integer");
  ObservableFile out;
  out.dim = dim_j.get<std::size_t>();

  const json& mats = require(root, "matrices", "<root>");
  if (!mats.is_array()) fail("matrices", "expected an array of matrices");
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto field = fmt::format("matrices[{}]", i);
    auto m = parse_matrix(mats[i], out.dim, field);
    out.observables.push_back(with_field(field, [&] { return validate_observable(std::move(m)); }));
  }
  if (out.observables.size() < 2) fail("matrices", "need at least 2 observables");

  if (auto it = root.find("labels"); it != root.end()) {
    if (!it->is_array() || it->size() != out.observables.size()) {
      fail("labels", "expected one string per matrix");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail(fmt::format("labels[{}]", i), "expected a string");
      out.labels.push_back((*it)[i].get<std::string>());
    }
  }
  return out;
}

QuantumState parse_state_file(std::string_view text) {
  const json root = parse_text(text);
  const json& type = require(root, "type", "<root>");
  if (!type.is_string()) fail("type", "expected \"pure\" or \"density\"");
  const auto kind = type.get<std::string>();
  if (kind == "pure") {
    auto v = parse_vector(require(root, "vector", "<root>"), "vector");
    return with_field("vector", [&] { return validate_pure(std::move(v)); });
  }
  if (kind == "density") {
    const json& m = require(root, "matrix", "<root>");
    if (!m.is_array() || m.empty()) fail("matrix", "expected a non-empty square array");
    auto rho = parse_matrix(m, m.size(), "matrix");
    return with_field("matrix", [&] { return validate_density(std::move(rho)); });
  }
  fail("type", "expected \"pure\" or \"density\", got \"" + kind + "\"");
}

json observable_file_json(const ObservableFile& f) {
  json mats = json::array();
  for (const auto& a : f.observables) mats.push_back(matrix_json(a.matrix()));
  json out = {{"dim", f.dim}, {"matrices", std::move(mats)}};
  if (!f.labels.empty()) out["labels"] = f.labels;
  return out;
}

json state_file_json(const QuantumState& s) {
  if (s.is_pure()) {
    json v = json::array();
    for (const auto& z : s.vector()) v.push_back(complex_json(z));
    return {{"type", "pure"}, {"vector", std::move(v)}};
  }
  return {{"type", "density"}, {"matrix", matrix_json(s.density())}};
}

json report_json(const BoundReport& r, const std::vector<std::string>& labels) {
  json out;
  out["n"] = r.n;
  out["dim"] = r.dim;
  if (!labels.empty()) out["labels"] = labels;
  out["variances"] = r.variances;
  out["stddevs"] = r.stddevs;
  out["lhs_variance"] = r.lhs_variance;
  out["lhs_stddev"] = r.lhs_stddev;
  out["bounds"] = {
      {"cb1", optional_json(r.cb1)},
      {"tb1", r.tb1},
      {"cb3", optional_json(r.cb3)},
      {"tb2", r.tb2},
      {"pair_variance", optional_json(r.pair_variance)},
      {"pair_stddev", optional_json(r.pair_stddev)},
      {"robertson", optional_json(r.robertson)},
  };
  out["stddev_product"] = optional_json(r.stddev_product);
  out["gaps"] = {
      {"cb1", optional_json(r.gaps.cb1)},
      {"tb1", r.gaps.tb1},
      {"cb3", optional_json(r.gaps.cb3)},
      {"tb2", r.gaps.tb2},
      {"pair_variance", optional_json(r.gaps.pair_variance)},
      {"pair_stddev", optional_json(r.gaps.pair_stddev)},
      {"robertson", optional_json(r.gaps.robertson)},
  };
  const auto flag = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  out["ordering"] = {{"cb1_ge_tb1", flag(r.ordering.cb1_ge_tb1)}, {"cb3_ge_tb2", flag(r.ordering.cb3_ge_tb2)}};
  out["gaps_ok"] = r.gaps_ok;
  out["ordering_ok"] = r.ordering_ok;
  return out;
}

json summary_json(const VerifySummary& s, const VerifyConfig& cfg) {
  json props = json::object();
  for (const auto& [name, stats] : s.properties) {
    props[name] = {{"evaluated", stats.evaluated}, {"min_slack", stats.min_slack}};
  }
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"property", v.property},
                          {"trial", v.trial},
                          {"seed", v.seed},
                          {"instance", v.instance},
                          {"slack", v.slack}});
  }
  return {
      {"config",
       {{"trials", cfg.trials},
        {"seed", cfg.seed},
        {"dims", cfg.dims},
        {"n_obs", {cfg.n_lo, cfg.n_hi}},
        {"tolerance", cfg.tolerance},
        {"mixed_frac", cfg.mixed_frac},
        {"eigenstate_frac", cfg.eigenstate_frac}}},
      {"trials_run", s.trials_run},
      {"violation_count", s.violations.size()},
      {"properties", std::move(props)},
      {"violations", std::move(violations)},
  };
}

void write_sweep_csv(const SweepResult& r, std::ostream& out) {
  out << "theta,lhs,cb_bound,tb_bound\n";
  for (const auto& row : r.rows) {
    out << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", row.theta, row.lhs, row.cb_bound, row.tb_bound);
  }
}

std::string format_angle(double theta) { return fmt::format("{:.9f}", theta); }

}  // namespace sumur
