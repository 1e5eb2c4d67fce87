#include "sympblob/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace sympblob {

using nlohmann::json;

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Pi& pi) {
  return {{"delta", to_json(pi.delta)},     {"delta_l", to_json(pi.delta_l)},
          {"delta_r", to_json(pi.delta_r)}, {"kappa_l", to_json(pi.kappa_l)},
          {"kappa_r", to_json(pi.kappa_r)}, {"kappa", to_json(pi.kappa)}};
}

json to_json(const Sigma& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"c", to_json(s.c)}, {"d", to_json(s.d)},
          {"x", to_json(s.x)}, {"y", to_json(s.y)}, {"z", to_json(s.z)}, {"w", to_json(s.w)}};
}

json to_json(const ResidualReport& r) {
  return {{"c1", r.c1}, {"c2", r.c2},   {"c3", r.c3},   {"c4", r.c4},
          {"c5", r.c5}, {"c6a", r.c6a}, {"c6b", r.c6b}, {"max", r.max_residual}};
}

namespace {

json residual_condition_labels() {
  return {{"c1", "corlcon1"}, {"c2", "corlcon2"},   {"c3", "corlcon3"},  {"c4", "corlcon4"},
          {"c5", "corlcon5"}, {"c6a", "corlcon6a"}, {"c6b", "corlcon6b"}};
}

json relation_check_to_json(const RelationCheck& check) {
  json jc = {{"id", check.id},
             {"family", check.family},
             {"rhs_scalar", theta_coord_name(check.rhs_scalar)},
             {"pass", check.pass}};
  if (check.rhs_scalar != ThetaCoord::One)
    jc["theta_condition"] = theta_condition_label(check.rhs_scalar);
  if (check.witness) {
    jc["witness"] = {{"word", check.witness->word},
                     {"lhs_image", check.witness->lhs_image},
                     {"rhs_image", check.witness->rhs_image}};
  }
  return jc;
}

}  // namespace

json to_json(const VerificationReport& report, const std::string& theta_mode) {
  json checks = json::array();
  for (const auto& check : report.checks) checks.push_back(relation_check_to_json(check));
  return {{"command", "verify"},     {"n", report.n},
          {"theta", theta_mode},     {"relations", std::move(checks)},
          {"all_pass", report.all_pass}, {"wall_seconds", report.wall_seconds}};
}

json to_json(const LemmaReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    json jc = {{"name", check.name}, {"pass", check.pass}};
    if (!check.detail.empty()) jc["detail"] = check.detail;
    checks.push_back(std::move(jc));
  }
  return {{"command", "lemmas"},  {"n", report.n},
          {"trials", report.trials}, {"seed", report.seed},
          {"checks", std::move(checks)}, {"all_pass", report.all_pass}};
}

json to_json(const PerturbationReport& report) {
  json entries = json::array();
  for (const auto& entry : report.entries) {
    entries.push_back({{"coordinate", theta_coord_name(entry.coord)},
                       {"theta_condition", theta_condition_label(entry.coord)},
                       {"expected_failures", entry.expected_failures},
                       {"observed_failures", entry.observed_failures},
                       {"pass", entry.pass}});
  }
  return {{"command", "perturbation"},
          {"n", report.n},
          {"entries", std::move(entries)},
          {"all_pass", report.all_pass}};
}

json to_json(const SolveResult& result, const Pi& pi) {
  return {{"pi", to_json(pi)},
          {"sigma", to_json(result.sigma)},
          {"residuals", to_json(result.residuals)},
          {"conditions", residual_condition_labels()},
          {"x0_used", to_json(result.x0_used)},
          {"retries", result.retries_used},
          {"accepted", result.accepted}};
}

json to_json(const NumericVerifyReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks)
    checks.push_back({{"id", check.id},
                      {"family", check.family},
                      {"residual", check.residual},
                      {"pass", check.pass}});
  return {{"command", "numeric_verify"},
          {"n", report.n},
          {"tol", report.tol},
          {"relations", std::move(checks)},
          {"max_residual", report.max_residual},
          {"all_pass", report.all_pass}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
    const double re = j[0].get<double>();
    const double im = j.size() == 2 ? j[1].get<double>() : 0.0;
    return Complex(re, im);
  }
  throw SchemaError("expected a number or an [re, im] pair");
}

SigmaFile parse_sigma_file(const json& j) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const json& js = j.contains("sigma") ? j.at("sigma") : j;
  if (!js.is_object()) throw SchemaError("\"sigma\" must be an object");
  SigmaFile file;
  const auto coord = [&](const char* key) {
    if (!js.contains(key)) throw SchemaError(std::string("sigma is missing key \"") + key + "\"");
    return complex_from_json(js.at(key));
  };
  file.sigma = Sigma{coord("a"), coord("b"), coord("c"), coord("d"),
                     coord("x"), coord("y"), coord("z"), coord("w")};
  if (j.contains("pi")) {
    const json& jp = j.at("pi");
    const auto pc = [&](const char* key) {
      if (!jp.contains(key)) throw SchemaError(std::string("pi is missing key \"") + key + "\"");
      return complex_from_json(jp.at(key));
    };
    file.pi = Pi{pc("delta"), pc("delta_l"), pc("delta_r"), pc("kappa_l"), pc("kappa_r"),
                 pc("kappa")};
  }
  return file;
}

void write_numeric_triplets(std::ostream& out, const NumericOperator& op) {
  char buffer[96];
  for (const auto& col : op.columns())
    for (const auto& e : col.entries) {
      std::snprintf(buffer, sizeof buffer, "%u %u %.17g,%.17g\n", e.word, col.word,
                    e.value.real(), e.value.imag());
      out << buffer;
    }
}

namespace {

NumericOperator from_triplet_list(int n,
                                  std::vector<std::tuple<WordIndex, WordIndex, Complex>> trips) {
  std::sort(trips.begin(), trips.end(), [](const auto& s, const auto& t) {
    return std::tie(std::get<1>(s), std::get<0>(s)) < std::tie(std::get<1>(t), std::get<0>(t));
  });
  std::vector<NumericOperator::Column> cols;
  for (const auto& [row, col, value] : trips) {
    if (cols.empty() || cols.back().word != col) cols.push_back({col, {}});
    cols.back().entries.push_back({row, value});
  }
  return NumericOperator::from_columns(n, std::move(cols));
}

}  // namespace

NumericOperator read_numeric_triplets(std::istream& in, int n) {
  std::vector<std::tuple<WordIndex, WordIndex, Complex>> trips;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    WordIndex row = 0, col = 0;
    std::string value;
    if (!(fields >> row >> col >> value)) throw SchemaError("bad triplet line: " + line);
    const auto comma = value.find(',');
    if (comma == std::string::npos) throw SchemaError("bad complex value: " + value);
    trips.emplace_back(row, col,
                       Complex(std::stod(value.substr(0, comma)), std::stod(value.substr(comma + 1))));
  }
  return from_triplet_list(n, std::move(trips));
}

json numeric_operator_to_json(const NumericOperator& op) {
  json entries = json::array();
  for (const auto& col : op.columns())
    for (const auto& e : col.entries)
      entries.push_back(json::array({e.word, col.word, to_json(e.value)}));
  return {{"n", op.n()}, {"entries", std::move(entries)}};
}

NumericOperator numeric_operator_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::tuple<WordIndex, WordIndex, Complex>> trips;
  for (const auto& entry : j.at("entries"))
    trips.emplace_back(entry[0].get<WordIndex>(), entry[1].get<WordIndex>(),
                       complex_from_json(entry[2]));
  return from_triplet_list(n, std::move(trips));
}

}  // namespace sympblob
