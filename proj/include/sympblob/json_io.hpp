// JSON encodings of reports and parameter files, shared by the command line
// tool and the Python bindings. Complex numbers are [re, im] pairs.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "sympblob/specializer.hpp"

namespace sympblob {

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const Pi& pi);
nlohmann::json to_json(const Sigma& sigma);
nlohmann::json to_json(const ResidualReport& residuals);
nlohmann::json to_json(const VerificationReport& report, const std::string& theta_mode);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const PerturbationReport& report);
nlohmann::json to_json(const SolveResult& result, const Pi& pi);
nlohmann::json to_json(const NumericVerifyReport& report);

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Complex complex_from_json(const nlohmann::json& j);

// A sigma parameter file: {"sigma": {"a": [re, im], ...}} with an optional
// "pi" object in the solve-output layout. Solve output files load directly.
struct SigmaFile {
  Sigma sigma;
  std::optional<Pi> pi;
};
SigmaFile parse_sigma_file(const nlohmann::json& j);

// Numeric sparse matrices as triplet lines "row col re,im".
void write_numeric_triplets(std::ostream& out, const NumericOperator& op);
NumericOperator read_numeric_triplets(std::istream& in, int n);

nlohmann::json numeric_operator_to_json(const NumericOperator& op);
NumericOperator numeric_operator_from_json(const nlohmann::json& j);

}  // namespace sympblob
