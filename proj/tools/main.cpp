// Command line surface: symbolic relation verification, randomized operator
// identity suites, numeric parameter solving, and generator matrix export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympblob/json_io.hpp"

namespace {

using namespace sympblob;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a complex literal re or re,im, got '" + text + "'");
  }
}

std::string format_complex(Complex z) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g%+.12gi", z.real(), z.imag());
  return buffer;
}

struct VerifyOptions {
  int n = 1;
  bool json_output = false;
  std::string theta_mode = "default";
};

int run_verify(const VerifyOptions& opt) {
  require_valid_n(opt.n);
  ThetaAssignment theta = theta_target(opt.n);
  if (opt.theta_mode != "default") {
    if (!opt.theta_mode.starts_with("perturb:"))
      throw CLI::ValidationError("--theta must be 'default' or 'perturb:<coordinate>'");
    const std::string coord_name = opt.theta_mode.substr(8);
    const auto coord = theta_coord_from_name(coord_name);
    if (!coord) throw CLI::ValidationError("unknown coordinate '" + coord_name + "'");
    LaurentPoly* target = nullptr;
    switch (*coord) {
      case ThetaCoord::Delta: target = &theta.delta; break;
      case ThetaCoord::DeltaL: target = &theta.delta_l; break;
      case ThetaCoord::DeltaR: target = &theta.delta_r; break;
      case ThetaCoord::KappaL: target = &theta.kappa_l; break;
      case ThetaCoord::KappaR: target = &theta.kappa_r; break;
      case ThetaCoord::Kappa: target = &theta.kappa; break;
      case ThetaCoord::One: break;
    }
    *target += 1;
  }

  const VerificationReport report = verify_all(opt.n, theta);
  if (opt.json_output) {
    std::cout << to_json(report, opt.theta_mode).dump(2) << '\n';
  } else {
    for (const auto& check : report.checks) {
      std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.id;
      if (check.rhs_scalar != ThetaCoord::One)
        std::cout << "  (scalar " << theta_coord_name(check.rhs_scalar) << ", "
                  << theta_condition_label(check.rhs_scalar) << ")";
      if (check.witness)
        std::cout << "\n      witness word " << check.witness->word << ": "
                  << check.witness->lhs_image << "  !=  " << check.witness->rhs_image;
      std::cout << '\n';
    }
    std::cout << (report.all_pass ? "all relations hold" : "verification FAILED") << " (n="
              << report.n << ", " << report.checks.size() << " instances, "
              << report.wall_seconds << "s)\n";
  }
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

struct LemmaOptions {
  int n = 1;
  int trials = 20;
  std::uint64_t seed = 0;
  bool json_output = false;
};

int run_lemmas(const LemmaOptions& opt) {
  require_valid_n(opt.n);
  const LemmaReport report = run_lemma_suites(opt.n, opt.trials, opt.seed);
  if (opt.json_output) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& check : report.checks) {
      std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.name;
      if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
      std::cout << '\n';
    }
    std::cout << (report.all_pass ? "all identity suites hold" : "identity suites FAILED")
              << " (n=" << report.n << ", trials=" << report.trials << ", seed=" << report.seed
              << ")\n";
  }
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

struct SolveOptions {
  std::string delta, delta_l, delta_r, kappa_l, kappa_r, kappa;
  std::string x0;
  std::uint64_t seed = 0;
  int retries = 5;
  bool json_output = false;
};

int run_solve(const SolveOptions& opt) {
  const Pi pi{parse_complex(opt.delta),   parse_complex(opt.delta_l),
              parse_complex(opt.delta_r), parse_complex(opt.kappa_l),
              parse_complex(opt.kappa_r), parse_complex(opt.kappa)};
  SolverConfig cfg;
  cfg.seed = opt.seed;
  cfg.retries = opt.retries;
  if (!opt.x0.empty()) cfg.x0_seed = parse_complex(opt.x0);

  const SolveResult result = solve_sigma(pi, cfg);
  if (opt.json_output) {
    std::cout << to_json(result, pi).dump(2) << '\n';
  } else {
    std::cout << "sigma:\n";
    const auto& s = result.sigma;
    const char* names = "abcdxyzw";
    const Complex values[] = {s.a, s.b, s.c, s.d, s.x, s.y, s.z, s.w};
    for (int i = 0; i < 8; ++i)
      std::cout << "  " << names[i] << " = " << format_complex(values[i]) << '\n';
    std::cout << "max residual " << result.residuals.max_residual << " over conditions"
              << " (x0 = " << format_complex(result.x0_used) << ", retries "
              << result.retries_used << ")\n";
    if (!result.accepted) std::cout << "no solution met the acceptance tolerance\n";
  }
  return result.accepted ? kExitOk : kExitCheckFailed;
}

struct MatricesOptions {
  int n = 1;
  std::string sigma_file;
  std::string out_dir;
  std::string format = "triplets";
  double tol = 1e-6;
};

int run_matrices(const MatricesOptions& opt) {
  require_valid_n(opt.n);
  std::ifstream in(opt.sigma_file);
  if (!in) throw SchemaError("cannot open sigma file '" + opt.sigma_file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("sigma file is not valid JSON: ") + e.what());
  }
  const SigmaFile file = parse_sigma_file(j);

  Pi pi;
  if (file.pi) {
    pi = *file.pi;
  } else {
    const ForwardValues f = forward_pi(file.sigma);
    pi = Pi{f.delta,   f.delta_l, f.delta_r,
            f.kappa_l, f.kappa_r, opt.n % 2 == 1 ? f.kappa_odd : f.kappa_even};
  }

  std::filesystem::create_directories(opt.out_dir);
  const auto matrices = numeric_generator_matrices(opt.n, file.sigma);

  json manifest;
  manifest["n"] = opt.n;
  manifest["format"] = opt.format;
  manifest["sigma"] = to_json(file.sigma);
  manifest["generators"] = json::array();
  for (const auto& [gen, op] : matrices) {
    const std::string name = gen.str();
    const std::string filename = opt.format == "json" ? name + ".json" : name;
    const std::filesystem::path path = std::filesystem::path(opt.out_dir) / filename;
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write '" + path.string() + "'");
    if (opt.format == "json") {
      out << numeric_operator_to_json(op).dump(2) << '\n';
    } else {
      write_numeric_triplets(out, op);
    }
    manifest["generators"].push_back({{"name", name},
                                      {"file", filename},
                                      {"nonzero_columns", op.column_count()}});
  }

  const NumericVerifyReport report = numeric_verify(opt.n, file.sigma, pi, opt.tol);
  {
    std::ofstream out(std::filesystem::path(opt.out_dir) / "verify_report.json");
    out << to_json(report).dump(2) << '\n';
  }
  manifest["verify_report"] = "verify_report.json";
  manifest["verify_all_pass"] = report.all_pass;
  {
    std::ofstream out(std::filesystem::path(opt.out_dir) / "manifest.json");
    out << manifest.dump(2) << '\n';
  }

  std::cout << "wrote " << matrices.size() << " matrices to " << opt.out_dir
            << " (numeric verification " << (report.all_pass ? "passed" : "FAILED")
            << ", max residual " << report.max_residual << ")\n";
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor-space representations of the symplectic blob algebra"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check all defining relations symbolically over the Laurent ring");
  verify->add_option("--n", verify_opt.n, "Chain half-width n")->required();
  verify->add_flag("--json", verify_opt.json_output, "Emit a JSON report");
  verify->add_option("--theta", verify_opt.theta_mode,
                     "Scalar assignment: default, or perturb:<D|D_L|D_R|K_L|K_R|K>");

  LemmaOptions lemma_opt;
  CLI::App* lemmas = app.add_subcommand(
      "lemmas", "Run the randomized operator identity suites");
  lemmas->add_option("--n", lemma_opt.n, "Chain half-width n")->required();
  lemmas->add_option("--trials", lemma_opt.trials, "Random draws per suite")
      ->check(CLI::PositiveNumber);
  lemmas->add_option("--seed", lemma_opt.seed, "RNG seed");
  lemmas->add_flag("--json", lemma_opt.json_output, "Emit a JSON report");

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Find ring-variable values realizing the six relation scalars");
  solve->add_option("--delta", solve_opt.delta)->required();
  solve->add_option("--delta-l", solve_opt.delta_l)->required();
  solve->add_option("--delta-r", solve_opt.delta_r)->required();
  solve->add_option("--kappa-l", solve_opt.kappa_l)->required();
  solve->add_option("--kappa-r", solve_opt.kappa_r)->required();
  solve->add_option("--kappa", solve_opt.kappa)->required();
  solve->add_option("--x0", solve_opt.x0, "Starting value for x0 as re[,im]");
  solve->add_option("--seed", solve_opt.seed, "RNG seed for retries");
  solve->add_option("--retries", solve_opt.retries, "Retry budget")->check(CLI::NonNegativeNumber);
  solve->add_flag("--json", solve_opt.json_output, "Emit the sigma/residual JSON");

  MatricesOptions matrices_opt;
  CLI::App* matrices = app.add_subcommand(
      "matrices", "Export numeric generator matrices for a sigma file");
  matrices->add_option("--n", matrices_opt.n, "Chain half-width n")->required();
  matrices->add_option("--sigma-file", matrices_opt.sigma_file, "JSON file with a sigma object")
      ->required();
  matrices->add_option("--out", matrices_opt.out_dir, "Output directory")->required();
  matrices->add_option("--format", matrices_opt.format, "triplets or json")
      ->check(CLI::IsMember({"triplets", "json"}));
  matrices->add_option("--tol", matrices_opt.tol, "Numeric verification tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(verify_opt);
    if (lemmas->parsed()) return run_lemmas(lemma_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (matrices->parsed()) return run_matrices(matrices_opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  } catch (const BadN& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZeroCoordinate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
