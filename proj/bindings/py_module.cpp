// Python bindings for the main operations: symbolic relation verification,
// the randomized identity suites, parameter solving, and numeric generator
// matrices. Reports cross the boundary as plain dicts/lists mirroring the
// CLI's JSON layout.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "sympblob/json_io.hpp"

namespace py = pybind11;
using namespace sympblob;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

ThetaAssignment theta_for_mode(int n, const std::string& mode) {
  ThetaAssignment theta = theta_target(n);
  if (mode == "default") return theta;
  if (!mode.starts_with("perturb:")) throw py::value_error("theta must be 'default' or 'perturb:<coord>'");
  const auto coord = theta_coord_from_name(mode.substr(8));
  if (!coord) throw py::value_error("unknown coordinate in '" + mode + "'");
  switch (*coord) {
    case ThetaCoord::Delta: theta.delta += 1; break;
    case ThetaCoord::DeltaL: theta.delta_l += 1; break;
    case ThetaCoord::DeltaR: theta.delta_r += 1; break;
    case ThetaCoord::KappaL: theta.kappa_l += 1; break;
    case ThetaCoord::KappaR: theta.kappa_r += 1; break;
    case ThetaCoord::Kappa: theta.kappa += 1; break;
    case ThetaCoord::One: break;
  }
  return theta;
}

Sigma sigma_from_tuple(const std::array<Complex, 8>& values) {
  return Sigma{values[0], values[1], values[2], values[3],
               values[4], values[5], values[6], values[7]};
}

Pi pi_from_args(Complex delta, Complex delta_l, Complex delta_r, Complex kappa_l,
                Complex kappa_r, Complex kappa) {
  return Pi{delta, delta_l, delta_r, kappa_l, kappa_r, kappa};
}

}  // namespace

PYBIND11_MODULE(_sympblob, m) {
  m.doc() = "Exact tensor-space representations of the symplectic blob algebra";

  m.def("max_supported_n", &max_supported_n);

  m.def(
      "verify",
      [](int n, const std::string& theta) {
        return json_to_py(to_json(verify_all(n, theta_for_mode(n, theta)), theta));
      },
      py::arg("n"), py::arg("theta") = "default",
      "Check all defining relations symbolically; returns the report as a dict.");

  m.def(
      "lemmas",
      [](int n, int trials, std::uint64_t seed) {
        return json_to_py(to_json(run_lemma_suites(n, trials, seed)));
      },
      py::arg("n"), py::arg("trials") = 20, py::arg("seed") = 0,
      "Run the randomized operator identity suites.");

  m.def(
      "perturbation",
      [](int n) { return json_to_py(to_json(perturbation_suite(n))); }, py::arg("n"),
      "Shift each relation scalar by one and report which relations break.");

  m.def(
      "solve",
      [](Complex delta, Complex delta_l, Complex delta_r, Complex kappa_l, Complex kappa_r,
         Complex kappa, std::optional<Complex> x0, std::uint64_t seed, int retries) {
        const Pi pi = pi_from_args(delta, delta_l, delta_r, kappa_l, kappa_r, kappa);
        SolverConfig cfg;
        cfg.seed = seed;
        cfg.retries = retries;
        if (x0) cfg.x0_seed = *x0;
        return json_to_py(to_json(solve_sigma(pi, cfg), pi));
      },
      py::arg("delta"), py::arg("delta_l"), py::arg("delta_r"), py::arg("kappa_l"),
      py::arg("kappa_r"), py::arg("kappa"), py::arg("x0") = std::nullopt, py::arg("seed") = 0,
      py::arg("retries") = 5,
      "Find ring-variable values realizing the six relation scalars.");

  m.def(
      "forward_pi",
      [](const std::array<Complex, 8>& sigma) {
        const ForwardValues f = forward_pi(sigma_from_tuple(sigma));
        py::dict out;
        out["delta"] = f.delta;
        out["delta_l"] = f.delta_l;
        out["delta_r"] = f.delta_r;
        out["kappa_l"] = f.kappa_l;
        out["kappa_r"] = f.kappa_r;
        out["kappa_odd"] = f.kappa_odd;
        out["kappa_even"] = f.kappa_even;
        return out;
      },
      py::arg("sigma"),
      "Evaluate the six defining products (and both final-scalar forms) at an 8-tuple.");

  m.def(
      "numeric_verify",
      [](int n, const std::array<Complex, 8>& sigma, Complex delta, Complex delta_l,
         Complex delta_r, Complex kappa_l, Complex kappa_r, Complex kappa, double tol) {
        const Pi pi = pi_from_args(delta, delta_l, delta_r, kappa_l, kappa_r, kappa);
        return json_to_py(to_json(numeric_verify(n, sigma_from_tuple(sigma), pi, tol)));
      },
      py::arg("n"), py::arg("sigma"), py::arg("delta"), py::arg("delta_l"), py::arg("delta_r"),
      py::arg("kappa_l"), py::arg("kappa_r"), py::arg("kappa"), py::arg("tol") = 1e-6,
      "Check every relation numerically at sigma against the given scalars.");

  m.def(
      "generator_matrices",
      [](int n, const std::array<Complex, 8>& sigma) {
        py::dict out;
        for (const auto& [gen, op] : numeric_generator_matrices(n, sigma_from_tuple(sigma))) {
          py::list entries;
          for (const auto& col : op.columns())
            for (const auto& e : col.entries)
              entries.append(py::make_tuple(e.word, col.word, e.value));
          out[py::str(gen.str())] = entries;
        }
        return out;
      },
      py::arg("n"), py::arg("sigma"),
      "Numeric generator matrices as {name: [(row, col, value), ...]}.");

  m.def(
      "theta_target_strings",
      [](int n) {
        const ThetaAssignment t = theta_target(n);
        py::dict out;
        out["D"] = t.delta.str();
        out["D_L"] = t.delta_l.str();
        out["D_R"] = t.delta_r.str();
        out["K_L"] = t.kappa_l.str();
        out["K_R"] = t.kappa_r.str();
        out["K"] = t.kappa.str();
        return out;
      },
      py::arg("n"), "Rendered scalar targets for the six relation families.");

  py::register_exception<BadN>(m, "BadNError", PyExc_ValueError);
  py::register_exception<ZeroCoordinate>(m, "ZeroCoordinateError", PyExc_ValueError);
}
