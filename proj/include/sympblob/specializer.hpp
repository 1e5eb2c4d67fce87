// Numeric specialization: given a 6-tuple of complex relation scalars,
// construct an 8-tuple of nonzero ring-variable values realizing them through
// a cascade of quadratic solves and one even quartic, and evaluate the
// generator images as complex sparse matrices.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympblob/relations.hpp"

namespace sympblob {

struct DegenerateLeading : std::domain_error {
  using std::domain_error::domain_error;
};
struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The six relation scalars over C.
struct Pi {
  Complex delta, delta_l, delta_r, kappa_l, kappa_r, kappa;
};

// The eight ring-variable values; all coordinates must be nonzero.
struct Sigma {
  Complex a, b, c, d, x, y, z, w;

  static Sigma ones() { return {1, 1, 1, 1, 1, 1, 1, 1}; }
  ComplexPoint as_point() const { return {a, b, c, d, x, y, z, w}; }
};

// The cascade unknowns: e0 = abcd, f0 = ab/cd, g0 = ad/bc, p0 = zw, q0 = z/w.
struct IntermediateSolution {
  Complex x0, y0, e0, p0, q0, f0, g0, d0;
};

// Absolute defects of the seven scalar conditions at a candidate point.
struct ResidualReport {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6a = 0, c6b = 0;
  double max_residual = 0;
};

struct SolverConfig {
  Complex x0_seed{1.0, 0.0};
  int retries = 5;
  std::uint64_t seed = 0;
  double root_tol = 1e-12;
  double accept_tol = 1e-8;
};

// Both roots of A r^2 + B r + C, larger-magnitude root computed first and the
// other derived from the product C/A. Throws DegenerateLeading when A = 0.
std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c);

// All roots (with multiplicity) of the polynomial with ascending coefficients
// coeffs[0] + coeffs[1] z + ...; simultaneous-iteration method. Throws
// DegenerateLeading on a zero leading coefficient and RootFindingError when
// the residual contract cannot be met.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, double tol = 1e-10,
                                int max_iter = 500);

// The six defining products plus both forms of the last scalar.
struct ForwardValues {
  Complex delta, delta_l, delta_r, kappa_l, kappa_r, kappa_odd, kappa_even;
};
ForwardValues forward_pi(const Sigma& sigma);

ResidualReport residuals_against(const Pi& pi, const Sigma& sigma);

// Ascending coefficients of the quartic in S = d0^2 whose roots complete the
// cascade; derived from delta * d0^4 expanded in e0, f0, g0, d0.
std::array<Complex, 5> quartic_coefficients(Complex e0, Complex f0, Complex g0, Complex delta);

// Recovers delta from (e0, f0, g0, d0) through the same expansion; audits the
// quartic coefficients against the defining product.
Complex delta_from_quartic(Complex e0, Complex f0, Complex g0, Complex d0);

struct SolveResult {
  Sigma sigma;
  IntermediateSolution intermediate;
  ResidualReport residuals;
  Complex x0_used{};
  int retries_used = 0;
  bool accepted = false;
};

// Runs the cascade, retrying with fresh random nonzero x0 while the residual
// stays above the acceptance tolerance; returns the best candidate found.
SolveResult solve_sigma(const Pi& pi, const SolverConfig& cfg = {});

// ---------------------------------------------------------------------------
// Complex specializations of the sparse operators.

class NumericOperator {
 public:
  struct Entry {
    WordIndex word;
    Complex value;
  };
  struct Column {
    WordIndex word;
    std::vector<Entry> entries;
  };

  explicit NumericOperator(int n) : n_(n) { require_valid_n(n); }
  static NumericOperator from_columns(int n, std::vector<Column> columns);

  int n() const { return n_; }
  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<Entry>* column(WordIndex word) const;
  std::size_t column_count() const { return columns_.size(); }

 private:
  int n_;
  std::vector<Column> columns_;
};

NumericOperator eval_operator(const SparseOperator& op, const Sigma& sigma);
NumericOperator num_build_r(int n, int pos, Complex q);
NumericOperator num_compose(const NumericOperator& f, const NumericOperator& g);
NumericOperator num_scalar_mul(Complex c, const NumericOperator& f);
NumericOperator num_identity(int n);
// Largest entrywise difference, treating absent entries as zero.
double num_max_diff(const NumericOperator& f, const NumericOperator& g);

// Complex matrices of all generators (U1 ... U_{n-1}, e, f) at sigma.
std::vector<std::pair<Generator, NumericOperator>> numeric_generator_matrices(int n,
                                                                              const Sigma& sigma);

struct NumericRelationCheck {
  std::string id;
  std::string family;
  double residual = 0;
  bool pass = false;
};
struct NumericVerifyReport {
  int n = 0;
  double tol = 0;
  std::vector<NumericRelationCheck> checks;
  double max_residual = 0;
  bool all_pass = false;
};

// Checks every relation instance numerically at sigma against the scalars of
// pi, reporting the largest entry defect per relation.
NumericVerifyReport numeric_verify(int n, const Sigma& sigma, const Pi& pi, double tol);

}  // namespace sympblob
