#include "sympblob/specializer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sympblob {

namespace {

constexpr double kTiny = 1e-12;

Complex bracket(Complex v) { return v + 1.0 / v; }

}  // namespace

std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  if (a == 0.0) throw DegenerateLeading("quadratic with zero leading coefficient");
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation in b + disc.
  const Complex sum = std::norm(b + disc) >= std::norm(b - disc) ? b + disc : b - disc;
  if (sum == 0.0) {
    const Complex r = std::sqrt(-c / a);
    return {r, -r};
  }
  const Complex q = -0.5 * sum;
  return {q / a, c / q};
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, double tol, int max_iter) {
  if (coeffs.empty() || coeffs.back() == 0.0)
    throw DegenerateLeading("leading coefficient must be nonzero");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) return {};

  std::vector<Complex> monic(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) monic[k] = coeffs[k] / coeffs.back();
  if (deg == 1) return {-monic[0]};

  const auto eval = [&](Complex z) {
    Complex value = monic[deg];
    for (int k = deg - 1; k >= 0; --k) value = value * z + monic[k];
    return value;
  };

  // Simultaneous iteration from the usual spiral of start points.
  std::vector<Complex> roots(deg);
  const Complex seed(0.4, 0.9);
  Complex power = 1.0;
  for (int k = 0; k < deg; ++k) {
    power *= seed;
    roots[k] = power;
  }

  double max_coeff = 0;
  for (const auto& ck : monic) max_coeff = std::max(max_coeff, std::abs(ck));
  const double residual_bound = tol * (1.0 + max_coeff);

  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0;
    for (int i = 0; i < deg; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) < 1e-280) {
        roots[i] += Complex(1e-6, 1e-6);  // split coincident iterates
        max_step = 1.0;
        continue;
      }
      const Complex step = eval(roots[i]) / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-15) break;
  }

  for (const auto& r : roots)
    if (std::abs(eval(r)) > residual_bound)
      throw RootFindingError("root refinement did not meet the residual bound");
  return roots;
}

ForwardValues forward_pi(const Sigma& s) {
  for (Complex v : {s.a, s.b, s.c, s.d, s.x, s.y, s.z, s.w})
    if (v == 0.0) throw ZeroCoordinate("all coordinates must be nonzero");
  ForwardValues f;
  f.delta = bracket(s.a) * bracket(s.b) * bracket(s.c) * bracket(s.d);
  f.delta_l = bracket(s.x) * bracket(s.y);
  f.delta_r = bracket(s.z) * bracket(s.w);
  f.kappa_l = bracket(s.a * s.b / s.x) * bracket(s.c * s.d / s.y);
  f.kappa_r = bracket(s.a * s.d / s.w) * bracket(s.b * s.c / s.z);
  f.kappa_odd = bracket(s.x * s.y / (s.z * s.w)) + 2.0;
  f.kappa_even = bracket(s.a * s.b * s.c * s.d / (s.x * s.y * s.z * s.w)) + 2.0;
  return f;
}

ResidualReport residuals_against(const Pi& pi, const Sigma& sigma) {
  const ForwardValues f = forward_pi(sigma);
  ResidualReport r;
  r.c1 = std::abs(pi.delta - f.delta);
  r.c2 = std::abs(pi.delta_l - f.delta_l);
  r.c3 = std::abs(pi.delta_r - f.delta_r);
  r.c4 = std::abs(pi.kappa_l - f.kappa_l);
  r.c5 = std::abs(pi.kappa_r - f.kappa_r);
  r.c6a = std::abs(pi.kappa - f.kappa_odd);
  r.c6b = std::abs(pi.kappa - f.kappa_even);
  r.max_residual = std::max({r.c1, r.c2, r.c3, r.c4, r.c5, r.c6a, r.c6b});
  return r;
}

std::array<Complex, 5> quartic_coefficients(Complex e0, Complex f0, Complex g0, Complex delta) {
  return {
      e0 * g0 / f0,
      e0 + g0 + 1.0 / f0 + e0 * g0 / f0,
      e0 + 1.0 / e0 + f0 + 1.0 / f0 + g0 + 1.0 / g0 - delta,
      f0 + 1.0 / e0 + 1.0 / g0 + f0 / (e0 * g0),
      f0 / (e0 * g0),
  };
}

Complex delta_from_quartic(Complex e0, Complex f0, Complex g0, Complex d0) {
  const Complex s = d0 * d0;
  const auto c = quartic_coefficients(e0, f0, g0, 0.0);
  // With the delta term removed, the quartic reads sum c_k S^k = delta * S^2.
  return (((c[4] * s + c[3]) * s + c[2]) * s + c[1]) * s / (s * s) + c[0] / (s * s);
}

namespace {

// Root choice when either branch would do: furthest from zero, ties broken
// lexicographically on (re, im).
Complex pick_root(std::pair<Complex, Complex> roots) {
  const auto& [r1, r2] = roots;
  const double m1 = std::abs(r1), m2 = std::abs(r2);
  if (std::abs(m1 - m2) > 1e-14 * (m1 + m2)) return m1 > m2 ? r1 : r2;
  if (r1.real() != r2.real()) return r1.real() > r2.real() ? r1 : r2;
  return r1.imag() >= r2.imag() ? r1 : r2;
}

struct CascadeDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_away_from_zero(Complex v, const char* what) {
  if (std::abs(v) < kTiny) throw CascadeDegenerate(what);
}

SolveResult run_cascade(const Pi& pi, Complex x0, const SolverConfig& cfg) {
  require_away_from_zero(x0, "x0");
  require_away_from_zero(x0 * x0 + 1.0, "x0^2 + 1");

  const Complex y0 = pick_root(quadratic_roots(1.0, -(x0 * pi.delta_l) / (x0 * x0 + 1.0), 1.0));
  const Complex e0 = x0 * x0 * y0 * y0;
  const Complex p0 = pick_root(quadratic_roots(1.0, (2.0 - pi.kappa) * x0 * y0, e0));
  const Complex q0 = pick_root(quadratic_roots(1.0, p0 + 1.0 / p0 - pi.delta_r, 1.0));
  const Complex f0 = pick_root(quadratic_roots(
      1.0, x0 * x0 + 1.0 / (y0 * y0) - (x0 / y0) * pi.kappa_l, x0 * x0 / (y0 * y0)));
  const Complex g0 = pick_root(quadratic_roots(
      1.0, e0 / (p0 * q0) + p0 / (e0 * q0) - pi.kappa_r / q0, 1.0 / (q0 * q0)));
  for (auto [v, what] : {std::pair<Complex, const char*>{y0, "y0"},
                         {p0, "p0"},
                         {q0, "q0"},
                         {f0, "f0"},
                         {g0, "g0"}})
    require_away_from_zero(v, what);

  const auto qc = quartic_coefficients(e0, f0, g0, pi.delta);
  const std::vector<Complex> s_roots =
      poly_roots({qc[0], qc[1], qc[2], qc[3], qc[4]}, cfg.root_tol);

  const Complex z_mag = std::sqrt(p0 * q0);
  const Complex w_mag = std::sqrt(p0 / q0);

  SolveResult best;
  best.residuals.max_residual = std::numeric_limits<double>::infinity();
  for (const Complex s : s_roots) {
    const Complex d0 = std::sqrt(s);
    if (std::abs(d0) < kTiny) continue;
    const Complex a_mag = std::sqrt(e0 * g0) / d0;
    const Complex b_mag = d0 * std::sqrt(f0 / g0);
    const Complex c_mag = std::sqrt(e0 / (f0 * d0 * d0));
    // The square roots fix magnitudes only; search the sign choices of the
    // five reconstructed coordinates for the smallest defect.
    for (int mask = 0; mask < 32; ++mask) {
      Sigma sigma{(mask & 1) ? -a_mag : a_mag, (mask & 2) ? -b_mag : b_mag,
                  (mask & 4) ? -c_mag : c_mag, d0,
                  x0,                          y0,
                  (mask & 8) ? -z_mag : z_mag, (mask & 16) ? -w_mag : w_mag};
      const ResidualReport rr = residuals_against(pi, sigma);
      if (rr.max_residual < best.residuals.max_residual) {
        best.sigma = sigma;
        best.residuals = rr;
        best.intermediate = {x0, y0, e0, p0, q0, f0, g0, d0};
      }
    }
  }
  if (!std::isfinite(best.residuals.max_residual))
    throw CascadeDegenerate("no usable quartic root");
  best.x0_used = x0;
  return best;
}

}  // namespace

SolveResult solve_sigma(const Pi& pi, const SolverConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const auto random_x0 = [&] {
    for (;;) {
      const Complex x0(coord(rng), coord(rng));
      if (std::abs(x0) > 0.1 && std::abs(x0 * x0 + 1.0) > 1e-3) return x0;
    }
  };

  SolveResult best;
  best.residuals.max_residual = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    const Complex x0 = attempt == 0 ? cfg.x0_seed : random_x0();
    try {
      SolveResult candidate = run_cascade(pi, x0, cfg);
      if (candidate.residuals.max_residual < best.residuals.max_residual) best = candidate;
    } catch (const CascadeDegenerate&) {
      continue;
    } catch (const RootFindingError&) {
      continue;
    }
    if (best.residuals.max_residual <= cfg.accept_tol) {
      best.accepted = true;
      best.retries_used = attempt;
      return best;
    }
  }
  best.retries_used = cfg.retries;
  best.accepted = false;
  return best;
}

// ---------------------------------------------------------------------------

NumericOperator NumericOperator::from_columns(int n, std::vector<Column> columns) {
  NumericOperator op(n);
  op.columns_ = std::move(columns);
  return op;
}

const std::vector<NumericOperator::Entry>* NumericOperator::column(WordIndex word) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), word,
                             [](const Column& c, WordIndex w) { return c.word < w; });
  return (it != columns_.end() && it->word == word) ? &it->entries : nullptr;
}

NumericOperator eval_operator(const SparseOperator& op, const Sigma& sigma) {
  const ComplexPoint point = sigma.as_point();
  std::vector<NumericOperator::Column> cols;
  cols.reserve(op.column_count());
  for (const auto& col : op.columns()) {
    NumericOperator::Column out{col.word, {}};
    out.entries.reserve(col.image.entries().size());
    for (const auto& e : col.image.entries()) {
      const Complex value = e.coeff.eval(point);
      if (value != 0.0) out.entries.push_back({e.word, value});
    }
    if (!out.entries.empty()) cols.push_back(std::move(out));
  }
  return NumericOperator::from_columns(op.n(), std::move(cols));
}

NumericOperator num_build_r(int n, int pos, Complex q) {
  require_valid_n(n);
  if (q == 0.0) throw ZeroCoordinate("R-operator parameter must be a unit");
  const bool wrap = pos == 2 * n;
  const int s_first = slot(pos, n);
  const int s_second = wrap ? 0 : s_first + 1;
  const WordIndex bit_first = WordIndex{1} << s_first;
  const WordIndex bit_second = WordIndex{1} << s_second;
  const Complex q_pow[3] = {1.0 / q, 1.0, q};

  std::vector<NumericOperator::Column> cols;
  cols.reserve(word_count(n) / 2);
  for (WordIndex w = 0; w < word_count(n); ++w) {
    const int l_first = static_cast<int>((w >> s_first) & 1u) + 1;
    const int l_second = static_cast<int>((w >> s_second) & 1u) + 1;
    if (l_first == l_second) continue;
    const WordIndex cleared = w & ~(bit_first | bit_second);
    const WordIndex out12 = cleared | bit_second;
    const WordIndex out21 = cleared | bit_first;
    NumericOperator::Column col{w, {{out12, q_pow[2 - l_first + 1]}, {out21, q_pow[1 - l_first + 1]}}};
    std::sort(col.entries.begin(), col.entries.end(),
              [](const auto& s, const auto& t) { return s.word < t.word; });
    cols.push_back(std::move(col));
  }
  return NumericOperator::from_columns(n, std::move(cols));
}

NumericOperator num_identity(int n) {
  require_valid_n(n);
  std::vector<NumericOperator::Column> cols;
  cols.reserve(word_count(n));
  for (WordIndex w = 0; w < word_count(n); ++w) cols.push_back({w, {{w, 1.0}}});
  return NumericOperator::from_columns(n, std::move(cols));
}

namespace {

std::vector<NumericOperator::Entry> num_collect(std::vector<NumericOperator::Entry> acc) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& s, const auto& t) { return s.word < t.word; });
  std::vector<NumericOperator::Entry> out;
  out.reserve(acc.size());
  for (const auto& e : acc) {
    if (!out.empty() && out.back().word == e.word)
      out.back().value += e.value;
    else
      out.push_back(e);
  }
  std::erase_if(out, [](const auto& e) { return e.value == 0.0; });
  return out;
}

}  // namespace

NumericOperator num_compose(const NumericOperator& f, const NumericOperator& g) {
  if (f.n() != g.n()) throw DimensionMismatch("operator dimension mismatch");
  std::vector<NumericOperator::Column> cols;
  cols.reserve(g.column_count());
  for (const auto& col : g.columns()) {
    std::vector<NumericOperator::Entry> acc;
    for (const auto& e : col.entries) {
      const auto* fcol = f.column(e.word);
      if (!fcol) continue;
      for (const auto& out : *fcol) acc.push_back({out.word, e.value * out.value});
    }
    auto entries = num_collect(std::move(acc));
    if (!entries.empty()) cols.push_back({col.word, std::move(entries)});
  }
  return NumericOperator::from_columns(f.n(), std::move(cols));
}

NumericOperator num_scalar_mul(Complex c, const NumericOperator& f) {
  if (c == 0.0) return NumericOperator(f.n());
  std::vector<NumericOperator::Column> cols;
  cols.reserve(f.column_count());
  for (const auto& col : f.columns()) {
    NumericOperator::Column out{col.word, col.entries};
    for (auto& e : out.entries) e.value *= c;
    cols.push_back(std::move(out));
  }
  return NumericOperator::from_columns(f.n(), std::move(cols));
}

double num_max_diff(const NumericOperator& f, const NumericOperator& g) {
  double max_diff = 0;
  const auto column_norm = [](const std::vector<NumericOperator::Entry>& entries) {
    double m = 0;
    for (const auto& e : entries) m = std::max(m, std::abs(e.value));
    return m;
  };
  auto it = f.columns().begin();
  auto jt = g.columns().begin();
  while (it != f.columns().end() || jt != g.columns().end()) {
    if (jt == g.columns().end() || (it != f.columns().end() && it->word < jt->word)) {
      max_diff = std::max(max_diff, column_norm(it->entries));
      ++it;
    } else if (it == f.columns().end() || jt->word < it->word) {
      max_diff = std::max(max_diff, column_norm(jt->entries));
      ++jt;
    } else {
      auto a = it->entries.begin();
      auto b = jt->entries.begin();
      while (a != it->entries.end() || b != jt->entries.end()) {
        if (b == jt->entries.end() || (a != it->entries.end() && a->word < b->word)) {
          max_diff = std::max(max_diff, std::abs(a->value));
          ++a;
        } else if (a == it->entries.end() || b->word < a->word) {
          max_diff = std::max(max_diff, std::abs(b->value));
          ++b;
        } else {
          max_diff = std::max(max_diff, std::abs(a->value - b->value));
          ++a;
          ++b;
        }
      }
      ++it;
      ++jt;
    }
  }
  return max_diff;
}

namespace {

Complex sigma_value(const Sigma& sigma, const UnitMonomial& m) {
  return m.eval(sigma.as_point());
}

NumericOperator num_gen_image(int n, const Generator& g, const Sigma& sigma) {
  const auto factors = gen_r_factors(n, g);
  NumericOperator acc = num_build_r(n, factors[0].pos, sigma_value(sigma, factors[0].q));
  for (std::size_t k = 1; k < factors.size(); ++k)
    acc = num_compose(acc, num_build_r(n, factors[k].pos, sigma_value(sigma, factors[k].q)));
  return acc;
}

Complex pi_value(const Pi& pi, ThetaCoord coord) {
  switch (coord) {
    case ThetaCoord::One:
      return 1.0;
    case ThetaCoord::Delta:
      return pi.delta;
    case ThetaCoord::DeltaL:
      return pi.delta_l;
    case ThetaCoord::DeltaR:
      return pi.delta_r;
    case ThetaCoord::KappaL:
      return pi.kappa_l;
    case ThetaCoord::KappaR:
      return pi.kappa_r;
    case ThetaCoord::Kappa:
      return pi.kappa;
  }
  return 1.0;
}

}  // namespace

std::vector<std::pair<Generator, NumericOperator>> numeric_generator_matrices(int n,
                                                                              const Sigma& sigma) {
  require_valid_n(n);
  std::vector<std::pair<Generator, NumericOperator>> out;
  for (int i = 1; i <= n - 1; ++i)
    out.emplace_back(Generator::u(i), num_gen_image(n, Generator::u(i), sigma));
  out.emplace_back(Generator::e(), num_gen_image(n, Generator::e(), sigma));
  out.emplace_back(Generator::f(), num_gen_image(n, Generator::f(), sigma));
  return out;
}

NumericVerifyReport numeric_verify(int n, const Sigma& sigma, const Pi& pi, double tol) {
  require_valid_n(n);
  const auto gens = numeric_generator_matrices(n, sigma);
  const auto image_of = [&](const Generator& g) -> const NumericOperator& {
    for (const auto& [gen, op] : gens)
      if (gen == g) return op;
    throw BadGenerator("generator not available at this n");
  };
  const auto word_op = [&](const GeneratorWord& word) {
    if (word.empty()) return num_identity(n);
    NumericOperator acc = image_of(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) acc = num_compose(acc, image_of(word[k]));
    return acc;
  };

  NumericVerifyReport report;
  report.n = n;
  report.tol = tol;
  report.all_pass = true;
  for (const auto& rel : enumerate_relations(n)) {
    const NumericOperator lhs = word_op(rel.lhs);
    const NumericOperator rhs = num_scalar_mul(pi_value(pi, rel.rhs_scalar), word_op(rel.rhs));
    NumericRelationCheck check;
    check.id = rel.id;
    check.family = rel.family;
    check.residual = num_max_diff(lhs, rhs);
    check.pass = check.residual <= tol;
    report.max_residual = std::max(report.max_residual, check.residual);
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace sympblob
