// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sympblob/json_io.hpp"
#include "support/dense_oracle.hpp"
#include "support/random_gen.hpp"

using namespace sympblob;
using namespace sympblob::testing;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Exact symbolic verification of every relation instance for n = 1..4.
void criterion_1() {
  bool pass = true;
  std::string times;
  for (int n = 1; n <= 4; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport rep = verify_all(n, theta_target(n));
    pass = pass && rep.all_pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, " n=%d:%.2fs", n, seconds_since(start));
    times += buf;
  }
  report(1, pass, "symbolic relation suite exact for n=1..4" + times);
}

// 2. Randomized operator identity suites at n = 1, 2 with 20 draws each.
void criterion_2() {
  bool pass = true;
  std::string detail;
  for (int n = 1; n <= 2; ++n) {
    const LemmaReport rep = run_lemma_suites(n, 20, 12345 + n);
    pass = pass && rep.all_pass;
    for (const auto& check : rep.checks)
      if (!check.pass) detail += " n=" + std::to_string(n) + ":" + check.name;
  }
  report(2, pass, "identity suites (square/braid/sandwich/cyclic/alternating), 20 draws" + detail);
}

// 3. Shifting each scalar coordinate breaks exactly its governed family.
void criterion_3() {
  bool pass = true;
  std::string detail;
  for (int n : {2, 3}) {
    const PerturbationReport rep = perturbation_suite(n);
    pass = pass && rep.all_pass;
    for (const auto& entry : rep.entries) {
      if (entry.pass) continue;
      detail += " n=" + std::to_string(n) + ":" + theta_coord_name(entry.coord);
    }
  }
  report(3, pass, "scalar necessity pinpointed per coordinate at n=2,3" + detail);
}

struct SolvedCase {
  Pi pi;
  SolveResult result;
};

// 4. The cascade solves 100 random parameter tuples plus the zero tuple.
std::vector<SolvedCase> criterion_4() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::vector<SolvedCase> solved;
  std::vector<double> durations;
  bool pass = true;
  double worst = 0;

  for (int trial = 0; trial < 101; ++trial) {
    Pi pi{0, 0, 0, 0, 0, 0};
    if (trial > 0)
      pi = Pi{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)},
              {coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
    const auto start = std::chrono::steady_clock::now();
    SolverConfig cfg;
    cfg.seed = 7000 + trial;
    const SolveResult result = solve_sigma(pi, cfg);
    durations.push_back(seconds_since(start));
    worst = std::max(worst, result.residuals.max_residual);
    pass = pass && result.accepted && result.residuals.max_residual < 1e-8;
    solved.push_back({pi, result});
  }

  std::sort(durations.begin(), durations.end());
  const double median_ms = durations[durations.size() / 2] * 1e3;
  pass = pass && median_ms < 50.0;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "specialization for 100 random tuples + zero tuple, worst residual %.2e, "
                "median %.3f ms",
                worst, median_ms);
  report(4, pass, buf);
  return solved;
}

// 5. Ten solved tuples transfer to numeric representations at n = 2.
void criterion_5(const std::vector<SolvedCase>& solved) {
  bool pass = true;
  double worst = 0;
  for (std::size_t k = 0; k < 10 && k < solved.size(); ++k) {
    const NumericVerifyReport rep =
        numeric_verify(2, solved[k].result.sigma, solved[k].pi, 1e-6);
    worst = std::max(worst, rep.max_residual);
    pass = pass && rep.all_pass;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "representation transfer at n=2 for 10 solved tuples, worst residual %.2e",
                worst);
  report(5, pass, buf);
}

// 6. Forward evaluation feeds back into the solver: 50 random points.
void criterion_6() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  bool pass = true;
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto coord = [&] { return std::polar(mod(rng), arg(rng)); };
    const Sigma sigma{coord(), coord(), coord(), coord(), coord(), coord(), coord(), coord()};
    const ForwardValues f = forward_pi(sigma);
    const Pi pi{f.delta, f.delta_l, f.delta_r, f.kappa_l, f.kappa_r, f.kappa_odd};
    SolverConfig cfg;
    cfg.seed = 9000 + trial;
    const SolveResult result = solve_sigma(pi, cfg);
    worst = std::max(worst, result.residuals.max_residual);
    pass = pass && result.accepted && result.residuals.max_residual < 1e-8;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "round trip through forward evaluation x50, worst residual %.2e",
                worst);
  report(6, pass, buf);
}

// 7. Dense materialization agrees with the sparse implementation at n <= 2,
//    exactly in the symbolic case and within 1e-10 numerically.
void criterion_7() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  bool pass = true;
  std::string detail;

  for (int n = 1; n <= 2; ++n) {
    // Block Kronecker oracle for every non-wrap position.
    const UnitMonomial qs[] = {UnitMonomial::variable(Var::a),
                               UnitMonomial::variable(Var::x) * UnitMonomial::variable(Var::b),
                               random_unit_monomial(rng)};
    for (const UnitMonomial& q : qs)
      for (int pos = -2 * n + 1; pos < 2 * n; ++pos)
        if (!dense_eq(to_dense(build_r(n, pos, q)), dense_from_block(n, pos, block_matrix_oracle(q)))) {
          pass = false;
          detail += " block(n=" + std::to_string(n) + ",pos=" + std::to_string(pos) + ")";
        }

    // Dense products of the generator images against sparse composition.
    const auto [i_word, j_word] = ij_words(n);
    GeneratorWord iji = i_word;
    iji.insert(iji.end(), j_word.begin(), j_word.end());
    iji.insert(iji.end(), i_word.begin(), i_word.end());
    DenseMatrix dense_prod;
    bool first = true;
    for (const Generator& g : iji) {
      const DenseMatrix dg = to_dense(gen_image(n, g));
      dense_prod = first ? dg : dense_mul(dense_prod, dg);
      first = false;
    }
    if (!dense_eq(dense_prod, to_dense(word_image(n, iji)))) {
      pass = false;
      detail += " symbolic(n=" + std::to_string(n) + ")";
    }

    // Numeric mirror at a random point.
    const auto coord = [&] { return std::polar(mod(rng), arg(rng)); };
    const Sigma sigma{coord(), coord(), coord(), coord(), coord(), coord(), coord(), coord()};
    DenseNumeric num_prod;
    first = true;
    for (const Generator& g : iji) {
      const DenseNumeric dg = to_dense_num(eval_operator(gen_image(n, g), sigma));
      num_prod = first ? dg : dense_num_mul(num_prod, dg);
      first = false;
    }
    const double diff =
        dense_num_max_diff(num_prod, to_dense(word_image(n, iji)), sigma.as_point());
    if (diff >= 1e-10) {
      pass = false;
      detail += " numeric(n=" + std::to_string(n) + ")";
    }
  }
  report(7, pass, "dense oracle equivalence at n<=2, exact symbolic / 1e-10 numeric" + detail);
}

// 8. The independently derived quartic coefficients reproduce the first
//    scalar from every solved tuple.
void criterion_8(const std::vector<SolvedCase>& solved) {
  bool pass = true;
  double worst = 0;
  for (const auto& kase : solved) {
    const Sigma& s = kase.result.sigma;
    const Complex e0 = s.a * s.b * s.c * s.d;
    const Complex f0 = s.a * s.b / (s.c * s.d);
    const Complex g0 = s.a * s.d / (s.b * s.c);
    const double defect = std::abs(delta_from_quartic(e0, f0, g0, s.d) - kase.pi.delta);
    worst = std::max(worst, defect);
    pass = pass && defect < 1e-8;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "quartic coefficient audit over %zu solved tuples, worst %.2e",
                solved.size(), worst);
  report(8, pass, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  const std::vector<SolvedCase> solved = criterion_4();
  criterion_5(solved);
  criterion_6();
  criterion_7();
  criterion_8(solved);

  if (g_failures) {
    std::printf("\n%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("\nall acceptance criteria passed\n");
  return 0;
}
