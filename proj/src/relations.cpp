#include "sympblob/relations.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace sympblob {

const LaurentPoly& theta_value(const ThetaAssignment& theta, ThetaCoord coord) {
  static const LaurentPoly one(1);
  switch (coord) {
    case ThetaCoord::One:
      return one;
    case ThetaCoord::Delta:
      return theta.delta;
    case ThetaCoord::DeltaL:
      return theta.delta_l;
    case ThetaCoord::DeltaR:
      return theta.delta_r;
    case ThetaCoord::KappaL:
      return theta.kappa_l;
    case ThetaCoord::KappaR:
      return theta.kappa_r;
    case ThetaCoord::Kappa:
      return theta.kappa;
  }
  return one;
}

std::string theta_coord_name(ThetaCoord coord) {
  switch (coord) {
    case ThetaCoord::One:
      return "1";
    case ThetaCoord::Delta:
      return "D";
    case ThetaCoord::DeltaL:
      return "D_L";
    case ThetaCoord::DeltaR:
      return "D_R";
    case ThetaCoord::KappaL:
      return "K_L";
    case ThetaCoord::KappaR:
      return "K_R";
    case ThetaCoord::Kappa:
      return "K";
  }
  return "?";
}

std::optional<ThetaCoord> theta_coord_from_name(const std::string& name) {
  for (ThetaCoord c : kThetaCoords)
    if (theta_coord_name(c) == name) return c;
  return std::nullopt;
}

std::string theta_condition_label(ThetaCoord coord) {
  switch (coord) {
    case ThetaCoord::Delta:
      return "thmcon1";
    case ThetaCoord::DeltaL:
      return "thmcon2";
    case ThetaCoord::DeltaR:
      return "thmcon3";
    case ThetaCoord::KappaL:
      return "thmcon4";
    case ThetaCoord::KappaR:
      return "thmcon5";
    case ThetaCoord::Kappa:
      return "thmcon6";
    case ThetaCoord::One:
      break;
  }
  return "";
}

std::vector<RelationInstance> enumerate_relations(int n) {
  require_valid_n(n);
  std::vector<RelationInstance> rels;
  const Generator e = Generator::e();
  const Generator f = Generator::f();
  const auto u = [](int i) { return Generator::u(i); };

  for (int i = 1; i <= n - 1; ++i)
    rels.push_back({"sba1[i=" + std::to_string(i) + "]", "sba1",
                    {u(i), u(i)}, ThetaCoord::Delta, {u(i)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) == 1)
        rels.push_back({"sba9[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]", "sba9",
                        {u(i), u(j), u(i)}, ThetaCoord::One, {u(i)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back({"sba8[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]", "sba8",
                      {u(i), u(j)}, ThetaCoord::One, {u(j), u(i)}});
  rels.push_back({"sba2", "sba2", {e, e}, ThetaCoord::DeltaL, {e}});
  rels.push_back({"sba3", "sba3", {f, f}, ThetaCoord::DeltaR, {f}});
  if (n >= 2) {
    rels.push_back({"sba4", "sba4", {u(1), e, u(1)}, ThetaCoord::KappaL, {u(1)}});
    rels.push_back({"sba5", "sba5", {u(n - 1), f, u(n - 1)}, ThetaCoord::KappaR, {u(n - 1)}});
  }
  for (int i = 2; i <= n - 1; ++i)
    rels.push_back({"sba10[i=" + std::to_string(i) + "]", "sba10",
                    {e, u(i)}, ThetaCoord::One, {u(i), e}});
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back({"sba11[i=" + std::to_string(i) + "]", "sba11",
                    {f, u(i)}, ThetaCoord::One, {u(i), f}});
  if (n > 1) rels.push_back({"sba12", "sba12", {e, f}, ThetaCoord::One, {f, e}});

  const auto [i_word, j_word] = ij_words(n);
  GeneratorWord iji = i_word;
  iji.insert(iji.end(), j_word.begin(), j_word.end());
  iji.insert(iji.end(), i_word.begin(), i_word.end());
  GeneratorWord jij = j_word;
  jij.insert(jij.end(), i_word.begin(), i_word.end());
  jij.insert(jij.end(), j_word.begin(), j_word.end());
  rels.push_back({"sba6", "sba6", iji, ThetaCoord::Kappa, i_word});
  rels.push_back({"sba7", "sba7", jij, ThetaCoord::Kappa, j_word});
  return rels;
}

RelationCheck check_relation(const RelationInstance& rel, const ThetaAssignment& theta, int n) {
  SparseOperator lhs = word_image(n, rel.lhs);
  SparseOperator rhs = scalar_mul(theta_value(theta, rel.rhs_scalar), word_image(n, rel.rhs));
  RelationCheck check{rel.id, rel.family, rel.rhs_scalar, true, std::nullopt};
  if (auto diff = first_difference(lhs, rhs)) {
    check.pass = false;
    check.witness = RelationWitness{diff->word, diff->lhs_image, diff->rhs_image};
  }
  return check;
}

VerificationReport verify_all(int n, const ThetaAssignment& theta) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = n;
  report.all_pass = true;
  for (const auto& rel : enumerate_relations(n)) {
    report.checks.push_back(check_relation(rel, theta, n));
    report.all_pass = report.all_pass && report.checks.back().pass;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

void require_assignment(int n, const std::vector<UnitMonomial>& qs) {
  if (static_cast<int>(qs.size()) != 4 * n)
    throw DimensionMismatch("expected one monomial per position, got " +
                            std::to_string(qs.size()));
}

SparseOperator parity_product(int n, const std::vector<UnitMonomial>& qs, int parity) {
  SparseOperator acc = identity_op(n);
  bool started = false;
  for (int pos = -2 * n + 1; pos <= 2 * n; ++pos) {
    if (((pos % 2) + 2) % 2 != parity) continue;
    SparseOperator r = build_r(n, pos, qs[slot(pos, n)]);
    acc = started ? compose(acc, r) : std::move(r);
    started = true;
  }
  return acc;
}

}  // namespace

LaurentPoly compute_Q(int n, const std::vector<UnitMonomial>& qs) {
  require_valid_n(n);
  require_assignment(n, qs);
  UnitMonomial odd, even;
  for (int pos = -2 * n + 1; pos <= 2 * n; ++pos) {
    if (((pos % 2) + 2) % 2 == 1)
      odd = odd * qs[slot(pos, n)];
    else
      even = even * qs[slot(pos, n)];
  }
  return two_bracket(odd / even) + LaurentPoly(2);
}

bool check_oeo(int n, const std::vector<UnitMonomial>& qs) {
  require_valid_n(n);
  require_assignment(n, qs);
  const SparseOperator odd_op = parity_product(n, qs, 1);
  const SparseOperator even_op = parity_product(n, qs, 0);
  const LaurentPoly q_scalar = compute_Q(n, qs);
  return compose(even_op, compose(odd_op, even_op)) == scalar_mul(q_scalar, even_op) &&
         compose(odd_op, compose(even_op, odd_op)) == scalar_mul(q_scalar, odd_op);
}

PerturbationReport perturbation_suite(int n) {
  require_valid_n(n);
  const auto rels = enumerate_relations(n);
  PerturbationReport report;
  report.n = n;
  report.all_pass = true;
  for (ThetaCoord coord : kThetaCoords) {
    ThetaAssignment theta = theta_target(n);
    switch (coord) {
      case ThetaCoord::Delta:
        theta.delta += 1;
        break;
      case ThetaCoord::DeltaL:
        theta.delta_l += 1;
        break;
      case ThetaCoord::DeltaR:
        theta.delta_r += 1;
        break;
      case ThetaCoord::KappaL:
        theta.kappa_l += 1;
        break;
      case ThetaCoord::KappaR:
        theta.kappa_r += 1;
        break;
      case ThetaCoord::Kappa:
        theta.kappa += 1;
        break;
      case ThetaCoord::One:
        break;
    }
    PerturbationEntry entry;
    entry.coord = coord;
    for (const auto& rel : rels) {
      if (rel.rhs_scalar == coord) entry.expected_failures.push_back(rel.id);
      if (!check_relation(rel, theta, n).pass) entry.observed_failures.push_back(rel.id);
    }
    entry.pass = entry.expected_failures == entry.observed_failures;
    report.all_pass = report.all_pass && entry.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

UnitMonomial random_unit_monomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp_dist(-2, 2);
  ExponentVector e;
  for (int i = 0; i < kVarCount; ++i) e.exps[i] = static_cast<std::int16_t>(exp_dist(rng));
  return UnitMonomial(e);
}

bool cyclically_adjacent(int i, int j, int n) {
  if (std::abs(i - j) == 1) return true;
  return (i == 2 * n && j == -2 * n + 1) || (j == 2 * n && i == -2 * n + 1);
}

}  // namespace

LemmaReport run_lemma_suites(int n, int trials, std::uint64_t seed) {
  require_valid_n(n);
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  LemmaReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  const auto add = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  // (R^q_m)^2 = [2]_q R^q_m for every non-wrap position.
  {
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const UnitMonomial q = random_unit_monomial(rng);
      for (int m = -2 * n + 1; m < 2 * n && pass; ++m) {
        const SparseOperator r = build_r(n, m, q);
        if (!(compose(r, r) == scalar_mul(two_bracket(q), r))) {
          pass = false;
          detail = "m=" + std::to_string(m);
        }
      }
    }
    add("square", pass, detail);
  }

  // R^q_m R^q_{m+-1} R^q_m = R^q_m for non-wrap m, m+-1.
  {
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const UnitMonomial q = random_unit_monomial(rng);
      for (int m = -2 * n + 1; m < 2 * n && pass; ++m) {
        for (int d : {-1, 1}) {
          const int m2 = m + d;
          if (m2 < -2 * n + 1 || m2 >= 2 * n) continue;
          const SparseOperator r = build_r(n, m, q);
          const SparseOperator r2 = build_r(n, m2, q);
          if (!(compose(r, compose(r2, r)) == r)) {
            pass = false;
            detail = "m=" + std::to_string(m) + ",m'=" + std::to_string(m2);
            break;
          }
        }
      }
    }
    add("braid", pass, detail);
  }

  // (R^s_{m+1} R^t_{m-1}) R^q_m (R^s_{m+1} R^t_{m-1}) = [2]_{q/st} R^s_{m+1} R^t_{m-1}.
  {
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const UnitMonomial q = random_unit_monomial(rng);
      const UnitMonomial s = random_unit_monomial(rng);
      const UnitMonomial u = random_unit_monomial(rng);
      for (int m = -2 * n + 2; m <= 2 * n - 1 && pass; ++m) {
        const SparseOperator outer =
            compose(build_r(n, m + 1, s), build_r(n, m - 1, u));
        const SparseOperator lhs = compose(outer, compose(build_r(n, m, q), outer));
        if (!(lhs == scalar_mul(two_bracket(q / (s * u)), outer))) {
          pass = false;
          detail = "m=" + std::to_string(m);
        }
      }
    }
    add("sandwich", pass, detail);
  }

  // Wrap variant: the neighbours of position 2n are 2n-1 and -2n+1.
  {
    bool pass = true;
    for (int t = 0; t < trials && pass; ++t) {
      const UnitMonomial qa = random_unit_monomial(rng);
      const UnitMonomial qd = random_unit_monomial(rng);
      const UnitMonomial qw = random_unit_monomial(rng);
      const SparseOperator outer =
          compose(build_r(n, -2 * n + 1, qa), build_r(n, 2 * n - 1, qd));
      const SparseOperator lhs = compose(outer, compose(build_r(n, 2 * n, qw), outer));
      pass = lhs == scalar_mul(two_bracket(qw / (qa * qd)), outer);
    }
    add("cyclic_sandwich", pass, "");
  }

  // R^q_i and R^r_j commute when i, j are not cyclically adjacent.
  {
    bool pass = true;
    std::string detail;
    std::uniform_int_distribution<int> pos_dist(-2 * n + 1, 2 * n);
    for (int t = 0; t < trials && pass; ++t) {
      int i = pos_dist(rng);
      int j = pos_dist(rng);
      if (i == j || cyclically_adjacent(i, j, n)) continue;
      const SparseOperator ri = build_r(n, i, random_unit_monomial(rng));
      const SparseOperator rj = build_r(n, j, random_unit_monomial(rng));
      if (!(compose(ri, rj) == compose(rj, ri))) {
        pass = false;
        detail = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      }
    }
    add("distant_commute", pass, detail);
  }

  // EOE = QE, OEO = QO, and the composition identity OEOE = Q OE.
  {
    bool pass = true;
    for (int t = 0; t < trials && pass; ++t) {
      std::vector<UnitMonomial> qs(4 * n);
      for (auto& q : qs) q = random_unit_monomial(rng);
      pass = check_oeo(n, qs);
      if (pass) {
        const SparseOperator odd_op = parity_product(n, qs, 1);
        const SparseOperator even_op = parity_product(n, qs, 0);
        const SparseOperator oe = compose(odd_op, even_op);
        pass = compose(oe, oe) == scalar_mul(compute_Q(n, qs), oe);
      }
    }
    add("alternating_product", pass, "");
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const LemmaCheck& c) { return c.pass; });
  return report;
}

}  // namespace sympblob
