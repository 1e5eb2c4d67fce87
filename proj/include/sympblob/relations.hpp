// Enumeration of the defining relations of the symplectic blob algebra for a
// given n, symbolic verification of the generator images against a scalar
// assignment, and the supporting operator-identity suites.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympblob/r_operators.hpp"

namespace sympblob {

// Right-hand-side scalar of a relation: 1 or one of the six assigned values.
enum class ThetaCoord { One, Delta, DeltaL, DeltaR, KappaL, KappaR, Kappa };

inline constexpr std::array<ThetaCoord, 6> kThetaCoords = {
    ThetaCoord::Delta,  ThetaCoord::DeltaL, ThetaCoord::DeltaR,
    ThetaCoord::KappaL, ThetaCoord::KappaR, ThetaCoord::Kappa};

const LaurentPoly& theta_value(const ThetaAssignment& theta, ThetaCoord coord);
std::string theta_coord_name(ThetaCoord coord);  // "1", "D", "D_L", ...
std::optional<ThetaCoord> theta_coord_from_name(const std::string& name);
// Condition label for report traceability ("thmcon1" ... "thmcon6").
std::string theta_condition_label(ThetaCoord coord);

struct RelationInstance {
  std::string id;      // e.g. "sba9[i=1,j=2]"
  std::string family;  // "sba1" ... "sba12"
  GeneratorWord lhs;
  ThetaCoord rhs_scalar = ThetaCoord::One;
  GeneratorWord rhs;
};

// All relation instances for the given n, in a fixed order; families that are
// vacuous at this n are dropped.
std::vector<RelationInstance> enumerate_relations(int n);

struct RelationWitness {
  WordIndex word;
  std::string lhs_image;
  std::string rhs_image;
};

struct RelationCheck {
  std::string id;
  std::string family;
  ThetaCoord rhs_scalar = ThetaCoord::One;
  bool pass = false;
  std::optional<RelationWitness> witness;
};

struct VerificationReport {
  int n = 0;
  std::vector<RelationCheck> checks;
  bool all_pass = false;
  double wall_seconds = 0.0;
};

RelationCheck check_relation(const RelationInstance& rel, const ThetaAssignment& theta, int n);
VerificationReport verify_all(int n, const ThetaAssignment& theta);

// Scalar of the alternating-product identity: with M the ratio of the odd-
// and even-position monomials, Q = M + 2 + M^-1.
LaurentPoly compute_Q(int n, const std::vector<UnitMonomial>& qs_by_slot);

// Builds O (product of R's at odd positions) and E (even positions, wrap
// included) for the given assignment and checks EOE = QE and OEO = QO.
bool check_oeo(int n, const std::vector<UnitMonomial>& qs_by_slot);

// For each scalar coordinate, rerun the verification with that coordinate
// shifted by +1 and record which relations fail; passes when exactly the
// relation family governed by the coordinate fails.
struct PerturbationEntry {
  ThetaCoord coord;
  std::vector<std::string> expected_failures;
  std::vector<std::string> observed_failures;
  bool pass = false;
};
struct PerturbationReport {
  int n = 0;
  std::vector<PerturbationEntry> entries;
  bool all_pass = false;
};
PerturbationReport perturbation_suite(int n);

// Randomized identity suites for the R-operators: idempotent-square and braid
// identities, the neighbour sandwich (plain and wrap variants), distant
// commutation, and the alternating-product identity with its Q scalar.
struct LemmaCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct LemmaReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<LemmaCheck> checks;
  bool all_pass = false;
};
LemmaReport run_lemma_suites(int n, int trials, std::uint64_t seed);

}  // namespace sympblob
