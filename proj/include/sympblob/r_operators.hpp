// The local operators R^q_i on V^(x)4n (non-wrap and periodic wrap case),
// the generator images R(U_i), R(e), R(f), and the scalar targets for the
// six defining relation families.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sympblob/tensor_space.hpp"

namespace sympblob {

struct BadGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// R^q_i for i in I_n. For i != 2n the column of a word is zero when the
// letters at positions (i, i+1) agree; otherwise the pair maps to the letter
// patterns (1,2) and (2,1) with coefficients q^(2-l) and q^(1-l), l the letter
// at position i. For i = 2n the pair is (2n, -2n+1) read cyclically.
SparseOperator build_r(int n, int pos, const UnitMonomial& q);

// The 4x4 block of the non-wrap R, rows/columns indexed by the letter pairs
// (1,1), (1,2), (2,1), (2,2). Placing it at adjacent slots with identities
// elsewhere reproduces build_r; used as a cross-check.
std::array<std::array<LaurentPoly, 4>, 4> block_matrix_oracle(const UnitMonomial& q);

struct Generator {
  enum class Kind { U, E, F };
  Kind kind = Kind::E;
  int index = 0;  // subscript of U generators, 1 <= index <= n-1

  static Generator u(int i) { return {Kind::U, i}; }
  static Generator e() { return {Kind::E, 0}; }
  static Generator f() { return {Kind::F, 0}; }

  std::string str() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

using GeneratorWord = std::vector<Generator>;
std::string word_str(const GeneratorWord& word);

// The R-factors of one generator image, in product order.
struct RFactor {
  int pos;
  UnitMonomial q;
};
std::vector<RFactor> gen_r_factors(int n, const Generator& g);

SparseOperator gen_image(int n, const Generator& g);
// Image of a product of generators; the empty word maps to the identity.
SparseOperator word_image(int n, const GeneratorWord& word);

// Scalar images of the six relation coefficients, as Laurent polynomials.
struct ThetaAssignment {
  LaurentPoly delta;    // coefficient of U_i^2 = delta U_i
  LaurentPoly delta_l;  // e^2 = delta_l e
  LaurentPoly delta_r;  // f^2 = delta_r f
  LaurentPoly kappa_l;  // U_1 e U_1 = kappa_l U_1
  LaurentPoly kappa_r;  // U_{n-1} f U_{n-1} = kappa_r U_{n-1}
  LaurentPoly kappa;    // IJI = kappa I, JIJ = kappa J
};

// The unique assignment under which the generator images satisfy all twelve
// relation families; kappa depends on the parity of n.
ThetaAssignment theta_target(int n);

// The parity-alternating boundary words I and J.
std::pair<GeneratorWord, GeneratorWord> ij_words(int n);

// Monomial attached to each chain position by the generator images, indexed
// by slot: a/x/b/z/c/y/d/w blocks across I_n. The product of the images of I
// and J factors through these one R per position.
std::vector<UnitMonomial> ij_position_monomials(int n);

}  // namespace sympblob
