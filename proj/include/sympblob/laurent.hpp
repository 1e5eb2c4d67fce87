// Exact arithmetic in the Laurent ring Z[a^±1, b^±1, c^±1, d^±1, x^±1, y^±1, z^±1, w^±1]
// and evaluation at complex points.

#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympblob {

using Coeff = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

inline constexpr int kVarCount = 8;

// Ring variables in canonical order; exponent vectors and printed terms use
// this order everywhere.
enum class Var : int { a = 0, b, c, d, x, y, z, w };

inline constexpr std::array<const char*, kVarCount> kVarNames = {
    "a", "b", "c", "d", "x", "y", "z", "w"};

// Thrown by eval() when a variable with a negative exponent is specialized to 0.
struct ZeroCoordinate : std::domain_error {
  using std::domain_error::domain_error;
};

// A point of (C^x)^8, indexed by Var.
using ComplexPoint = std::array<Complex, kVarCount>;

struct ExponentVector {
  std::array<std::int16_t, kVarCount> exps{};

  // Lexicographic order in the fixed variable order; canonical forms sort by it.
  friend constexpr auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  constexpr int operator[](Var v) const { return exps[static_cast<int>(v)]; }

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r;
    for (int i = 0; i < kVarCount; ++i) r.exps[i] = static_cast<std::int16_t>(exps[i] + o.exps[i]);
    return r;
  }
  ExponentVector operator-() const {
    ExponentVector r;
    for (int i = 0; i < kVarCount; ++i) r.exps[i] = static_cast<std::int16_t>(-exps[i]);
    return r;
  }
  bool is_zero() const {
    for (auto e : exps)
      if (e != 0) return false;
    return true;
  }
};

class LaurentPoly;

// Invertible monomial with coefficient 1 (an element of the unit group).
class UnitMonomial {
 public:
  UnitMonomial() = default;  // the monomial 1
  explicit UnitMonomial(ExponentVector e) : exps_(e) {}

  static UnitMonomial variable(Var v, int power = 1) {
    ExponentVector e;
    e.exps[static_cast<int>(v)] = static_cast<std::int16_t>(power);
    return UnitMonomial(e);
  }

  UnitMonomial inverse() const { return UnitMonomial(-exps_); }
  UnitMonomial operator*(const UnitMonomial& o) const { return UnitMonomial(exps_ + o.exps_); }
  UnitMonomial operator/(const UnitMonomial& o) const { return *this * o.inverse(); }
  friend bool operator==(const UnitMonomial&, const UnitMonomial&) = default;

  const ExponentVector& exponents() const { return exps_; }
  LaurentPoly to_poly() const;
  Complex eval(const ComplexPoint& point) const;

 private:
  ExponentVector exps_{};
};

// Element of the Laurent ring in canonical form: terms sorted by exponent
// vector, no zero coefficients. Equality is structural.
class LaurentPoly {
 public:
  struct Term {
    ExponentVector exps;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;  // zero
  LaurentPoly(long long value) {  // NOLINT: implicit integer constants are intended
    if (value != 0) terms_.push_back({ExponentVector{}, Coeff(value)});
  }
  explicit LaurentPoly(Coeff value) {
    if (value != 0) terms_.push_back({ExponentVector{}, std::move(value)});
  }

  static LaurentPoly monomial(Coeff coeff, ExponentVector exps);
  static LaurentPoly variable(Var v, int power = 1) {
    return monomial(1, UnitMonomial::variable(v, power).exponents());
  }
  // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].exps.is_zero() && terms_[0].coeff == 1;
  }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply by a single term without building a temporary polynomial.
  LaurentPoly scaled(const Coeff& coeff, const ExponentVector& shift) const;

  Complex eval(const ComplexPoint& point) const;

  // Report rendering, e.g. "2*a^1*b^-1 + 1"; terms in descending exponent order.
  std::string str() const;
  // Same content without spaces, usable as a single whitespace-free token.
  std::string token() const;

 private:
  std::vector<Term> terms_;
};

inline LaurentPoly UnitMonomial::to_poly() const { return LaurentPoly::monomial(1, exps_); }

// The bracket m + m^-1 (the quantum integer [2]_m).
LaurentPoly two_bracket(const UnitMonomial& m);

}  // namespace sympblob
