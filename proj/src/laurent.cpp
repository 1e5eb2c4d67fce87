#include "sympblob/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sympblob {

namespace {

Complex int_pow(Complex base, int e) {
  if (e < 0) return 1.0 / int_pow(base, -e);
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Coeff coeff, ExponentVector exps) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exps, std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& s, const Term& t) { return s.exps < t.exps; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  while (it != terms_.end() && jt != o.terms_.end()) {
    if (it->exps < jt->exps) {
      r.terms_.push_back(*it++);
    } else if (jt->exps < it->exps) {
      r.terms_.push_back(*jt++);
    } else {
      Coeff sum = it->coeff + jt->coeff;
      if (sum != 0) r.terms_.push_back({it->exps, std::move(sum)});
      ++it;
      ++jt;
    }
  }
  r.terms_.insert(r.terms_.end(), it, terms_.end());
  r.terms_.insert(r.terms_.end(), jt, o.terms_.end());
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::scaled(const Coeff& coeff, const ExponentVector& shift) const {
  LaurentPoly r;
  if (coeff == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exps + shift, t.coeff * coeff});
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return scaled(o.terms_[0].coeff, o.terms_[0].exps);
  if (terms_.size() == 1) return o.scaled(terms_[0].coeff, terms_[0].exps);
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) products.push_back({s.exps + t.exps, s.coeff * t.coeff});
  return from_terms(std::move(products));
}

Complex UnitMonomial::eval(const ComplexPoint& point) const {
  Complex value = 1.0;
  for (int i = 0; i < kVarCount; ++i) {
    int e = exps_.exps[i];
    if (e == 0) continue;
    if (point[i] == 0.0 && e < 0)
      throw ZeroCoordinate(std::string("variable ") + kVarNames[i] +
                           " is zero but occurs with a negative exponent");
    value *= int_pow(point[i], e);
  }
  return value;
}

Complex LaurentPoly::eval(const ComplexPoint& point) const {
  Complex acc = 0.0;
  for (const auto& t : terms_) {
    // A zero coordinate with a negative exponent is an error even if another
    // factor of the same term vanishes.
    for (int i = 0; i < kVarCount; ++i)
      if (t.exps.exps[i] < 0 && point[i] == 0.0)
        throw ZeroCoordinate(std::string("variable ") + kVarNames[i] +
                             " is zero but occurs with a negative exponent");
    Complex value = t.coeff.convert_to<double>();
    for (int i = 0; i < kVarCount; ++i) {
      int e = t.exps.exps[i];
      if (e != 0) value *= int_pow(point[i], e);
    }
    acc += value;
  }
  return acc;
}

namespace {

void render_term(std::ostream& out, const LaurentPoly::Term& t, bool leading, bool spaced) {
  Coeff mag = t.coeff < 0 ? Coeff(-t.coeff) : t.coeff;
  if (leading) {
    if (t.coeff < 0) out << '-';
  } else {
    if (spaced)
      out << (t.coeff < 0 ? " - " : " + ");
    else
      out << (t.coeff < 0 ? '-' : '+');
  }
  bool printed = false;
  if (mag != 1 || t.exps.is_zero()) {
    out << mag.str();
    printed = true;
  }
  for (int i = 0; i < kVarCount; ++i) {
    int e = t.exps.exps[i];
    if (e == 0) continue;
    if (printed) out << '*';
    out << kVarNames[i] << '^' << e;
    printed = true;
  }
}

std::string render(const std::vector<LaurentPoly::Term>& terms, bool spaced) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  // Descending exponent order puts the highest monomial first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    render_term(out, *it, it == terms.rbegin(), spaced);
  return out.str();
}

}  // namespace

std::string LaurentPoly::str() const { return render(terms_, true); }
std::string LaurentPoly::token() const { return render(terms_, false); }

LaurentPoly two_bracket(const UnitMonomial& m) {
  return m.to_poly() + m.inverse().to_poly();
}

}  // namespace sympblob
