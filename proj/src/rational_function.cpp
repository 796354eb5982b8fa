#include "padiclab/rational_function.hpp"

namespace padiclab {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw domain_error("rational function is not a polynomial: " + to_string());
  return num_ * (Rational(1) / den_.leading());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw division_by_zero("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return as_polynomial().to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

ClearedDenominators clear_denominators(const std::vector<RationalFunction>& coeffs) {
  Polynomial lcd(Rational(1));
  for (const auto& c : coeffs)
    if (!c.is_zero()) lcd = poly_lcm(lcd, c.den());
  ClearedDenominators out;
  out.factor = lcd;
  out.polys.reserve(coeffs.size());
  for (const auto& c : coeffs) out.polys.push_back(c.num() * lcd.divexact(c.den()));
  return out;
}

}  // namespace padiclab
