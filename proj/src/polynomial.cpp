#include "padiclab/polynomial.hpp"

#include <sstream>

namespace padiclab {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

Polynomial Polynomial::monomial(long degree, const Rational& c) {
  if (degree < 0) throw domain_error("monomial degree must be non-negative");
  if (c == 0) return Polynomial();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(1); }

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long Polynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<long>(i);
  return -1;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::compose_linear(const Rational& a, const Rational& b) const {
  Polynomial inner({b, a});
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + Polynomial(coeffs_[i]);
  return acc;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial acc(Rational(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw division_by_zero("polynomial division by zero");
  Polynomial rem(*this);
  std::vector<Rational> q;
  long dd = d.degree();
  if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    long shift = rem.degree() - dd;
    Rational factor = rem.leading() / d.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    rem = rem - monomial(shift, factor) * d;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw domain_error("inexact polynomial division");
  return q;
}

Polynomial Polynomial::shift_down(long k) const {
  if (k == 0) return *this;
  if (k < 0) return *this * monomial(-k);
  if (is_zero()) return *this;
  if (order() < k) throw domain_error("polynomial not divisible by x^" + std::to_string(k));
  std::vector<Rational> v(coeffs_.begin() + k, coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return (a * b).divexact(poly_gcd(a, b)).monic();
}

namespace {

// "3/2" as-is, "x", "x^2"; sign handled by the caller.
void append_term(std::ostringstream& out, const Rational& c, long deg, const std::string& var,
                 bool first) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  bool unit = (a == 1);
  if (deg == 0) {
    out << a.get_str();
    return;
  }
  if (!unit) {
    if (a.get_den() == 1)
      out << a.get_str() << "*";
    else
      out << "(" << a.get_str() << ")*";
  }
  out << var;
  if (deg > 1) out << "^" << deg;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    append_term(out, c, i, var, first);
    first = false;
  }
  return out.str();
}

}  // namespace padiclab
