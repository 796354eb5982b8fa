#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

/// Dense univariate polynomial over Q. Coefficient index equals the degree of
/// the monomial; trailing zeros are stripped, the zero polynomial stores no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant);             // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  /// c * x^degree
  static Polynomial monomial(long degree, const Rational& c = Rational(1));
  /// the variable itself
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  long order() const;
  const Rational& leading() const;
  Rational coeff(long i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// p(a*x + b)
  Polynomial compose_linear(const Rational& a, const Rational& b) const;
  Polynomial pow(unsigned long e) const;

  /// Quotient and remainder of Euclidean division (d != 0).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Exact division; throws if the remainder is nonzero.
  Polynomial divexact(const Polynomial& d) const;
  /// Division by x^k; throws if the low-order coefficients are nonzero.
  Polynomial shift_down(long k) const;

  Polynomial monic() const;

  /// Rendering in descending powers with exact fractions, e.g.
  /// "x^3 - 7*x^2 + 6*x - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

Polynomial operator*(const Rational& s, const Polynomial& p);

/// Monic greatest common divisor (Euclid); gcd(0, q) = monic q.
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Monic least common multiple.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

}  // namespace padiclab
