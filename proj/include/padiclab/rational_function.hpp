#pragma once

#include <string>
#include <utility>
#include <vector>

#include "padiclab/polynomial.hpp"

namespace padiclab {

/// Quotient of polynomials, kept normalized: gcd(num, den) = 1 and the
/// denominator monic. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}    // NOLINT
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}     // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// The underlying polynomial; throws if the denominator is nontrivial.
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative() const;
  Rational evaluate(const Rational& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  Polynomial num_, den_;
};

/// Multiplies a list of rational-function coefficients through by the least
/// common denominator. Returns the polynomial list together with the
/// extracted common factor.
struct ClearedDenominators {
  std::vector<Polynomial> polys;
  Polynomial factor;
};
ClearedDenominators clear_denominators(const std::vector<RationalFunction>& coeffs);

}  // namespace padiclab
