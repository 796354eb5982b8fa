#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padiclab/padic.hpp"
#include "padiclab/series.hpp"

namespace padiclab {

/// The polynomial law P behind a factorial series, either as coefficients in
/// the index variable n or as a product of linear factors (n+a_1)^k_1 ...
/// (n+a_l)^k_l. The two forms are interconvertible; a product-form instance
/// keeps its factors alongside the expanded coefficients.
class FactorialPolynomial {
 public:
  FactorialPolynomial() : poly_(Rational(1)) {}
  explicit FactorialPolynomial(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero()) throw domain_error("factorial polynomial must be nonzero");
  }

  static FactorialPolynomial one() { return FactorialPolynomial(); }
  /// Monic coefficient form: n^k + C_{k-1} n^{k-1} + ... + C_0.
  static FactorialPolynomial from_monic_coefficients(std::vector<Rational> low_coeffs);
  /// Product form: product of (n + alpha_i)^(k_i).
  static FactorialPolynomial from_product(const std::vector<std::pair<Rational, unsigned>>& factors);

  long degree() const { return poly_.degree(); }
  const Polynomial& coefficients() const { return poly_; }
  const std::optional<std::vector<std::pair<Rational, unsigned>>>& factors() const { return factors_; }
  bool is_one() const { return poly_ == Polynomial(Rational(1)); }

  Rational evaluate(const Integer& n) const { return poly_.evaluate(Rational(n)); }

  /// Largest p-valuation of a coefficient denominator (0 when all
  /// denominators are coprime to p). Governs tail cuts for evaluation.
  long denominator_deficit(const Integer& p) const;

  std::string to_string() const { return poly_.to_string("n"); }

 private:
  Polynomial poly_;
  std::optional<std::vector<std::pair<Rational, unsigned>>> factors_;
};

/// The series sum(n! * P(n) * x^n), represented by its coefficient law.
class FactorialSeries {
 public:
  FactorialSeries() = default;
  explicit FactorialSeries(FactorialPolynomial P) : P_(std::move(P)) {}

  const FactorialPolynomial& law() const { return P_; }
  Rational coefficient(unsigned long n) const {
    return Rational(factorial(n)) * P_.evaluate(Integer(static_cast<long>(n)));
  }

  /// Exact expansion through order N.
  TruncatedSeries expand(long N) const;

  std::string to_string() const { return "sum n!*(" + P_.to_string() + ")*x^n"; }

 private:
  FactorialPolynomial P_;
};

/// v_p(n!) via Legendre's formula.
long legendre_valuation(const Integer& n, const Integer& p);

/// Smallest n0 such that v_p(n!) >= bound for every n >= n0.
unsigned long legendre_cut(const Integer& p, long bound);

/// Rigorous p-adic evaluation of F at x in Z_p: sums terms until Legendre's
/// formula (minus the coefficient denominator deficit) guarantees the tail is
/// 0 mod p^target; the result carries exactly that guarantee.
PadicNumber evaluate_padic(const FactorialSeries& F, const PadicNumber& x, long target);

/// Recentered coefficient b_n of F0 around beta in Z_p:
/// b_n = sum_{k>=n} (-1)^(k-n) k! C(k,n) beta^(k-n), to guaranteed precision
/// `target`. Only the plain factorial series (P = 1) admits this expansion.
PadicNumber recenter(const FactorialSeries& F, const Rational& beta, unsigned long n,
                     const PadicContext& ctx, long target);

}  // namespace padiclab
