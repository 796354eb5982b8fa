#include "padiclab/factorial_series.hpp"

namespace padiclab {

FactorialPolynomial FactorialPolynomial::from_monic_coefficients(std::vector<Rational> low_coeffs) {
  low_coeffs.push_back(Rational(1));
  return FactorialPolynomial(Polynomial(std::move(low_coeffs)));
}

FactorialPolynomial FactorialPolynomial::from_product(
    const std::vector<std::pair<Rational, unsigned>>& factors) {
  Polynomial p(Rational(1));
  for (const auto& [alpha, mult] : factors) p = p * Polynomial({alpha, Rational(1)}).pow(mult);
  FactorialPolynomial r{p};
  r.factors_ = factors;
  return r;
}

long FactorialPolynomial::denominator_deficit(const Integer& p) const {
  long d = 0;
  for (const auto& c : poly_.coefficients()) {
    if (c == 0) continue;
    d = std::max(d, valuation(Integer(c.get_den()), p));
  }
  return d;
}

TruncatedSeries FactorialSeries::expand(long N) const {
  if (N < 0) throw domain_error("expansion order must be >= 0");
  std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
  Integer fact = 1;
  for (long n = 0; n <= N; ++n) {
    if (n > 0) fact *= n;
    v[static_cast<std::size_t>(n)] = Rational(fact) * P_.evaluate(Integer(n));
  }
  return TruncatedSeries(0, std::move(v), N);
}

long legendre_valuation(const Integer& n, const Integer& p) {
  if (n < 0) throw domain_error("Legendre valuation needs n >= 0");
  long total = 0;
  Integer q = n;
  while (q > 0) {
    q /= p;
    total += static_cast<long>(q.get_ui());
  }
  return total;
}

unsigned long legendre_cut(const Integer& p, long bound) {
  if (bound <= 0) return 0;
  // v_p(n!) >= (n - 1 - (p-2)*log_p(n))/(p-1) is monotone; walk upward. The
  // walk is cheap at the working sizes (bound <= a few hundred).
  unsigned long n = 0;
  while (legendre_valuation(Integer(static_cast<long>(n)), p) < bound) ++n;
  return n;
}

PadicNumber evaluate_padic(const FactorialSeries& F, const PadicNumber& x, long target) {
  const PadicContext& ctx = x.context();
  if (target < 1) throw domain_error("target precision must be >= 1");
  long d = F.law().denominator_deficit(ctx.p);
  if (x.is_exact_zero()) {
    // Only the n = 0 term survives; the value is exact.
    PadicContext wide(ctx.p, std::max(ctx.precision, target));
    return PadicNumber::from_rational(wide, F.coefficient(0));
  }
  if (x.is_zero_to_precision())
    throw precision_error("evaluation point is only known to be 0 mod p^" +
                          std::to_string(x.abs_precision()));
  if (x.valuation() < 0)
    throw domain_error("evaluation point lies outside Z_p (valuation " +
                       std::to_string(x.valuation()) + ")");
  if (x.abs_precision() < target + d)
    throw precision_error("evaluation point carries " + std::to_string(x.abs_precision()) +
                          " digits; " + std::to_string(target + d) + " required");
  // Cut index from Legendre's formula, never heuristically: beyond it every
  // term n!*P(n)*x^n has valuation >= target.
  unsigned long cut = legendre_cut(ctx.p, target + d);
  PadicNumber acc = PadicNumber::from_rational(ctx, F.coefficient(0));
  PadicNumber xpow = PadicNumber::from_integer(ctx, 1);
  for (unsigned long n = 1; n < cut; ++n) {
    xpow = xpow * x;
    Rational c = F.coefficient(n);
    if (c == 0) continue;
    acc = acc + PadicNumber::from_rational(ctx, c) * xpow;
  }
  return acc.reduced_to(target);
}

PadicNumber recenter(const FactorialSeries& F, const Rational& beta, unsigned long n,
                     const PadicContext& ctx, long target) {
  if (!F.law().is_one())
    throw domain_error("recentering is defined for the plain factorial series (P = 1)");
  if (beta != 0 && valuation(beta, ctx.p) < 0)
    throw domain_error("recentering base point lies outside the unit ball");
  if (target < 1) throw domain_error("target precision must be >= 1");
  // Terms are k! C(k,n) beta^(k-n): |.|_p <= |k!|_p, so Legendre governs the
  // cut exactly as for evaluation.
  unsigned long cut = std::max(legendre_cut(ctx.p, target), n + 1);
  Rational acc(0);
  Rational beta_pow(1);
  int sign = 1;
  for (unsigned long k = n; k < cut; ++k) {
    Rational term = Rational(factorial(k) * binomial(k, n)) * beta_pow;
    acc += sign > 0 ? term : -term;
    beta_pow *= beta;
    sign = -sign;
  }
  return PadicNumber::from_rational(PadicContext(ctx.p, std::max(ctx.precision, target)), acc)
      .reduced_to(target);
}

}  // namespace padiclab
