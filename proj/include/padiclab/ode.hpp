#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/factorial_series.hpp"
#include "padiclab/rational_function.hpp"
#include "padiclab/series.hpp"

namespace padiclab {

/// Linear differential operator of order <= 2 with polynomial coefficients
/// and a polynomial right-hand side:
///   c_m w^(m) + ... + c_1 w' + c_0 w = rhs.
/// Stored denominator-cleared and content-normalized (integer-primitive
/// coefficients, leading coefficient of c_m positive).
class LinearODE {
 public:
  LinearODE(std::vector<Polynomial> coeffs, Polynomial rhs);
  /// Clears denominators first (coefficients and rhs share one multiplier).
  static LinearODE from_rational(const std::vector<RationalFunction>& coeffs,
                                 const RationalFunction& rhs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& coeff(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& rhs() const { return rhs_; }
  bool homogeneous() const { return rhs_.is_zero(); }

  bool operator==(const LinearODE& o) const { return coeffs_ == o.coeffs_ && rhs_ == o.rhs_; }
  bool operator!=(const LinearODE& o) const { return !(*this == o); }

  /// Divides every coefficient and the rhs by their common x^k factor.
  LinearODE reduced_by_common_monomial() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Polynomial> coeffs_;
  Polynomial rhs_;
};

/// Residual series sum c_j * s^(j) - rhs with propagated known order.
TruncatedSeries apply(const LinearODE& ode, const TruncatedSeries& s);

struct VerifyResult {
  bool verified = false;
  long checked_through = 0;
  std::optional<long> counterexample_exponent;
  Rational counterexample_value;
};

/// Exact formal verification: residual coefficients must vanish identically
/// through order N. A failure is reported as a value, not an error.
VerifyResult verify_formal(const LinearODE& ode, const FactorialSeries& F, long N);
VerifyResult verify_formal(const LinearODE& ode, const TruncatedSeries& s, long N);

/// First-order equation data A(x) F' + B(x) F = C(x) in the rational-function
/// view needed by the construction procedures.
struct FirstOrderEquation {
  RationalFunction A, B, C;
  LinearODE cleared() const;
};

/// One derivative step: from A F' + B F = C builds the pair (A1, B1) with
/// A1 = -A*B/B', B1 = (B'A - A'B - B^2)/B', so that A1 G' + B1 G = C holds
/// for G = F'. Requires B' != 0.
FirstOrderEquation prop1_step(const FirstOrderEquation& eq);

/// Iterates prop1_step mu times; the result annihilates the series whose
/// coefficients are n! * prod_{i=1..mu} (n+i)^2 * P(n+mu).
LinearODE prop1_iterate(const FirstOrderEquation& eq, unsigned mu);
FirstOrderEquation prop1_iterate_rational(FirstOrderEquation eq, unsigned mu);

/// The differentiated homogeneous companion A F'' + (A' + B) F' + B' F = 0.
LinearODE first_to_second(const FirstOrderEquation& eq);

/// Equation satisfied by G = x^m F when A F' + B F = C:
/// (A/x^m) G' + (B/x^m - m A/x^(m+1)) G = C, denominators cleared.
LinearODE prop2_shift(const FirstOrderEquation& eq, unsigned m);
FirstOrderEquation prop2_shift_rational(const FirstOrderEquation& eq, unsigned m);

/// The combined second-order family
///   x^2 w'' + (3x-1) w' + w + R(x) [x^2 w' + (x-1) w + 1] = 0,
/// denominators cleared; satisfied by sum n! x^n for every R.
LinearODE combine(const RationalFunction& R);

/// Truncated power-series solution space of a homogeneous equation.
struct SolutionSpace {
  int dimension = 0;
  std::vector<TruncatedSeries> basis;
  /// Coefficient polynomials of the derived recurrence: shift -> q(t) such
  /// that sum_shift q_shift(t) * a_{t+shift} = 0 for all t.
  std::map<long, Polynomial> recurrence;
  std::string recurrence_text;
  /// Indices t where the leading recurrence coefficient vanishes.
  std::vector<long> degenerate_indices;
};

/// Substitutes sum a_n x^n, derives the linear recurrence on the a_n, and
/// solves it exactly through order N; returns the dimension and a reduced
/// basis of the truncated solution space.
SolutionSpace formal_solution_space(const LinearODE& ode, long N);

/// Variable inversion x -> 1/y for checks at infinity: returns the equation
/// satisfied by v(y) = w(1/y), with polynomial coefficients in y.
LinearODE invert_variable(const LinearODE& ode);

struct W1Report {
  VerifyResult formal;                  // Laurent-side residual in y = 1/x
  long pointwise_zero_to_precision;     // residual known to vanish mod p^this
};

/// Checks the non-analytic solution w1(x) = (1/x) exp(-1/x) of
/// x^2 w'' + (3x-1) w' + w = 0: formally as a series in y = 1/x through
/// order N, and pointwise at x in Q_p with |x|_p > 1 (default x = 1/p).
W1Report verify_w1(const Integer& p, long N, long pointwise_precision,
                   std::optional<Rational> x = std::nullopt);

/// Coefficient of a quadratic Lagrangian: a rational function plus an
/// optional logarithmic part lambda*log t, so the derivative r' + lambda/t
/// stays rational.
struct LogAugmentedCoefficient {
  RationalFunction r;
  Rational log_multiplier = Rational(0);
  RationalFunction derivative() const;
};

/// L(q', q, t) = a q'^2 + 2b q'q + c q^2 + 2d q' + 2e q + f.
/// Only b may carry a log term.
struct QuadraticLagrangian {
  LogAugmentedCoefficient a, b, c, d, e, f;
  void validate() const;
};

/// Stationarity equation a q'' + a' q' + (b' - c) q = e - d', denominators
/// cleared to polynomial form. Requires a != 0.
LinearODE euler_lagrange(const QuadraticLagrangian& L);

/// The Lagrangian t^2/2 q'^2 + (t^3/3 + 2 log t + 1/t + C) q'q + t^2/2 q^2
/// - (1/t) q' + (1/t) q, for an arbitrary constant C.
QuadraticLagrangian lagrangian_6_5(const Rational& C);

struct ProductCheck {
  bool product_zero = false;
  long checked_through = 0;
  std::vector<bool> factor_vanishes;
  std::optional<std::pair<long, Rational>> product_counterexample;
};

/// Evaluates each first-order bracket A u' + B u - C on u, multiplies the
/// bracket values as series, and reports whether the product vanishes and
/// which single bracket does.
ProductCheck nonlinear_product_check(const std::vector<LinearODE>& factors,
                                     const FactorialSeries& u, long N);

}  // namespace padiclab
