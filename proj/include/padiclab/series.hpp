#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiclab/polynomial.hpp"

namespace padiclab {

/// Known-order sentinel for series that are exact (polynomials, Laurent
/// polynomials): every coefficient above the stored range is exactly zero.
inline constexpr long kExactOrder = 1000000000L;

/// Truncated formal power/Laurent series over Q with explicit known-order
/// bookkeeping.
///
/// A series knows its coefficients for exponents `lo() .. known_order()`:
/// below lo() they are exactly zero, above known_order() they are unknown and
/// any access is an error, never a silent truncation. Arithmetic propagates
/// the minimum known order of the operands (adjusted for offset shifts).
class TruncatedSeries {
 public:
  /// Zero series known through `known_order`.
  explicit TruncatedSeries(long known_order);
  /// Coefficients for exponents offset, offset+1, ... (the vector may be
  /// shorter than the known range; missing entries are zero).
  TruncatedSeries(long offset, std::vector<Rational> coeffs, long known_order);

  static TruncatedSeries from_polynomial(const Polynomial& p);
  /// x^k as an exact series (k may be negative).
  static TruncatedSeries monomial(long k, const Rational& c = Rational(1));

  long lo() const { return lo_; }
  long known_order() const { return hi_; }
  /// Coefficient of x^n; throws order_error for n > known_order().
  Rational coeff(long n) const;

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;

  /// Term-by-term formal derivative: x^n -> n*x^(n-1).
  TruncatedSeries derivative() const;
  /// Multiplication by x^m (m may be negative).
  TruncatedSeries shift_by_power(long m) const;
  TruncatedSeries mul_polynomial(const Polynomial& p) const;
  /// Restrict the known order (never extends it).
  TruncatedSeries truncated(long new_known_order) const;

  /// True iff every known coefficient with exponent <= through vanishes;
  /// requires through <= known_order().
  bool is_zero_through(long through) const;
  /// Lowest known exponent with nonzero coefficient, if any.
  std::optional<std::pair<long, Rational>> first_nonzero() const;

  bool agrees_with(const TruncatedSeries& o, long through) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  long stored_end() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }

  long lo_ = 0;   // lowest possibly-nonzero exponent
  long hi_ = 0;   // highest known exponent
  std::vector<Rational> coeffs_;
};

}  // namespace padiclab
