#pragma once

#include <string>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

/// Working context for Q_p arithmetic: the prime and the default relative
/// precision (number of p-adic digits) attached to freshly embedded values.
struct PadicContext {
  PadicContext(Integer prime, long precision);

  Integer p;
  long precision;

  bool operator==(const PadicContext& o) const { return p == o.p && precision == o.precision; }
  bool operator!=(const PadicContext& o) const { return !(*this == o); }
};

/// Element of Q_p at capped absolute precision.
///
/// A value is one of:
///   - exact zero,
///   - "zero to precision M": known to be congruent to 0 mod p^M with the
///     valuation undetermined (the residue of a cancellation),
///   - regular: u * p^v with unit u coprime to p, 0 < u < p^(abs - v),
///     known modulo p^abs.
///
/// Operations degrade the absolute precision conservatively: addition keeps
/// the minimum absolute precision of the operands, multiplication the
/// minimum relative precision. All values are immutable after construction.
class PadicNumber {
 public:
  static PadicNumber exact_zero(const PadicContext& ctx);
  static PadicNumber zero_to_precision(const PadicContext& ctx, long abs_prec);
  static PadicNumber from_rational(const PadicContext& ctx, const Rational& q);
  static PadicNumber from_integer(const PadicContext& ctx, const Integer& n);
  /// u * p^v known mod p^(v + rel_prec); u need not be reduced or coprime to p.
  static PadicNumber from_unit(const PadicContext& ctx, const Integer& u, long v, long rel_prec);

  const PadicContext& context() const { return ctx_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_zero_to_precision() const { return kind_ == Kind::ZeroToPrec; }
  /// Indistinguishable from zero at its own precision (either zero kind).
  bool is_zero_like() const { return kind_ != Kind::Regular; }

  /// Valuation of a regular value; throws for both zero kinds.
  long valuation() const;
  /// Unit part of a regular value.
  const Integer& unit() const;
  /// Absolute precision: the value is known modulo p^abs_precision().
  /// Throws for exact zero (which is known exactly).
  long abs_precision() const;
  /// |x|_p as an exact rational; 0 for exact zero. Throws precision_error for
  /// a zero-to-precision marker, whose norm is only bounded, not known.
  Rational norm() const;

  PadicNumber operator-() const;
  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const;
  PadicNumber pow(unsigned long e) const;

  /// Congruence at the joint precision: values compare equal iff they agree
  /// modulo p^min(abs precisions).
  bool operator==(const PadicNumber& o) const;
  bool operator!=(const PadicNumber& o) const { return !(*this == o); }

  /// Same value re-tagged with a lower absolute precision (a guarantee tag);
  /// throws if asked to *raise* the precision.
  PadicNumber reduced_to(long abs_prec) const;

  /// p-adic digits of the value from exponent valuation() upward, one per
  /// position up to the absolute precision.
  std::vector<long> digits() const;
  /// Rendering as u*p^v + O(p^N).
  std::string to_string() const;

 private:
  enum class Kind { ExactZero, ZeroToPrec, Regular };
  explicit PadicNumber(const PadicContext& ctx) : ctx_(ctx) {}

  void require_same_context(const PadicNumber& o) const;

  PadicContext ctx_;
  Kind kind_ = Kind::ExactZero;
  long val_ = 0;       // regular only
  Integer unit_ = 0;   // regular only
  long abs_prec_ = 0;  // regular and zero-to-precision
};

/// p-adic exponential sum(z^n / n!). Requires |z|_p < p^(-1/(p-1)), i.e.
/// valuation >= 1 for odd p and >= 2 for p = 2; violations are reported as
/// domain errors, never silently computed.
PadicNumber padic_exp(const PadicNumber& z);

}  // namespace padiclab
