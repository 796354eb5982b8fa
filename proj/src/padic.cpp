#include "padiclab/padic.hpp"

#include <sstream>

namespace padiclab {

PadicContext::PadicContext(Integer prime, long prec) : p(std::move(prime)), precision(prec) {
  if (!is_prime(p)) throw domain_error("context prime " + p.get_str() + " fails primality check");
  if (precision < 1) throw domain_error("context precision must be >= 1");
}

PadicNumber PadicNumber::exact_zero(const PadicContext& ctx) { return PadicNumber(ctx); }

PadicNumber PadicNumber::zero_to_precision(const PadicContext& ctx, long abs_prec) {
  PadicNumber r(ctx);
  r.kind_ = Kind::ZeroToPrec;
  r.abs_prec_ = abs_prec;
  return r;
}

PadicNumber PadicNumber::from_unit(const PadicContext& ctx, const Integer& u, long v, long rel_prec) {
  if (rel_prec < 1) throw precision_error("relative precision must be >= 1");
  Integer modulus = pow_integer(ctx.p, static_cast<unsigned long>(rel_prec));
  Integer reduced = mod_positive(u, modulus);
  if (reduced == 0) return zero_to_precision(ctx, v + rel_prec);
  long extra = valuation(reduced, ctx.p);
  if (extra > 0) {
    v += extra;
    rel_prec -= extra;
    if (rel_prec <= 0) return zero_to_precision(ctx, v);
    Integer q;
    mpz_divexact(q.get_mpz_t(), reduced.get_mpz_t(), pow_integer(ctx.p, static_cast<unsigned long>(extra)).get_mpz_t());
    reduced = mod_positive(q, pow_integer(ctx.p, static_cast<unsigned long>(rel_prec)));
    if (reduced == 0) return zero_to_precision(ctx, v + rel_prec);
  }
  PadicNumber r(ctx);
  r.kind_ = Kind::Regular;
  r.val_ = v;
  r.unit_ = reduced;
  r.abs_prec_ = v + rel_prec;
  return r;
}

PadicNumber PadicNumber::from_rational(const PadicContext& ctx, const Rational& q) {
  if (q == 0) return exact_zero(ctx);
  Integer num = q.get_num(), den = q.get_den();
  long vn = valuation(num, ctx.p);
  long vd = valuation(den, ctx.p);
  Integer pn = pow_integer(ctx.p, static_cast<unsigned long>(vn));
  Integer pd = pow_integer(ctx.p, static_cast<unsigned long>(vd));
  Integer un, ud;
  mpz_divexact(un.get_mpz_t(), num.get_mpz_t(), pn.get_mpz_t());
  mpz_divexact(ud.get_mpz_t(), den.get_mpz_t(), pd.get_mpz_t());
  Integer modulus = pow_integer(ctx.p, static_cast<unsigned long>(ctx.precision));
  Integer u = mod_positive(un * mod_inverse(ud, modulus), modulus);
  return from_unit(ctx, u, vn - vd, ctx.precision);
}

PadicNumber PadicNumber::from_integer(const PadicContext& ctx, const Integer& n) {
  return from_rational(ctx, Rational(n));
}

void PadicNumber::require_same_context(const PadicNumber& o) const {
  if (ctx_.p != o.ctx_.p)
    throw context_mismatch("operation mixes p=" + ctx_.p.get_str() + " and p=" + o.ctx_.p.get_str());
}

long PadicNumber::valuation() const {
  if (kind_ == Kind::ExactZero) throw domain_error("exact zero has no valuation");
  if (kind_ == Kind::ZeroToPrec)
    throw precision_error("valuation undetermined: zero to precision " + std::to_string(abs_prec_));
  return val_;
}

const Integer& PadicNumber::unit() const {
  if (kind_ != Kind::Regular) throw domain_error("zero value has no unit part");
  return unit_;
}

long PadicNumber::abs_precision() const {
  if (kind_ == Kind::ExactZero) throw domain_error("exact zero is known exactly");
  return abs_prec_;
}

Rational PadicNumber::norm() const {
  if (kind_ == Kind::ExactZero) return Rational(0);
  if (kind_ == Kind::ZeroToPrec)
    throw precision_error("norm undetermined: zero to precision " + std::to_string(abs_prec_));
  return pow_rational(Rational(ctx_.p), -val_);
}

PadicNumber PadicNumber::operator-() const {
  if (kind_ != Kind::Regular) return *this;
  return from_unit(ctx_, pow_integer(ctx_.p, static_cast<unsigned long>(abs_prec_ - val_)) - unit_,
                   val_, abs_prec_ - val_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  require_same_context(o);
  if (kind_ == Kind::ExactZero) return o;
  if (o.kind_ == Kind::ExactZero) return *this;
  long abs = std::min(abs_prec_, o.abs_prec_);
  if (kind_ == Kind::ZeroToPrec || o.kind_ == Kind::ZeroToPrec) {
    const PadicNumber& reg = kind_ == Kind::Regular ? *this : o;
    if (reg.kind_ != Kind::Regular || reg.val_ >= abs) return zero_to_precision(ctx_, abs);
    return from_unit(ctx_, reg.unit_, reg.val_, abs - reg.val_);
  }
  long w = std::min(val_, o.val_);
  if (w >= abs) return zero_to_precision(ctx_, abs);
  Integer a = unit_ * pow_integer(ctx_.p, static_cast<unsigned long>(val_ - w));
  Integer b = o.unit_ * pow_integer(ctx_.p, static_cast<unsigned long>(o.val_ - w));
  return from_unit(ctx_, a + b, w, abs - w);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  require_same_context(o);
  if (kind_ == Kind::ExactZero || o.kind_ == Kind::ExactZero) return exact_zero(ctx_);
  if (kind_ == Kind::ZeroToPrec || o.kind_ == Kind::ZeroToPrec) {
    // 0 mod p^M times u*p^v is 0 mod p^(M+v); two markers compound.
    long bound_a = kind_ == Kind::ZeroToPrec ? abs_prec_ : val_;
    long bound_b = o.kind_ == Kind::ZeroToPrec ? o.abs_prec_ : o.val_;
    return zero_to_precision(ctx_, bound_a + bound_b);
  }
  long rel = std::min(abs_prec_ - val_, o.abs_prec_ - o.val_);
  return from_unit(ctx_, unit_ * o.unit_, val_ + o.val_, rel);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
  require_same_context(o);
  if (o.kind_ == Kind::ExactZero) throw division_by_zero("p-adic division by exact zero");
  if (o.kind_ == Kind::ZeroToPrec)
    throw precision_error("division by a value indistinguishable from zero (zero to precision " +
                          std::to_string(o.abs_prec_) + ")");
  if (kind_ == Kind::ExactZero) return exact_zero(ctx_);
  if (kind_ == Kind::ZeroToPrec) return zero_to_precision(ctx_, abs_prec_ - o.val_);
  long rel = std::min(abs_prec_ - val_, o.abs_prec_ - o.val_);
  Integer modulus = pow_integer(ctx_.p, static_cast<unsigned long>(rel));
  return from_unit(ctx_, unit_ * mod_inverse(o.unit_, modulus), val_ - o.val_, rel);
}

PadicNumber PadicNumber::pow(unsigned long e) const {
  PadicNumber acc = from_integer(ctx_, 1);
  PadicNumber base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool PadicNumber::operator==(const PadicNumber& o) const {
  require_same_context(o);
  if (kind_ == Kind::ExactZero && o.kind_ == Kind::ExactZero) return true;
  // Joint precision: exact zero imposes no cap.
  long m;
  if (kind_ == Kind::ExactZero)
    m = o.abs_prec_;
  else if (o.kind_ == Kind::ExactZero)
    m = abs_prec_;
  else
    m = std::min(abs_prec_, o.abs_prec_);
  auto zero_mod_m = [&](const PadicNumber& x) {
    return x.kind_ == Kind::ExactZero || (x.kind_ == Kind::ZeroToPrec ? x.abs_prec_ >= m : x.val_ >= m);
  };
  bool za = zero_mod_m(*this), zb = zero_mod_m(o);
  if (za || zb) return za && zb;
  if (val_ != o.val_) return false;
  long rel = m - val_;
  Integer modulus = pow_integer(ctx_.p, static_cast<unsigned long>(rel));
  return mod_positive(unit_ - o.unit_, modulus) == 0;
}

PadicNumber PadicNumber::reduced_to(long abs_prec) const {
  if (kind_ == Kind::ExactZero) return zero_to_precision(ctx_, abs_prec);
  if (abs_prec > abs_prec_)
    throw precision_error("cannot raise absolute precision from " + std::to_string(abs_prec_) +
                          " to " + std::to_string(abs_prec));
  if (kind_ == Kind::ZeroToPrec) return zero_to_precision(ctx_, abs_prec);
  if (val_ >= abs_prec) return zero_to_precision(ctx_, abs_prec);
  return from_unit(ctx_, unit_, val_, abs_prec - val_);
}

std::vector<long> PadicNumber::digits() const {
  if (kind_ != Kind::Regular) return {};
  std::vector<long> out;
  Integer u = unit_;
  Integer q, r;
  for (long i = val_; i < abs_prec_; ++i) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), ctx_.p.get_mpz_t());
    out.push_back(r.get_si());
    u = q;
  }
  return out;
}

std::string PadicNumber::to_string() const {
  std::ostringstream out;
  if (kind_ == Kind::ExactZero) return "0";
  if (kind_ == Kind::ZeroToPrec) {
    out << "O(" << ctx_.p.get_str() << "^" << abs_prec_ << ")";
    return out.str();
  }
  out << unit_.get_str();
  if (val_ != 0) out << "*" << ctx_.p.get_str() << "^" << val_;
  out << " + O(" << ctx_.p.get_str() << "^" << abs_prec_ << ")";
  return out.str();
}

PadicNumber padic_exp(const PadicNumber& z) {
  const PadicContext& ctx = z.context();
  long min_val = ctx.p == 2 ? 2 : 1;
  if (z.is_exact_zero()) return PadicNumber::from_integer(ctx, 1);
  if (z.is_zero_to_precision()) {
    long m = z.abs_precision();
    if (m < min_val)
      throw domain_error("padic_exp argument valuation below convergence threshold");
    // exp(z) = 1 + O(p^m)
    return PadicNumber::from_unit(ctx, 1, 0, m);
  }
  long v = z.valuation();
  if (v < min_val)
    throw domain_error("padic_exp requires |z|_p < p^(-1/(p-1)): valuation " + std::to_string(v) +
                       " too small for p=" + ctx.p.get_str());
  long target = z.abs_precision();
  // v_p(z^n/n!) >= n*v - (n-1)/(p-1), strictly increasing in n; sum until the
  // bound clears the target absolute precision.
  long pm1 = ctx.p.get_si() - 1;
  unsigned long cut = 1;
  while (static_cast<long>(cut) * v - (static_cast<long>(cut) - 1) / pm1 < target) ++cut;
  PadicNumber term = PadicNumber::from_integer(ctx, 1);
  PadicNumber acc = PadicNumber::from_integer(ctx, 1);
  for (unsigned long n = 1; n < cut; ++n) {
    term = term * z / PadicNumber::from_integer(ctx, Integer(static_cast<long>(n)));
    acc = acc + term;
  }
  return acc;
}

}  // namespace padiclab
