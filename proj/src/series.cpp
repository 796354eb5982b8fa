#include "padiclab/series.hpp"

#include <algorithm>
#include <sstream>

namespace padiclab {

namespace {
long clamp_order(long v) { return std::min(v, kExactOrder); }
}  // namespace

TruncatedSeries::TruncatedSeries(long known_order) : lo_(0), hi_(known_order) {
  if (hi_ < -1) throw order_error("series with empty known range");
}

TruncatedSeries::TruncatedSeries(long offset, std::vector<Rational> coeffs, long known_order)
    : lo_(offset), hi_(known_order), coeffs_(std::move(coeffs)) {
  if (stored_end() > hi_) throw order_error("stored coefficients exceed the known order");
  normalize();
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p) {
  return TruncatedSeries(0, p.coefficients(), kExactOrder);
}

TruncatedSeries TruncatedSeries::monomial(long k, const Rational& c) {
  return TruncatedSeries(k, {c}, kExactOrder);
}

void TruncatedSeries::normalize() {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
    lo_ += static_cast<long>(skip);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lo_ = std::min(lo_, hi_);
}

Rational TruncatedSeries::coeff(long n) const {
  if (n > hi_)
    throw order_error("coefficient of x^" + std::to_string(n) +
                      " requested beyond known order " + std::to_string(hi_));
  if (n < lo_ || n > stored_end()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(n - lo_)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  long hi = std::min(hi_, o.hi_);
  long lo = std::min(lo_, o.lo_);
  long end = std::min(hi, std::max(stored_end(), o.stored_end()));
  if (hi < lo) throw order_error("series addition with empty known range");
  std::vector<Rational> v;
  if (end >= lo) {
    v.assign(static_cast<std::size_t>(end - lo) + 1, Rational(0));
    for (long n = lo; n <= end; ++n) {
      Rational a = (n >= lo_ && n <= stored_end()) ? coeffs_[static_cast<std::size_t>(n - lo_)] : Rational(0);
      Rational b = (n >= o.lo_ && n <= o.stored_end()) ? o.coeffs_[static_cast<std::size_t>(n - o.lo_)] : Rational(0);
      v[static_cast<std::size_t>(n - lo)] = a + b;
    }
  }
  return TruncatedSeries(lo, std::move(v), hi);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  // Propagated known order: a coefficient of the product at exponent m needs
  // every factor coefficient down to m - lo of the other operand.
  long hi = clamp_order(std::min(hi_ + o.lo_, o.hi_ + lo_));
  long lo = lo_ + o.lo_;
  if (hi < lo) throw order_error("series product with empty known range");
  if (coeffs_.empty() || o.coeffs_.empty()) return TruncatedSeries(lo, {}, hi);
  long end = std::min(hi, stored_end() + o.stored_end());
  std::vector<Rational> v(static_cast<std::size_t>(end - lo) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    long ei = lo_ + static_cast<long>(i);
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      long e = ei + o.lo_ + static_cast<long>(j);
      if (e > end) break;
      v[static_cast<std::size_t>(e - lo)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return TruncatedSeries(lo, std::move(v), hi);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  TruncatedSeries r(*this);
  if (s == 0) {
    r.coeffs_.clear();
    return r;
  }
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  long hi = hi_ == kExactOrder ? kExactOrder : hi_ - 1;
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i] = coeffs_[i] * Rational(lo_ + static_cast<long>(i));
  return TruncatedSeries(lo_ - 1, std::move(v), hi);
}

TruncatedSeries TruncatedSeries::shift_by_power(long m) const {
  long hi = hi_ == kExactOrder ? kExactOrder : hi_ + m;
  return TruncatedSeries(lo_ + m, coeffs_, hi);
}

TruncatedSeries TruncatedSeries::mul_polynomial(const Polynomial& p) const {
  if (p.is_zero()) return TruncatedSeries(lo_, {}, hi_);
  return *this * TruncatedSeries::from_polynomial(p);
}

TruncatedSeries TruncatedSeries::truncated(long new_known_order) const {
  if (new_known_order >= hi_) return *this;
  std::vector<Rational> v;
  if (new_known_order >= lo_) {
    long end = std::min(new_known_order, stored_end());
    if (end >= lo_) v.assign(coeffs_.begin(), coeffs_.begin() + (end - lo_ + 1));
  }
  long lo = std::min(lo_, new_known_order);
  return TruncatedSeries(lo, std::move(v), new_known_order);
}

bool TruncatedSeries::is_zero_through(long through) const {
  if (through > hi_)
    throw order_error("zero check through order " + std::to_string(through) +
                      " exceeds known order " + std::to_string(hi_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (lo_ + static_cast<long>(i) > through) break;
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<std::pair<long, Rational>> TruncatedSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::make_pair(lo_ + static_cast<long>(i), coeffs_[i]);
  return std::nullopt;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o, long through) const {
  for (long n = std::min(lo_, o.lo_); n <= through; ++n)
    if (coeff(n) != o.coeff(n)) return false;
  return true;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    long e = lo_ + static_cast<long>(i);
    if (!first) out << " + ";
    out << coeffs_[i].get_str();
    if (e != 0) out << "*" << var << "^" << e;
    first = false;
  }
  if (first) out << "0";
  if (hi_ != kExactOrder) out << " + O(" << var << "^" << hi_ + 1 << ")";
  return out.str();
}

}  // namespace padiclab
