#include "padiclab/ode.hpp"

#include <algorithm>
#include <sstream>

namespace padiclab {

namespace {

// Scale a polynomial system to primitive integer coefficients with the
// leading coefficient of the top polynomial positive.
void content_normalize(std::vector<Polynomial>& polys, Polynomial& rhs) {
  Integer den_lcm = 1;
  auto absorb_dens = [&](const Polynomial& p) {
    for (const auto& c : p.coefficients()) {
      if (c == 0) continue;
      Integer d = c.get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
  };
  for (const auto& p : polys) absorb_dens(p);
  absorb_dens(rhs);

  Integer num_gcd = 0;
  auto absorb_nums = [&](const Polynomial& p) {
    for (const auto& c : p.coefficients()) {
      if (c == 0) continue;
      Integer n = Integer(c.get_num()) * den_lcm / Integer(c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  };
  for (const auto& p : polys) absorb_nums(p);
  absorb_nums(rhs);
  if (num_gcd == 0) num_gcd = 1;

  Rational scale = make_rational(den_lcm, num_gcd);
  if (!polys.empty() && !polys.back().is_zero() && polys.back().leading() * scale < 0) scale = -scale;
  for (auto& p : polys) p = p * scale;
  rhs = rhs * scale;
}

}  // namespace

LinearODE::LinearODE(std::vector<Polynomial> coeffs, Polynomial rhs)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {
  if (coeffs_.empty() || coeffs_.size() > 3)
    throw domain_error("linear ODE must have order 0, 1 or 2");
  if (coeffs_.back().is_zero()) throw domain_error("leading ODE coefficient vanishes");
  content_normalize(coeffs_, rhs_);
}

LinearODE LinearODE::from_rational(const std::vector<RationalFunction>& coeffs,
                                   const RationalFunction& rhs) {
  std::vector<RationalFunction> all = coeffs;
  all.push_back(rhs);
  auto cleared = clear_denominators(all);
  Polynomial rhs_poly = cleared.polys.back();
  cleared.polys.pop_back();
  return LinearODE(std::move(cleared.polys), std::move(rhs_poly));
}

LinearODE LinearODE::reduced_by_common_monomial() const {
  long k = kExactOrder;
  for (const auto& p : coeffs_)
    if (!p.is_zero()) k = std::min(k, p.order());
  if (!rhs_.is_zero()) k = std::min(k, rhs_.order());
  if (k == kExactOrder || k <= 0) return *this;
  std::vector<Polynomial> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(p.shift_down(k));
  return LinearODE(std::move(c), rhs_.shift_down(k));
}

std::string LinearODE::to_string(const std::string& var) const {
  static const char* kDeriv[] = {"", "'", "''"};
  std::ostringstream out;
  bool first = true;
  for (int j = order(); j >= 0; --j) {
    const Polynomial& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << c.to_string(var) << ")*w" << kDeriv[j];
    first = false;
  }
  out << " = " << rhs_.to_string(var);
  return out.str();
}

TruncatedSeries apply(const LinearODE& ode, const TruncatedSeries& s) {
  TruncatedSeries deriv = s;
  TruncatedSeries acc = deriv.mul_polynomial(ode.coeff(0));
  for (int j = 1; j <= ode.order(); ++j) {
    deriv = deriv.derivative();
    acc = acc + deriv.mul_polynomial(ode.coeff(j));
  }
  acc = acc - TruncatedSeries::from_polynomial(ode.rhs());
  if (acc.known_order() < acc.lo() && acc.known_order() < 0)
    throw order_error("residual known order underflows below 0");
  return acc;
}

namespace {

VerifyResult check_residual(const TruncatedSeries& residual, long N) {
  VerifyResult result;
  result.checked_through = std::min(N, residual.known_order());
  auto bad = residual.first_nonzero();
  if (bad && bad->first <= result.checked_through) {
    result.verified = false;
    result.counterexample_exponent = bad->first;
    result.counterexample_value = bad->second;
  } else {
    result.verified = true;
  }
  return result;
}

}  // namespace

VerifyResult verify_formal(const LinearODE& ode, const TruncatedSeries& s, long N) {
  TruncatedSeries residual = apply(ode, s);
  if (residual.known_order() < N)
    throw order_error("series order supports checks only through " +
                      std::to_string(residual.known_order()) + ", need " + std::to_string(N));
  return check_residual(residual, N);
}

VerifyResult verify_formal(const LinearODE& ode, const FactorialSeries& F, long N) {
  return verify_formal(ode, F.expand(N + ode.order()), N);
}

LinearODE FirstOrderEquation::cleared() const { return LinearODE::from_rational({B, A}, C); }

FirstOrderEquation prop1_step(const FirstOrderEquation& eq) {
  RationalFunction Bp = eq.B.derivative();
  if (Bp.is_zero())
    throw procedure_error("derivative step inapplicable: B' = 0 for B = " + eq.B.to_string());
  FirstOrderEquation out;
  out.A = -(eq.A * eq.B) / Bp;
  out.B = (Bp * eq.A - eq.A.derivative() * eq.B - eq.B * eq.B) / Bp;
  out.C = eq.C;
  return out;
}

FirstOrderEquation prop1_iterate_rational(FirstOrderEquation eq, unsigned mu) {
  for (unsigned step = 0; step < mu; ++step) {
    try {
      eq = prop1_step(eq);
    } catch (const procedure_error& e) {
      throw procedure_error("iteration failed at step " + std::to_string(step + 1) + ": " +
                            e.what());
    }
  }
  return eq;
}

LinearODE prop1_iterate(const FirstOrderEquation& eq, unsigned mu) {
  return prop1_iterate_rational(eq, mu).cleared();
}

LinearODE first_to_second(const FirstOrderEquation& eq) {
  return LinearODE::from_rational({eq.B.derivative(), eq.A.derivative() + eq.B, eq.A},
                                  RationalFunction());
}

FirstOrderEquation prop2_shift_rational(const FirstOrderEquation& eq, unsigned m) {
  if (m == 0) return eq;
  RationalFunction xm(Polynomial::monomial(static_cast<long>(m)));
  RationalFunction xm1(Polynomial::monomial(static_cast<long>(m) + 1));
  FirstOrderEquation out;
  out.A = eq.A / xm;
  out.B = eq.B / xm - RationalFunction(Rational(static_cast<long>(m))) * eq.A / xm1;
  out.C = eq.C;
  return out;
}

LinearODE prop2_shift(const FirstOrderEquation& eq, unsigned m) {
  return prop2_shift_rational(eq, m).cleared();
}

LinearODE combine(const RationalFunction& R) {
  RationalFunction c2(Polynomial::monomial(2));
  RationalFunction c1 = RationalFunction(Polynomial({Rational(-1), Rational(3)})) +
                        R * RationalFunction(Polynomial::monomial(2));
  RationalFunction c0 = RationalFunction(Rational(1)) +
                        R * RationalFunction(Polynomial({Rational(-1), Rational(1)}));
  return LinearODE::from_rational({c0, c1, c2}, -R);
}

namespace {

// Falling factorial (t + shift)(t + shift - 1)...(t + shift - j + 1) as a
// polynomial in t.
Polynomial falling_factorial_poly(long shift, int j) {
  Polynomial acc(Rational(1));
  for (int r = 0; r < j; ++r) acc = acc * Polynomial({Rational(shift - r), Rational(1)});
  return acc;
}

}  // namespace

SolutionSpace formal_solution_space(const LinearODE& ode, long N) {
  if (!ode.homogeneous())
    throw domain_error("solution space analysis requires a homogeneous equation");
  if (N < 10) throw domain_error("solution space order must be >= 10");

  SolutionSpace out;

  // Recurrence coefficients: the x^t coefficient of sum c_j w^(j) is
  // sum over monomials c_{j,i} of (t+j-i)_j * a_{t+j-i}.
  long max_shift = -kExactOrder;
  for (int j = 0; j <= ode.order(); ++j) {
    const Polynomial& c = ode.coeff(j);
    for (long i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) == 0) continue;
      long shift = j - i;
      max_shift = std::max(max_shift, shift);
      Polynomial term = falling_factorial_poly(shift, j) * c.coeff(i);
      auto it = out.recurrence.find(shift);
      if (it == out.recurrence.end())
        out.recurrence.emplace(shift, term);
      else
        it->second = it->second + term;
    }
  }
  for (auto it = out.recurrence.begin(); it != out.recurrence.end();)
    it = it->second.is_zero() ? out.recurrence.erase(it) : std::next(it);
  if (out.recurrence.empty()) throw domain_error("operator is identically zero");
  max_shift = out.recurrence.rbegin()->first;

  {
    std::ostringstream txt;
    bool first = true;
    for (const auto& [shift, q] : out.recurrence) {
      if (!first) txt << " + ";
      txt << "(" << q.to_string("t") << ")*a[t";
      if (shift > 0) txt << "+" << shift;
      if (shift < 0) txt << shift;
      txt << "]";
      first = false;
    }
    txt << " = 0";
    out.recurrence_text = txt.str();
  }

  const Polynomial& lead = out.recurrence.rbegin()->second;
  for (long t = 0; t <= N; ++t)
    if (lead.evaluate(Rational(t)) == 0) out.degenerate_indices.push_back(t);

  // Constraint rows over unknowns a_0..a_N: usable while every referenced
  // index stays within the truncation.
  std::size_t cols = static_cast<std::size_t>(N) + 1;
  std::vector<std::vector<Rational>> rows;
  for (long t = 0;; ++t) {
    long top = t + max_shift;
    if (top > N) break;
    std::vector<Rational> row(cols, Rational(0));
    bool nontrivial = false;
    for (const auto& [shift, q] : out.recurrence) {
      long n = t + shift;
      if (n < 0) continue;
      Rational c = q.evaluate(Rational(t));
      if (c == 0) continue;
      row[static_cast<std::size_t>(n)] += c;
      nontrivial = true;
    }
    if (nontrivial) rows.push_back(std::move(row));
  }

  // Gaussian elimination to reduced row echelon form, exact over Q.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  out.dimension = static_cast<int>(cols - rank);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> vec(cols, Rational(0));
    vec[free_col] = Rational(1);
    for (std::size_t r = 0; r < rank; ++r) vec[pivot_cols[r]] = -rows[r][free_col];
    out.basis.emplace_back(0, std::move(vec), N);
  }
  return out;
}

LinearODE invert_variable(const LinearODE& ode) {
  // With y = 1/x and v(y) = w(1/y): w' = -y^2 v', w'' = y^4 v'' + 2 y^3 v'.
  long D = 0;
  for (const auto& c : ode.coeffs()) D = std::max(D, c.degree());
  D = std::max(D, ode.rhs().degree());
  auto reversed = [&](const Polynomial& p) {
    // y^D * p(1/y)
    std::vector<Rational> v(static_cast<std::size_t>(D) + 1, Rational(0));
    for (long i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(D - i)] = p.coeff(i);
    return Polynomial(std::move(v));
  };
  std::vector<Polynomial> c(static_cast<std::size_t>(ode.order()) + 1);
  if (ode.order() == 2) {
    Polynomial r2 = reversed(ode.coeff(2));
    c[2] = r2 * Polynomial::monomial(4);
    c[1] = r2 * Polynomial::monomial(3) * Rational(2) - reversed(ode.coeff(1)) * Polynomial::monomial(2);
    c[0] = reversed(ode.coeff(0));
  } else if (ode.order() == 1) {
    c[1] = -(reversed(ode.coeff(1)) * Polynomial::monomial(2));
    c[0] = reversed(ode.coeff(0));
  } else {
    c[0] = reversed(ode.coeff(0));
  }
  return LinearODE(std::move(c), reversed(ode.rhs())).reduced_by_common_monomial();
}

W1Report verify_w1(const Integer& p, long N, long pointwise_precision, std::optional<Rational> x) {
  W1Report report;

  // Formal side: w1 = sum (-1)^n x^(-n-1)/n! becomes the power series
  // y*exp(-y) under y = 1/x; apply the inverted equation.
  LinearODE base({Polynomial(Rational(1)), Polynomial({Rational(-1), Rational(3)}),
                  Polynomial::monomial(2)},
                 Polynomial());
  LinearODE inverted = invert_variable(base);
  long order = N + 4;
  std::vector<Rational> w1_coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
  Integer fact = 1;
  for (long n = 0; n + 1 <= order; ++n) {
    if (n > 0) fact *= n;
    w1_coeffs[static_cast<std::size_t>(n + 1)] =
        make_rational(n % 2 == 0 ? Integer(1) : Integer(-1), fact);
  }
  TruncatedSeries w1(0, std::move(w1_coeffs), order);
  report.formal = verify_formal(inverted, w1, N);

  // Pointwise side: evaluate the residual of the original equation at a point
  // of Delta_p through the closed form.
  if (p == 2) throw domain_error("pointwise w1 check needs odd p (exp convergence)");
  PadicContext ctx(p, pointwise_precision + 4);
  Rational x0 = x.value_or(make_rational(Integer(1), p));
  if (x0 == 0 || valuation(x0, p) >= 0)
    throw domain_error("pointwise check requires |x|_p > 1; got x = " + x0.get_str());
  Rational inv_x = Rational(1) / x0;
  PadicNumber E = padic_exp(PadicNumber::from_rational(ctx, -inv_x));
  auto embed = [&](const Rational& q) { return PadicNumber::from_rational(ctx, q); };
  PadicNumber w = embed(inv_x) * E;
  PadicNumber wp = embed(-inv_x * inv_x + inv_x * inv_x * inv_x) * E;
  Rational ix2 = inv_x * inv_x, ix3 = ix2 * inv_x, ix4 = ix3 * inv_x, ix5 = ix4 * inv_x;
  PadicNumber wpp = embed(ix5 - Rational(4) * ix4 + Rational(2) * ix3) * E;
  PadicNumber residual = embed(x0 * x0) * wpp +
                         embed(Rational(3) * x0 - Rational(1)) * wp + w;
  if (residual.is_exact_zero())
    report.pointwise_zero_to_precision = kExactOrder;
  else if (residual.is_zero_to_precision())
    report.pointwise_zero_to_precision = residual.abs_precision();
  else
    report.pointwise_zero_to_precision = residual.valuation();
  return report;
}

RationalFunction LogAugmentedCoefficient::derivative() const {
  RationalFunction d = r.derivative();
  if (log_multiplier != 0)
    d = d + RationalFunction(Polynomial(log_multiplier), Polynomial::x());
  return d;
}

void QuadraticLagrangian::validate() const {
  for (const LogAugmentedCoefficient* coeff : {&a, &c, &d, &e, &f})
    if (coeff->log_multiplier != 0)
      throw domain_error("only the mixed coefficient b may carry a log term");
}

LinearODE euler_lagrange(const QuadraticLagrangian& L) {
  L.validate();
  if (L.a.r.is_zero()) throw domain_error("Lagrangian is not second order: a = 0");
  RationalFunction c2 = L.a.r;
  RationalFunction c1 = L.a.derivative();
  RationalFunction c0 = L.b.derivative() - L.c.r;
  RationalFunction rhs = L.e.r - L.d.derivative();
  return LinearODE::from_rational({c0, c1, c2}, rhs);
}

QuadraticLagrangian lagrangian_6_5(const Rational& C) {
  Polynomial t = Polynomial::x();
  QuadraticLagrangian L;
  L.a.r = RationalFunction(Polynomial::monomial(2, make_rational(1, 2)));
  // 2b = t^3/3 + 2 log t + 1/t + C
  L.b.r = RationalFunction(Polynomial::monomial(3, make_rational(1, 6))) +
          RationalFunction(Polynomial(make_rational(1, 2)), t) +
          RationalFunction(C / 2);
  L.b.log_multiplier = Rational(1);
  L.c.r = L.a.r;
  L.d.r = RationalFunction(Polynomial(make_rational(-1, 2)), t);
  L.e.r = RationalFunction(Polynomial(make_rational(1, 2)), t);
  return L;
}

ProductCheck nonlinear_product_check(const std::vector<LinearODE>& factors,
                                     const FactorialSeries& u, long N) {
  if (factors.empty()) throw domain_error("product check needs at least one factor");
  for (const auto& f : factors)
    if (f.order() != 1) throw domain_error("product factors must be first order");
  ProductCheck out;
  TruncatedSeries s = u.expand(N + 1);
  std::vector<TruncatedSeries> brackets;
  brackets.reserve(factors.size());
  for (const auto& f : factors) brackets.push_back(apply(f, s));
  TruncatedSeries product = brackets[0];
  for (std::size_t i = 1; i < brackets.size(); ++i) product = product * brackets[i];
  out.checked_through = product.known_order();
  out.product_zero = product.is_zero_through(out.checked_through);
  if (!out.product_zero) out.product_counterexample = product.first_nonzero();
  for (const auto& b : brackets)
    out.factor_vanishes.push_back(b.is_zero_through(b.known_order()));
  return out;
}

}  // namespace padiclab
