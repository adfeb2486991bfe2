#include "qrs/rational_function.hpp"

#include <sstream>

namespace qrs {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den, ReducedTag)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize_content();
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
  return RationalFunction(std::move(p), MultiPoly::constant(1));
}

RationalFunction RationalFunction::constant(const Rat& value) {
  return from_poly(MultiPoly::constant(value));
}

RationalFunction RationalFunction::symbol(Sym s) {
  return from_poly(MultiPoly::symbol(s));
}

RationalFunction RationalFunction::symbol_power(Sym s, int exponent) {
  if (exponent >= 0) return from_poly(MultiPoly::symbol(s, exponent));
  return RationalFunction(MultiPoly::constant(1), MultiPoly::symbol(s, -exponent));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  normalize_content();
}

void RationalFunction::normalize_content() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  // scale so both parts are integer polynomials with joint content 1 and a
  // positive denominator leading coefficient
  Rat cd = den_.rational_content();
  num_ = num_.multiply_rat(Rat(1) / cd);
  den_ = den_.multiply_rat(Rat(1) / cd);
  Int num_den_lcm = 1;
  for (const auto& [e, c] : num_.terms()) {
    num_den_lcm = boost::multiprecision::lcm(num_den_lcm, denominator(c));
  }
  if (num_den_lcm != 1) {
    num_ = num_.multiply_rat(Rat(num_den_lcm));
    den_ = den_.multiply_rat(Rat(num_den_lcm));
  }
  Int gcd_all = 0;
  for (const auto& [e, c] : num_.terms()) {
    gcd_all = boost::multiprecision::gcd(gcd_all,
                                         boost::multiprecision::abs(numerator(c)));
  }
  for (const auto& [e, c] : den_.terms()) {
    gcd_all = boost::multiprecision::gcd(gcd_all,
                                         boost::multiprecision::abs(numerator(c)));
  }
  if (gcd_all > 1) {
    Rat inv = Rat(Int(1), gcd_all);
    num_ = num_.multiply_rat(inv);
    den_ = den_.multiply_rat(inv);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

// Sum of canonical fractions, reduced with gcds of denominator-sized
// operands only: with g = gcd(d1, d2) and t = n1 (d2/g) + n2 (d1/g), the sum
// t / (d1 (d2/g)) needs reduction exactly by h = gcd(t, g).
RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (den_.is_constant() && rhs.den_.is_constant()) {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_,
                            den_ * rhs.den_, ReducedTag{});
  }
  MultiPoly g = gcd(den_, rhs.den_);
  if (g.is_one()) {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_,
                            den_ * rhs.den_, ReducedTag{});
  }
  MultiPoly d1r = den_.divide_exact(g);
  MultiPoly d2r = rhs.den_.divide_exact(g);
  MultiPoly t = num_ * d2r + rhs.num_ * d1r;
  if (t.is_zero()) return zero();
  MultiPoly h = gcd(t, g);
  if (h.is_one()) {
    return RationalFunction(std::move(t), den_ * d2r, ReducedTag{});
  }
  return RationalFunction(t.divide_exact(h),
                          den_.divide_exact(h) * d2r, ReducedTag{});
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  if (rhs.is_zero()) return *this;
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  // cross-reduce so the product of the reduced parts is already coprime
  MultiPoly g1 = gcd(num_, rhs.den_);
  MultiPoly g2 = gcd(rhs.num_, den_);
  MultiPoly n1 = g1.is_one() ? num_ : num_.divide_exact(g1);
  MultiPoly d2 = g1.is_one() ? rhs.den_ : rhs.den_.divide_exact(g1);
  MultiPoly n2 = g2.is_one() ? rhs.num_ : rhs.num_.divide_exact(g2);
  MultiPoly d1 = g2.is_one() ? den_ : den_.divide_exact(g2);
  return RationalFunction(n1 * n2, d1 * d2, ReducedTag{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw DivisionByZero("division by zero rational function");
  RationalFunction inv;
  inv.num_ = rhs.den_;
  inv.den_ = rhs.num_;
  if (inv.den_.leading_coeff() < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this * inv;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  *this = *this + rhs;
  return *this;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  *this = *this - rhs;
  return *this;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = *this * rhs;
  return *this;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  *this = *this / rhs;
  return *this;
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent == 0) return one();
  if (exponent < 0) return one() / pow(-exponent);
  RationalFunction r;
  r.num_ = num_.pow(exponent);
  r.den_ = den_.pow(exponent);
  return r;
}

RationalFunction RationalFunction::substitute(
    Sym target, const RationalFunction& repl) const {
  int dn = num_.degree(target);
  int dd = den_.degree(target);
  if (dn == 0 && dd == 0) return *this;
  // f(num)/f(den) with replacement p/r: clear powers of r
  int dmax = dn > dd ? dn : dd;
  auto lift = [&](const MultiPoly& poly, int d) {
    // sum_k coeff_k * p^k * r^(dmax-k)
    MultiPoly acc = MultiPoly::zero();
    for (int k = 0; k <= d; ++k) {
      MultiPoly part = poly.coeff_of(target, k);
      if (part.is_zero()) continue;
      acc += part * repl.num().pow(k) * repl.den().pow(dmax - k);
    }
    return acc;
  };
  MultiPoly new_num = lift(num_, dn);
  MultiPoly new_den = lift(den_, dd);
  if (new_den.is_zero()) {
    throw DivisionByZero("substitution zeroes the denominator identically");
  }
  return RationalFunction(std::move(new_num), std::move(new_den));
}

Rat RationalFunction::evaluate(const std::array<Rat, kNumSymbols>& point) const {
  auto eval_poly = [&](const MultiPoly& p) {
    Rat acc = 0;
    for (const auto& [e, c] : p.terms()) {
      Rat term = c;
      for (int i = 0; i < kNumSymbols; ++i) {
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      }
      acc += term;
    }
    return acc;
  };
  Rat d = eval_poly(den_);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  return eval_poly(num_) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  if (num_.term_count() > 1) {
    os << '(' << num_.str() << ')';
  } else {
    os << num_.str();
  }
  os << '/';
  if (den_.term_count() > 1) {
    os << '(' << den_.str() << ')';
  } else {
    os << den_.str();
  }
  return os.str();
}

RationalFunction rf_arith(const RationalFunction& lhs,
                          const RationalFunction& rhs, RfOp op) {
  switch (op) {
    case RfOp::add:
      return lhs + rhs;
    case RfOp::sub:
      return lhs - rhs;
    case RfOp::mul:
      return lhs * rhs;
    case RfOp::div:
      return lhs / rhs;
  }
  throw QrsError("rf_arith: bad op");
}

RationalFunction rf_substitute(const RationalFunction& f, Sym target,
                               const RationalFunction& replacement) {
  return f.substitute(target, replacement);
}

RationalFunction rf_eval_integer_power(Sym base, int exponent) {
  return RationalFunction::symbol_power(base, exponent);
}

}  // namespace qrs
