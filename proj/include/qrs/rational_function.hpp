#pragma once

#include <string>

#include "qrs/multipoly.hpp"
#include "qrs/symbols.hpp"

namespace qrs {

// Canonical quotient of two multivariate polynomials.
// Invariants: den != 0; gcd(num, den) = 1; both have integer coefficients
// with joint content 1; den's leading coefficient (canonical term order) is
// positive. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(MultiPoly::zero()), den_(MultiPoly::constant(1)) {}
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return from_poly(MultiPoly::constant(1)); }
  static RationalFunction from_poly(MultiPoly p);
  static RationalFunction constant(const Rat& value);
  static RationalFunction constant(long value) { return constant(Rat(value)); }
  static RationalFunction symbol(Sym s);
  // Integer powers of a single symbol; negative exponents go to the
  // denominator (q^{-3} = 1/q^3).
  static RationalFunction symbol_power(Sym s, int exponent);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool depends_on(Sym s) const {
    return num_.depends_on(s) || den_.depends_on(s);
  }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

  RationalFunction pow(int exponent) const;
  RationalFunction substitute(Sym target, const RationalFunction& repl) const;

  // Evaluates at concrete rational values for every symbol.
  // Throws DivisionByZero if the denominator vanishes at the point.
  Rat evaluate(const std::array<Rat, kNumSymbols>& point) const;

  std::string str() const;

 private:
  struct ReducedTag {};
  // Fast path for results whose num/den are already coprime; skips the gcd
  // and applies only the content and sign normalization.
  RationalFunction(MultiPoly num, MultiPoly den, ReducedTag);

  void normalize();
  void normalize_content();

  MultiPoly num_;
  MultiPoly den_;
};

enum class RfOp { add, sub, mul, div };

RationalFunction rf_arith(const RationalFunction& lhs,
                          const RationalFunction& rhs, RfOp op);
RationalFunction rf_substitute(const RationalFunction& f, Sym target,
                               const RationalFunction& replacement);
RationalFunction rf_eval_integer_power(Sym base, int exponent);

}  // namespace qrs
