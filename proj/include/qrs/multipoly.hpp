#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qrs/symbols.hpp"

namespace qrs {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Exponent vector over the fixed alphabet; lexicographic array order (q slot
// most significant) is the canonical term order.
using ExpVec = std::array<int16_t, kNumSymbols>;

inline constexpr ExpVec kConstExp{};

// Multivariate polynomial with exact rational coefficients.
// Invariants: no zero coefficients are stored; terms are kept sorted by the
// canonical exponent order (std::map over ExpVec).
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rat>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const Rat& value);
  static MultiPoly constant(long value) { return constant(Rat(value)); }
  static MultiPoly symbol(Sym s, int exponent = 1);
  static MultiPoly monomial(const ExpVec& e, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant term of the polynomial (coefficient of the empty monomial).
  Rat constant_value() const;

  int degree(Sym s) const;
  bool depends_on(Sym s) const { return degree(s) > 0; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  bool operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  MultiPoly pow(int exponent) const;

  // Scales every exponent of `s` by replacing s -> coeff * s.
  MultiPoly scale_symbol(Sym s, const Rat& coeff) const;
  // Substitutes an arbitrary polynomial for `s` (used by rf_substitute).
  MultiPoly substitute(Sym s, const MultiPoly& replacement) const;

  // Coefficient of s^k, viewed as a polynomial in the remaining symbols.
  MultiPoly coeff_of(Sym s, int k) const;

  // Largest exponent vector in canonical order (precondition: nonzero).
  const ExpVec& leading_exponent() const;
  const Rat& leading_coeff() const;

  // Rational content: gcd of numerators over lcm of denominators, signed by
  // the leading coefficient. Dividing by it yields an integer-coefficient
  // polynomial with content 1 and positive leading coefficient.
  Rat rational_content() const;

  // Exact division; throws QrsError if the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  // Exact-division attempt; nullopt when the division leaves a remainder.
  std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;

  // Substitutes an integer value for `s`.
  MultiPoly eval_at_int(Sym s, const Int& value) const;

  // Largest absolute coefficient numerator (zero polynomial gives 0).
  Int max_abs_numerator() const;

  MultiPoly multiply_rat(const Rat& r) const;

  std::string str() const;

  void add_term(const ExpVec& e, const Rat& coeff);

 private:
  TermMap terms_;
};

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace qrs
