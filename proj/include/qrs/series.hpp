#pragma once

#include <vector>

#include "qrs/qcombinatorics.hpp"
#include "qrs/rational_function.hpp"

namespace qrs {

// Truncated formal power series in one expansion variable. Coefficients are
// rational functions that never contain the expansion variable; index j holds
// the coefficient of var^j; `order` is the highest retained power.
class TruncatedSeries {
 public:
  TruncatedSeries(Sym var, int order);

  static TruncatedSeries zero(Sym var, int order) {
    return TruncatedSeries(var, order);
  }
  static TruncatedSeries one(Sym var, int order);
  static TruncatedSeries constant(Sym var, int order,
                                  const RationalFunction& value);
  // coefficient * var^power
  static TruncatedSeries monomial(Sym var, int order, int power,
                                  const RationalFunction& coefficient);

  Sym var() const { return var_; }
  int order() const { return order_; }
  const RationalFunction& coeff(int j) const;
  void set_coeff(int j, RationalFunction value);

  bool is_zero() const;

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  bool operator==(const TruncatedSeries& rhs) const;

  TruncatedSeries scale(const RationalFunction& factor) const;
  // var -> factor * var (factor free of the expansion variable)
  TruncatedSeries scale_var(const RationalFunction& factor) const;
  // multiply by var^k (exact through the retained order)
  TruncatedSeries shift_up(int k) const;
  TruncatedSeries truncate(int new_order) const;

 private:
  void check_pure(const RationalFunction& value) const;

  Sym var_;
  int order_;
  std::vector<RationalFunction> coeffs_;
};

enum class SeriesOp { add, sub, mul };

TruncatedSeries series_arith(const TruncatedSeries& lhs,
                             const TruncatedSeries& rhs, SeriesOp op);

// Expansion of a rational function in `var`: numerator coefficients divided
// by the denominator expansion (its constant term in `var` must be nonzero).
TruncatedSeries series_from_rational(const RationalFunction& f, Sym var,
                                     int order);

// Multiplicative inverse: s * series_invert(s) = 1 up to the order.
TruncatedSeries series_invert(const TruncatedSeries& s);

// Iterated q-derivative in the expansion variable:
// (D_q s)_j = s_{j+1} (1 - q^{j+1}); result order drops by `power`.
TruncatedSeries dq_apply(const TruncatedSeries& s, int power);

// n-fold q-derivative of a product via the twisted product rule
//   D^n{fg} = sum_k q^{k(k-n)} [n,k]_q D^k{f} D^{n-k}{g(q^k .)},
// the form that agrees with dq_apply on the product.
TruncatedSeries dq_leibniz(const TruncatedSeries& f, const TruncatedSeries& g,
                           int n);

enum class PochhammerMode { infinite_product, inverse_infinite_product };

// (c*var; q)_infinity or its inverse as a truncated series:
//   infinite_product        -> sum_j q^{binom(j,2)} (-c)^j var^j / (q;q)_j
//   inverse_infinite_product-> sum_j c^j var^j / (q;q)_j
TruncatedSeries pochhammer_series(const RationalFunction& coefficient,
                                  PochhammerMode mode, Sym var, int order);

struct HypergeometricSpec {
  std::vector<RationalFunction> upper;
  std::vector<RationalFunction> lower;
  TruncatedSeries argument;
};

// Truncated r_phi_s sum with the compensating factor
// [(-1)^n q^{binom(n,2)}]^{1+s-r}.
TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec, int order);

}  // namespace qrs
