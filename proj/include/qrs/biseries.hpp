#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qrs/series.hpp"

namespace qrs {

// Truncated series in two expansion variables on the bidegree box
// [0, order1] x [0, order2]. Coefficients are free of both variables.
class BivariateSeries {
 public:
  BivariateSeries(Sym var1, Sym var2, int order1, int order2);

  static BivariateSeries one(Sym var1, Sym var2, int order1, int order2);

  Sym var1() const { return var1_; }
  Sym var2() const { return var2_; }
  int order1() const { return order1_; }
  int order2() const { return order2_; }

  const RationalFunction& coeff(int i, int j) const;
  void set_coeff(int i, int j, RationalFunction value);
  void add_coeff(int i, int j, const RationalFunction& value);

  BivariateSeries operator+(const BivariateSeries& rhs) const;
  BivariateSeries operator-(const BivariateSeries& rhs) const;
  BivariateSeries operator*(const BivariateSeries& rhs) const;

  BivariateSeries scale(const RationalFunction& factor) const;
  // Multiply by a univariate series in var1 (axis = 1) or var2 (axis = 2).
  BivariateSeries multiply_axis(const TruncatedSeries& s, int axis) const;

 private:
  void check_compatible(const BivariateSeries& rhs) const;
  void check_pure(const RationalFunction& value) const;
  int index(int i, int j) const { return i * (order2_ + 1) + j; }

  Sym var1_;
  Sym var2_;
  int order1_;
  int order2_;
  std::vector<RationalFunction> grid_;
};

struct BiMismatch {
  int deg1;
  int deg2;
  RationalFunction lhs;
  RationalFunction rhs;
  RationalFunction diff;
};

enum class BiMask { box, simplex };

// Compares on the box, or on the simplex i+j <= max(order1, order2).
// Scans in graded order (total degree, then first axis) and returns the first
// difference, if any.
std::optional<BiMismatch> bivariate_first_mismatch(const BivariateSeries& lhs,
                                                   const BivariateSeries& rhs,
                                                   BiMask mask);

}  // namespace qrs
