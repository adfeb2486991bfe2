#include "qrs/biseries.hpp"

#include <string>

namespace qrs {

BivariateSeries::BivariateSeries(Sym var1, Sym var2, int order1, int order2)
    : var1_(var1), var2_(var2), order1_(order1), order2_(order2) {
  if (var1 == var2) throw VariableMismatch("bivariate series needs two distinct variables");
  if (order1 < 0 || order2 < 0) throw QrsError("bivariate orders must be non-negative");
  grid_.assign(static_cast<std::size_t>(order1 + 1) * (order2 + 1),
               RationalFunction::zero());
}

BivariateSeries BivariateSeries::one(Sym var1, Sym var2, int order1, int order2) {
  BivariateSeries b(var1, var2, order1, order2);
  b.grid_[0] = RationalFunction::one();
  return b;
}

void BivariateSeries::check_pure(const RationalFunction& value) const {
  if (value.depends_on(var1_) || value.depends_on(var2_)) {
    throw QrsError("bivariate coefficient contains an expansion variable");
  }
}

const RationalFunction& BivariateSeries::coeff(int i, int j) const {
  if (i < 0 || i > order1_ || j < 0 || j > order2_) {
    throw QrsError("bivariate coefficient index out of range");
  }
  return grid_[index(i, j)];
}

void BivariateSeries::set_coeff(int i, int j, RationalFunction value) {
  if (i < 0 || i > order1_ || j < 0 || j > order2_) {
    throw QrsError("bivariate coefficient index out of range");
  }
  check_pure(value);
  grid_[index(i, j)] = std::move(value);
}

void BivariateSeries::add_coeff(int i, int j, const RationalFunction& value) {
  set_coeff(i, j, coeff(i, j) + value);
}

void BivariateSeries::check_compatible(const BivariateSeries& rhs) const {
  if (var1_ != rhs.var1_ || var2_ != rhs.var2_) {
    throw VariableMismatch("bivariate series variable mismatch");
  }
  if (order1_ != rhs.order1_ || order2_ != rhs.order2_) {
    throw QrsError("bivariate series order mismatch");
  }
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& rhs) const {
  check_compatible(rhs);
  BivariateSeries r = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k) r.grid_[k] += rhs.grid_[k];
  return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& rhs) const {
  check_compatible(rhs);
  BivariateSeries r = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k) r.grid_[k] -= rhs.grid_[k];
  return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  check_compatible(rhs);
  BivariateSeries r(var1_, var2_, order1_, order2_);
  for (int i1 = 0; i1 <= order1_; ++i1) {
    for (int j1 = 0; j1 <= order2_; ++j1) {
      const RationalFunction& c1 = coeff(i1, j1);
      if (c1.is_zero()) continue;
      for (int i2 = 0; i1 + i2 <= order1_; ++i2) {
        for (int j2 = 0; j1 + j2 <= order2_; ++j2) {
          const RationalFunction& c2 = rhs.coeff(i2, j2);
          if (c2.is_zero()) continue;
          r.grid_[r.index(i1 + i2, j1 + j2)] += c1 * c2;
        }
      }
    }
  }
  return r;
}

BivariateSeries BivariateSeries::scale(const RationalFunction& factor) const {
  check_pure(factor);
  BivariateSeries r = *this;
  for (auto& c : r.grid_) c *= factor;
  return r;
}

BivariateSeries BivariateSeries::multiply_axis(const TruncatedSeries& s,
                                               int axis) const {
  if (axis != 1 && axis != 2) throw QrsError("multiply_axis: axis must be 1 or 2");
  Sym expected = axis == 1 ? var1_ : var2_;
  if (s.var() != expected) {
    throw VariableMismatch("multiply_axis: series variable does not match axis");
  }
  BivariateSeries r(var1_, var2_, order1_, order2_);
  int limit = axis == 1 ? order1_ : order2_;
  int smax = s.order() < limit ? s.order() : limit;
  for (int k = 0; k <= smax; ++k) {
    const RationalFunction& sk = s.coeff(k);
    if (sk.is_zero()) continue;
    for (int i = 0; i <= order1_; ++i) {
      for (int j = 0; j <= order2_; ++j) {
        const RationalFunction& c = coeff(i, j);
        if (c.is_zero()) continue;
        int ii = axis == 1 ? i + k : i;
        int jj = axis == 2 ? j + k : j;
        if (ii > order1_ || jj > order2_) continue;
        r.grid_[r.index(ii, jj)] += c * sk;
      }
    }
  }
  return r;
}

std::optional<BiMismatch> bivariate_first_mismatch(const BivariateSeries& lhs,
                                                   const BivariateSeries& rhs,
                                                   BiMask mask) {
  if (lhs.var1() != rhs.var1() || lhs.var2() != rhs.var2() ||
      lhs.order1() != rhs.order1() || lhs.order2() != rhs.order2()) {
    throw VariableMismatch("bivariate_first_mismatch: incompatible series");
  }
  int n1 = lhs.order1();
  int n2 = lhs.order2();
  int simplex_bound = n1 > n2 ? n1 : n2;
  for (int total = 0; total <= n1 + n2; ++total) {
    for (int i = 0; i <= n1 && i <= total; ++i) {
      int j = total - i;
      if (j > n2) continue;
      if (mask == BiMask::simplex && i + j > simplex_bound) continue;
      RationalFunction diff = lhs.coeff(i, j) - rhs.coeff(i, j);
      if (!diff.is_zero()) {
        return BiMismatch{i, j, lhs.coeff(i, j), rhs.coeff(i, j), diff};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qrs
