#include "qrs/series.hpp"

#include <string>

namespace qrs {

TruncatedSeries::TruncatedSeries(Sym var, int order) : var_(var), order_(order) {
  if (order < 0) throw QrsError("series order must be non-negative");
  coeffs_.assign(order + 1, RationalFunction::zero());
}

TruncatedSeries TruncatedSeries::one(Sym var, int order) {
  TruncatedSeries s(var, order);
  s.coeffs_[0] = RationalFunction::one();
  return s;
}

TruncatedSeries TruncatedSeries::constant(Sym var, int order,
                                          const RationalFunction& value) {
  TruncatedSeries s(var, order);
  s.set_coeff(0, value);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(Sym var, int order, int power,
                                          const RationalFunction& coefficient) {
  TruncatedSeries s(var, order);
  if (power < 0) throw QrsError("monomial power must be non-negative");
  if (power <= order) s.set_coeff(power, coefficient);
  return s;
}

void TruncatedSeries::check_pure(const RationalFunction& value) const {
  if (value.depends_on(var_)) {
    throw QrsError(std::string("series coefficient contains the expansion variable '") +
                   symbol_name(var_) + "'");
  }
}

const RationalFunction& TruncatedSeries::coeff(int j) const {
  if (j < 0 || j > order_) throw QrsError("series coefficient index out of range");
  return coeffs_[j];
}

void TruncatedSeries::set_coeff(int j, RationalFunction value) {
  if (j < 0 || j > order_) throw QrsError("series coefficient index out of range");
  check_pure(value);
  coeffs_[j] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(var_, order_);
  for (int j = 0; j <= order_; ++j) r.coeffs_[j] = -coeffs_[j];
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  return series_arith(*this, rhs, SeriesOp::add);
}
TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  return series_arith(*this, rhs, SeriesOp::sub);
}
TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  return series_arith(*this, rhs, SeriesOp::mul);
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
  if (var_ != rhs.var_ || order_ != rhs.order_) return false;
  return coeffs_ == rhs.coeffs_;
}

TruncatedSeries TruncatedSeries::scale(const RationalFunction& factor) const {
  check_pure(factor);
  TruncatedSeries r(var_, order_);
  for (int j = 0; j <= order_; ++j) r.coeffs_[j] = coeffs_[j] * factor;
  return r;
}

TruncatedSeries TruncatedSeries::scale_var(const RationalFunction& factor) const {
  check_pure(factor);
  TruncatedSeries r(var_, order_);
  RationalFunction p = RationalFunction::one();
  for (int j = 0; j <= order_; ++j) {
    r.coeffs_[j] = coeffs_[j] * p;
    if (j < order_) p *= factor;
  }
  return r;
}

TruncatedSeries TruncatedSeries::shift_up(int k) const {
  if (k < 0) throw QrsError("shift_up: negative shift");
  TruncatedSeries r(var_, order_);
  for (int j = 0; j + k <= order_; ++j) r.coeffs_[j + k] = coeffs_[j];
  return r;
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const {
  if (new_order > order_) throw OrderExhausted("truncate: cannot extend a series");
  TruncatedSeries r(var_, new_order);
  for (int j = 0; j <= new_order; ++j) r.coeffs_[j] = coeffs_[j];
  return r;
}

TruncatedSeries series_arith(const TruncatedSeries& lhs,
                             const TruncatedSeries& rhs, SeriesOp op) {
  if (lhs.var() != rhs.var()) {
    throw VariableMismatch(std::string("series in '") + symbol_name(lhs.var()) +
                           "' combined with series in '" +
                           symbol_name(rhs.var()) + "'");
  }
  int order = lhs.order() < rhs.order() ? lhs.order() : rhs.order();
  TruncatedSeries r(lhs.var(), order);
  switch (op) {
    case SeriesOp::add:
      for (int j = 0; j <= order; ++j) {
        r.set_coeff(j, lhs.coeff(j) + rhs.coeff(j));
      }
      break;
    case SeriesOp::sub:
      for (int j = 0; j <= order; ++j) {
        r.set_coeff(j, lhs.coeff(j) - rhs.coeff(j));
      }
      break;
    case SeriesOp::mul:
      for (int i = 0; i <= order; ++i) {
        if (lhs.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
          if (rhs.coeff(j).is_zero()) continue;
          r.set_coeff(i + j, r.coeff(i + j) + lhs.coeff(i) * rhs.coeff(j));
        }
      }
      break;
  }
  return r;
}

TruncatedSeries series_from_rational(const RationalFunction& f, Sym var,
                                     int order) {
  TruncatedSeries num(var, order);
  for (int j = 0; j <= order; ++j) {
    num.set_coeff(j, RationalFunction::from_poly(f.num().coeff_of(var, j)));
  }
  if (!f.den().depends_on(var)) {
    const RationalFunction d = RationalFunction::from_poly(f.den());
    return num.scale(RationalFunction::one() / d);
  }
  TruncatedSeries den(var, order);
  for (int j = 0; j <= order; ++j) {
    den.set_coeff(j, RationalFunction::from_poly(f.den().coeff_of(var, j)));
  }
  return series_arith(num, series_invert(den), SeriesOp::mul);
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  const RationalFunction& c0 = s.coeff(0);
  if (c0.is_zero()) {
    throw NonUnitConstantTerm("series_invert: constant term is zero");
  }
  int order = s.order();
  TruncatedSeries r(s.var(), order);
  RationalFunction inv0 = RationalFunction::one() / c0;
  r.set_coeff(0, inv0);
  for (int j = 1; j <= order; ++j) {
    RationalFunction acc = RationalFunction::zero();
    for (int i = 1; i <= j; ++i) {
      if (s.coeff(i).is_zero()) continue;
      acc += s.coeff(i) * r.coeff(j - i);
    }
    r.set_coeff(j, -(acc * inv0));
  }
  return r;
}

TruncatedSeries dq_apply(const TruncatedSeries& s, int power) {
  if (power < 0) throw QrsError("dq_apply: negative power");
  if (power > s.order()) {
    throw OrderExhausted("dq_apply: power " + std::to_string(power) +
                         " exceeds series order " + std::to_string(s.order()));
  }
  TruncatedSeries cur = s;
  for (int step = 0; step < power; ++step) {
    TruncatedSeries next(cur.var(), cur.order() - 1);
    for (int j = 0; j < cur.order(); ++j) {
      RationalFunction factor =
          RationalFunction::one() - q_power(static_cast<long long>(j) + 1);
      next.set_coeff(j, cur.coeff(j + 1) * factor);
    }
    cur = next;
  }
  return cur;
}

TruncatedSeries dq_leibniz(const TruncatedSeries& f, const TruncatedSeries& g,
                           int n) {
  if (f.var() != g.var()) {
    throw VariableMismatch("dq_leibniz: factors expand in different variables");
  }
  if (n < 0) throw QrsError("dq_leibniz: negative order");
  int order = f.order() < g.order() ? f.order() : g.order();
  if (n > order) {
    throw OrderExhausted("dq_leibniz: order " + std::to_string(n) +
                         " exceeds series order " + std::to_string(order));
  }
  TruncatedSeries result(f.var(), order - n);
  for (int k = 0; k <= n; ++k) {
    TruncatedSeries fk = dq_apply(f.truncate(order), k);
    TruncatedSeries gk = g.truncate(order).scale_var(q_power(k));
    TruncatedSeries gnk = dq_apply(gk, n - k);
    TruncatedSeries term =
        series_arith(fk.truncate(order - n), gnk.truncate(order - n), SeriesOp::mul);
    RationalFunction weight =
        qbinomial(n, k) * q_power(static_cast<long long>(k) * (k - n));
    result = result + term.scale(weight);
  }
  return result;
}

TruncatedSeries pochhammer_series(const RationalFunction& coefficient,
                                  PochhammerMode mode, Sym var, int order) {
  if (coefficient.depends_on(var)) {
    throw ArgumentNotSeriesPositive(
        "pochhammer_series: coefficient contains the expansion variable");
  }
  TruncatedSeries r(var, order);
  RationalFunction term = RationalFunction::one();
  r.set_coeff(0, term);
  if (coefficient.is_zero()) return r;
  const RationalFunction q = RationalFunction::symbol(Sym::q);
  RationalFunction qq = RationalFunction::one();
  for (int j = 1; j <= order; ++j) {
    RationalFunction qj_factor = RationalFunction::one() - q_power(j);
    qq *= qj_factor;
    if (mode == PochhammerMode::inverse_infinite_product) {
      term = term * coefficient;
    } else {
      // q^{binom(j,2)} (-c)^j accumulates an extra q^{j-1} (-c) per step
      term = term * (-coefficient) * q_power(j - 1);
    }
    r.set_coeff(j, term / qq);
  }
  return r;
}

TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec,
                                      int order) {
  const TruncatedSeries& arg = spec.argument;
  if (!arg.coeff(0).is_zero()) {
    throw ArgumentNotSeriesPositive(
        "hypergeometric_series: argument has a nonzero constant term");
  }
  int r_count = static_cast<int>(spec.upper.size());
  int s_count = static_cast<int>(spec.lower.size());
  int comp_power = 1 + s_count - r_count;
  int N = order < arg.order() ? order : arg.order();
  TruncatedSeries result = TruncatedSeries::one(arg.var(), N);
  RationalFunction num_poch = RationalFunction::one();
  RationalFunction den_poch = RationalFunction::one();
  TruncatedSeries arg_pow = TruncatedSeries::one(arg.var(), N);
  for (int n = 1; n <= N; ++n) {
    for (const auto& ai : spec.upper) {
      num_poch *= RationalFunction::one() - q_power(n - 1) * ai;
    }
    RationalFunction qn = RationalFunction::one() - q_power(n);
    den_poch *= qn;
    for (const auto& bj : spec.lower) {
      RationalFunction factor = RationalFunction::one() - q_power(n - 1) * bj;
      if (factor.is_zero()) {
        throw ZeroDenominatorParameter(
            "hypergeometric_series: lower parameter zeroes (b;q)_n within range");
      }
      den_poch *= factor;
    }
    arg_pow = series_arith(arg_pow, arg.truncate(N), SeriesOp::mul);
    if (num_poch.is_zero()) break;
    RationalFunction weight = num_poch / den_poch;
    if (comp_power != 0) {
      RationalFunction comp =
          q_power(choose2(n)) * RationalFunction::constant(n % 2 == 0 ? 1 : -1);
      weight = weight * comp.pow(comp_power);
    }
    result = result + arg_pow.scale(weight);
  }
  return result;
}

}  // namespace qrs
