#include "qrs/multipoly.hpp"

#include <sstream>
#include <vector>

namespace qrs {

namespace {

ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (int i = 0; i < kNumSymbols; ++i) {
    r[i] = static_cast<int16_t>(a[i] + b[i]);
  }
  return r;
}

bool exp_divides(const ExpVec& div, const ExpVec& target) {
  for (int i = 0; i < kNumSymbols; ++i) {
    if (target[i] < div[i]) return false;
  }
  return true;
}

ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (int i = 0; i < kNumSymbols; ++i) {
    r[i] = static_cast<int16_t>(a[i] - b[i]);
  }
  return r;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rat& value) {
  MultiPoly p;
  if (value != 0) p.terms_.emplace(kConstExp, value);
  return p;
}

MultiPoly MultiPoly::symbol(Sym s, int exponent) {
  if (exponent < 0) throw QrsError("symbol(): negative exponent");
  if (exponent == 0) return constant(1);
  MultiPoly p;
  ExpVec e{};
  e[static_cast<int>(s)] = static_cast<int16_t>(exponent);
  p.terms_.emplace(e, Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(const ExpVec& e, const Rat& coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(e, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == kConstExp;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == kConstExp &&
         terms_.begin()->second == 1;
}

Rat MultiPoly::constant_value() const {
  auto it = terms_.find(kConstExp);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree(Sym s) const {
  int idx = static_cast<int>(s);
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    if (e[idx] > deg) deg = e[idx];
  }
  return deg;
}

void MultiPoly::add_term(const ExpVec& e, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {

// Merges the sorted range rhs into the map with a forward-moving hint, so a
// whole-polynomial add costs one seek plus a walk over the affected span
// instead of a log-factor insert per term.  `sign` is +1 or -1.
template <typename Range>
void merge_sorted_into(MultiPoly::TermMap& dst, const Range& rhs, int sign) {
  if (rhs.empty()) return;
  auto pos = dst.lower_bound(rhs.begin()->first);
  for (const auto& [e, c] : rhs) {
    while (pos != dst.end() && pos->first < e) ++pos;
    if (pos != dst.end() && pos->first == e) {
      if (sign > 0) {
        pos->second += c;
      } else {
        pos->second -= c;
      }
      if (pos->second == 0) {
        pos = dst.erase(pos);
      }
    } else {
      pos = dst.emplace_hint(pos, e, sign > 0 ? c : -c);
      ++pos;
    }
  }
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (this == &rhs) {
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  if (rhs.terms_.size() * 16 < terms_.size()) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  } else {
    merge_sorted_into(terms_, rhs.terms_, +1);
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (this == &rhs) {
    terms_.clear();
    return *this;
  }
  if (rhs.terms_.size() * 16 < terms_.size()) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  } else {
    merge_sorted_into(terms_, rhs.terms_, -1);
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly r = *this;
  r += rhs;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  MultiPoly r = *this;
  r -= rhs;
  return r;
}

namespace {

using TermVec = std::vector<std::pair<ExpVec, Rat>>;

// Consumes both inputs and moves every coefficient, so a merge never copies
// a multiprecision value.
TermVec merge_term_vecs(TermVec&& u, TermVec&& v) {
  TermVec out;
  out.reserve(u.size() + v.size());
  size_t i = 0;
  size_t j = 0;
  while (i < u.size() && j < v.size()) {
    if (u[i].first < v[j].first) {
      out.push_back(std::move(u[i++]));
    } else if (v[j].first < u[i].first) {
      out.push_back(std::move(v[j++]));
    } else {
      Rat c = std::move(u[i].second);
      c += v[j].second;
      if (c != 0) out.emplace_back(u[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < u.size(); ++i) out.push_back(std::move(u[i]));
  for (; j < v.size(); ++j) out.push_back(std::move(v[j]));
  return out;
}

}  // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly r;
  if (terms_.empty() || rhs.terms_.empty()) return r;

  const TermMap& small = terms_.size() <= rhs.terms_.size() ? terms_ : rhs.terms_;
  const TermMap& large = terms_.size() <= rhs.terms_.size() ? rhs.terms_ : terms_;

  if (small.size() * large.size() <= 64) {
    for (const auto& [e1, c1] : small) {
      for (const auto& [e2, c2] : large) {
        r.add_term(add_exp(e1, e2), c1 * c2);
      }
    }
    return r;
  }

  // Each term of the smaller factor times the (sorted) larger factor is a
  // sorted run; combining the runs pairwise keeps every merge linear.
  std::vector<TermVec> runs;
  runs.reserve(small.size());
  for (const auto& [e1, c1] : small) {
    TermVec run;
    run.reserve(large.size());
    for (const auto& [e2, c2] : large) {
      run.emplace_back(add_exp(e1, e2), c1 * c2);
    }
    runs.push_back(std::move(run));
  }
  while (runs.size() > 1) {
    std::vector<TermVec> next;
    next.reserve((runs.size() + 1) / 2);
    for (size_t i = 0; i + 1 < runs.size(); i += 2) {
      next.push_back(merge_term_vecs(std::move(runs[i]), std::move(runs[i + 1])));
    }
    if (runs.size() % 2 == 1) next.push_back(std::move(runs.back()));
    runs = std::move(next);
  }
  for (auto& [e, c] : runs.front()) {
    r.terms_.emplace_hint(r.terms_.end(), e, std::move(c));
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw QrsError("pow(): negative exponent");
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    base = (e >>= 1) > 0 ? base * base : base;
  }
  return result;
}

MultiPoly MultiPoly::scale_symbol(Sym s, const Rat& coeff) const {
  int idx = static_cast<int>(s);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Rat factor = 1;
    for (int k = 0; k < e[idx]; ++k) factor *= coeff;
    r.add_term(e, c * factor);
  }
  return r;
}

MultiPoly MultiPoly::coeff_of(Sym s, int k) const {
  int idx = static_cast<int>(s);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == k) {
      ExpVec e2 = e;
      e2[idx] = 0;
      r.add_term(e2, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::substitute(Sym s, const MultiPoly& replacement) const {
  int maxdeg = degree(s);
  if (maxdeg == 0) return *this;
  std::vector<MultiPoly> powers(maxdeg + 1);
  powers[0] = constant(1);
  for (int k = 1; k <= maxdeg; ++k) powers[k] = powers[k - 1] * replacement;
  MultiPoly r;
  for (int k = 0; k <= maxdeg; ++k) {
    MultiPoly part = coeff_of(s, k);
    if (!part.is_zero()) r += part * powers[k];
  }
  return r;
}

const ExpVec& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw QrsError("leading_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw QrsError("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Rat MultiPoly::rational_content() const {
  if (terms_.empty()) return Rat(1);
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         boost::multiprecision::abs(numerator(c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rat content(num_gcd, den_lcm);
  if (leading_coeff() < 0) content = -content;
  return content;
}

MultiPoly MultiPoly::multiply_rat(const Rat& r) const {
  MultiPoly out;
  if (r == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("divide_exact by zero polynomial");
  std::optional<MultiPoly> quotient = try_divide(divisor);
  if (!quotient) throw QrsError("divide_exact: non-exact division");
  return *std::move(quotient);
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (divisor.is_constant()) {
    return multiply_rat(Rat(1) / divisor.constant_value());
  }
  for (int i = 0; i < kNumSymbols; ++i) {
    if (divisor.degree(static_cast<Sym>(i)) > degree(static_cast<Sym>(i))) {
      return std::nullopt;
    }
  }
  MultiPoly remainder = *this;
  MultiPoly quotient;
  const ExpVec& dl = divisor.leading_exponent();
  const Rat& dc = divisor.leading_coeff();
  while (!remainder.is_zero()) {
    const ExpVec& rl = remainder.leading_exponent();
    if (!exp_divides(dl, rl)) return std::nullopt;
    MultiPoly t = monomial(sub_exp(rl, dl), remainder.leading_coeff() / dc);
    quotient += t;
    remainder -= t * divisor;
  }
  return quotient;
}

MultiPoly MultiPoly::eval_at_int(Sym s, const Int& value) const {
  int idx = static_cast<int>(s);
  int d = degree(s);
  if (d == 0) return *this;
  std::vector<Rat> powers(static_cast<size_t>(d) + 1);
  powers[0] = 1;
  for (int k = 1; k <= d; ++k) powers[k] = powers[k - 1] * Rat(value);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[idx] = 0;
    r.add_term(e2, c * powers[e[idx]]);
  }
  return r;
}

Int MultiPoly::max_abs_numerator() const {
  Int m = 0;
  for (const auto& [e, c] : terms_) {
    (void)e;
    Int a = boost::multiprecision::abs(numerator(c));
    if (a > m) m = a;
  }
  return m;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    std::string mono;
    for (int i = 0; i < kNumSymbols; ++i) {
      if (e[i] == 0) continue;
      mono += kSymbolNames[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) {
        if (denominator(mag) == 1) {
          os << numerator(mag);
        } else {
          os << '(' << mag << ')';
        }
      }
      os << mono;
    }
  }
  return os.str();
}

}  // namespace qrs
