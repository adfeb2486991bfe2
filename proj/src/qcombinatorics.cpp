#include "qrs/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qrs {

namespace {

RationalFunction q_q_pochhammer(int n) {
  static std::mutex mu;
  static std::vector<RationalFunction> cache{RationalFunction::one()};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int j = static_cast<int>(cache.size()) - 1;
    RationalFunction factor =
        RationalFunction::one() -
        RationalFunction::from_poly(MultiPoly::symbol(Sym::q, j + 1));
    cache.push_back(cache.back() * factor);
  }
  return cache[n];
}

}  // namespace

RationalFunction qpochhammer(const RationalFunction& a, int n) {
  if (n < 0) throw QrsError("qpochhammer: negative length");
  RationalFunction result = RationalFunction::one();
  RationalFunction qa = a;
  const RationalFunction q = RationalFunction::symbol(Sym::q);
  for (int j = 0; j < n; ++j) {
    result *= RationalFunction::one() - qa;
    qa *= q;
  }
  return result;
}

RationalFunction qbinomial(int n, int k) {
  if (n < 0) throw QrsError("qbinomial: negative n");
  if (k < 0 || k > n) return RationalFunction::zero();
  static std::mutex mu;
  static std::map<std::pair<int, int>, RationalFunction> cache;
  if (k > n - k) k = n - k;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  RationalFunction value =
      q_q_pochhammer(n) / (q_q_pochhammer(k) * q_q_pochhammer(n - k));
  cache.emplace(std::pair<int, int>{n, k}, value);
  return value;
}

std::pair<RationalFunction, RationalFunction> pochhammer_shift_split(
    const RationalFunction& a, int n, int k) {
  RationalFunction qn = q_power(n);
  return {qpochhammer(a, n), qpochhammer(a * qn, k)};
}

RationalFunction pochhammer_reverse(const RationalFunction& a, int n, int k) {
  if (k < 0 || k > n) throw QrsError("pochhammer_reverse: requires 0 <= k <= n");
  if (a.is_zero()) throw DivisionByZero("pochhammer_reverse: a = 0");
  RationalFunction inv_a = RationalFunction::one() / a;
  RationalFunction q = RationalFunction::symbol(Sym::q);
  RationalFunction left = qpochhammer(a, n) / qpochhammer(q_power(1 - n) * inv_a, k);
  RationalFunction sign_factor = (-(q * inv_a)).pow(k);
  return left * sign_factor * q_power(choose2(k) - static_cast<long long>(n) * k);
}

RationalFunction q_power(long long e) { return sym_power(Sym::q, e); }

RationalFunction sym_power(Sym s, long long e) {
  return RationalFunction::symbol_power(s, static_cast<int>(e));
}

}  // namespace qrs
