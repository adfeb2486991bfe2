#pragma once

#include <utility>

#include "qrs/rational_function.hpp"

namespace qrs {

// binom(k, 2) = k(k-1)/2, defined for any integer k (0 for k < 2).
inline long long choose2(long long k) { return k * (k - 1) / 2; }

// (a;q)_n = prod_{j=0}^{n-1} (1 - q^j a), n >= 0.
RationalFunction qpochhammer(const RationalFunction& a, int n);

// Gaussian binomial coefficient; 0 outside 0 <= k <= n. Always normalizes to
// a polynomial in q.
RationalFunction qbinomial(int n, int k);

// Returns ((a;q)_n, (a q^n;q)_k); their product is (a;q)_{n+k}.
std::pair<RationalFunction, RationalFunction> pochhammer_shift_split(
    const RationalFunction& a, int n, int k);

// Evaluates (a;q)_n / (q^{1-n}/a; q)_k * (-q/a)^k * q^{binom(k,2)-nk},
// which equals (a;q)_{n-k} for 0 <= k <= n.
RationalFunction pochhammer_reverse(const RationalFunction& a, int n, int k);

// q^e as a rational function (e may be negative).
RationalFunction q_power(long long e);

// Convenience: u^e for any symbol.
RationalFunction sym_power(Sym s, long long e);

}  // namespace qrs
