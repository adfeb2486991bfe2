#include <algorithm>
#include <optional>
#include <vector>

#include "qrs/multipoly.hpp"

namespace qrs {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::msb;

// Minimal exponent per symbol across all terms (the common monomial factor).
ExpVec min_exponents(const MultiPoly& p) {
  ExpVec m{};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kNumSymbols; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

MultiPoly shift_down(const MultiPoly& p, const ExpVec& m) {
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2{};
    for (int i = 0; i < kNumSymbols; ++i) e2[i] = static_cast<int16_t>(e[i] - m[i]);
    r.add_term(e2, c);
  }
  return r;
}

uint32_t variable_mask(const MultiPoly& p) {
  uint32_t mask = 0;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < kNumSymbols; ++i) {
      if (e[i] > 0) mask |= (1u << i);
    }
  }
  return mask;
}

// Normalizes to an integer-coefficient polynomial with content 1 and positive
// leading coefficient.
MultiPoly primitive_normalized(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.multiply_rat(Rat(1) / p.rational_content());
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Sym s) {
  std::vector<Rat> A(a.degree(s) + 1, Rat(0));
  std::vector<Rat> B(b.degree(s) + 1, Rat(0));
  for (const auto& [e, c] : a.terms()) A[e[static_cast<int>(s)]] = c;
  for (const auto& [e, c] : b.terms()) B[e[static_cast<int>(s)]] = c;
  auto deg = [](const std::vector<Rat>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
      if (v[i] != 0) return i;
    }
    return -1;
  };
  while (true) {
    int db = deg(B);
    if (db < 0) break;
    int da = deg(A);
    if (da < db) {
      std::swap(A, B);
      continue;
    }
    Rat factor = A[da] / B[db];
    for (int i = 0; i <= db; ++i) A[da - db + i] -= factor * B[i];
    A[da] = 0;
  }
  int da = deg(A);
  if (da < 0) return MultiPoly::zero();
  MultiPoly g;
  for (int i = 0; i <= da; ++i) {
    if (A[i] != 0) {
      ExpVec e{};
      e[static_cast<int>(s)] = static_cast<int16_t>(i);
      g.add_term(e, A[i]);
    }
  }
  return primitive_normalized(g);
}

// Pseudo-remainder of f by g with respect to the main variable s.
MultiPoly pseudo_remainder(MultiPoly f, const MultiPoly& g, Sym s) {
  int dg = g.degree(s);
  MultiPoly lcg = g.coeff_of(s, dg);
  while (!f.is_zero()) {
    int df = f.degree(s);
    if (df < dg) break;
    MultiPoly lcf = f.coeff_of(s, df);
    MultiPoly shift = MultiPoly::symbol(s, df - dg);
    f = f * lcg - g * lcf * shift;
  }
  return f;
}

// --------------------------------------------------------------------------
// modular coprimality certificate
//
// For each shared variable x: evaluate the other variables at pseudo-random
// points mod a word-size prime and reduce to univariate images in x.  When
// both images keep their full x-degree, any common divisor G of the inputs
// satisfies deg_x(image of G) = deg_x(G), so a constant univariate image gcd
// certifies deg_x(G) = 0.  Certifying this for every shared variable proves
// the primitive inputs are coprime.  The test never certifies a false
// positive; an unlucky evaluation only makes it inconclusive.
// --------------------------------------------------------------------------

constexpr uint64_t kProjPrime = 1000000007ull;

uint64_t mod_mul(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) %
                               kProjPrime);
}

uint64_t mod_pow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  base %= kProjPrime;
  while (exp > 0) {
    if (exp & 1) r = mod_mul(r, base);
    base = mod_mul(base, base);
    exp >>= 1;
  }
  return r;
}

uint64_t rat_mod(const Rat& value) {
  Int num = numerator(value) % Int(kProjPrime);
  Int den = denominator(value) % Int(kProjPrime);
  uint64_t n = static_cast<uint64_t>(num < 0 ? num + Int(kProjPrime) : num);
  uint64_t d = static_cast<uint64_t>(den);
  if (d == 0) return 0;
  return mod_mul(n, mod_pow(d, kProjPrime - 2));
}

// Univariate image of p in x with the other variables evaluated at `point`.
// Returns coefficients by ascending degree.
std::vector<uint64_t> project_univariate(const MultiPoly& p, int x_idx,
                                         const std::array<uint64_t, kNumSymbols>& point) {
  std::vector<uint64_t> image(static_cast<size_t>(p.degree(static_cast<Sym>(x_idx))) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    uint64_t v = rat_mod(c);
    for (int i = 0; i < kNumSymbols; ++i) {
      if (i == x_idx || e[i] == 0) continue;
      v = mod_mul(v, mod_pow(point[i], static_cast<uint64_t>(e[i])));
    }
    size_t deg = static_cast<size_t>(e[x_idx]);
    image[deg] = (image[deg] + v) % kProjPrime;
  }
  while (!image.empty() && image.back() == 0) image.pop_back();
  return image;
}

int univariate_gcd_degree_mod(std::vector<uint64_t> a, std::vector<uint64_t> b) {
  while (!b.empty()) {
    // a mod b
    uint64_t lead_inv = mod_pow(b.back(), kProjPrime - 2);
    while (a.size() >= b.size()) {
      uint64_t factor = mod_mul(a.back(), lead_inv);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = mod_mul(factor, b[i]);
        a[shift + i] = (a[shift + i] + kProjPrime - sub) % kProjPrime;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool certify_coprime(const MultiPoly& a, const MultiPoly& b) {
  uint32_t shared = variable_mask(a) & variable_mask(b);
  if (shared == 0) return true;
  uint64_t seed = 88172645463325252ull;
  auto next_point = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return 2 + (seed % (kProjPrime - 4));
  };
  for (int x_idx = 0; x_idx < kNumSymbols; ++x_idx) {
    if (!(shared & (1u << x_idx))) continue;
    int da = a.degree(static_cast<Sym>(x_idx));
    int db = b.degree(static_cast<Sym>(x_idx));
    bool certified = false;
    for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
      std::array<uint64_t, kNumSymbols> point{};
      for (int i = 0; i < kNumSymbols; ++i) point[i] = next_point();
      std::vector<uint64_t> ia = project_univariate(a, x_idx, point);
      std::vector<uint64_t> ib = project_univariate(b, x_idx, point);
      if (static_cast<int>(ia.size()) - 1 != da ||
          static_cast<int>(ib.size()) - 1 != db) {
        continue;  // degree collapsed; inconclusive point
      }
      if (univariate_gcd_degree_mod(std::move(ia), std::move(ib)) == 0) {
        certified = true;
      }
    }
    if (!certified) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// evaluation-reconstruction gcd with trial-division verification; falls back
// to the remainder-sequence path on failure
// --------------------------------------------------------------------------

// xi-adic reconstruction with symmetric digits: recovers h(x) from h(xi).
MultiPoly xi_adic_lift(MultiPoly image, Sym x, const Int& xi) {
  const int idx = static_cast<int>(x);
  const Int half = xi / 2;
  MultiPoly out;
  int power = 0;
  while (!image.is_zero()) {
    if (power > 4000) return MultiPoly::zero();
    MultiPoly rest;
    for (const auto& [e, c] : image.terms()) {
      Int value = numerator(c);
      Int r = value % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) {
        ExpVec e2 = e;
        e2[idx] = static_cast<int16_t>(power);
        out.add_term(e2, Rat(r));
      }
      Int rest_value = (value - r) / xi;
      if (rest_value != 0) rest.add_term(e, Rat(rest_value));
    }
    image = std::move(rest);
    ++power;
  }
  return out;
}

// Requires integer-coefficient inputs; returns the gcd or nullopt when the
// evaluation points exhaust the attempt budget.
std::optional<MultiPoly> heuristic_gcd(MultiPoly f, MultiPoly g, int depth) {
  if (depth > 16) return std::nullopt;
  Rat cf = f.rational_content();
  Rat cg = g.rational_content();
  f = f.multiply_rat(Rat(1) / cf);
  g = g.multiply_rat(Rat(1) / cg);
  Int c = boost::multiprecision::gcd(abs(numerator(cf)), abs(numerator(cg)));

  uint32_t mask = variable_mask(f) | variable_mask(g);
  if (mask == 0) return MultiPoly::constant(Rat(c));
  int main_idx = 31 - __builtin_clz(mask);
  Sym x = static_cast<Sym>(main_idx);

  Int nf = f.max_abs_numerator();
  Int ng = g.max_abs_numerator();
  Int xi = 2 * std::min(nf, ng) + 29;
  long long width = std::max(f.degree(x), g.degree(x)) + 1;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (static_cast<long long>(msb(xi) + 1) * width > 120000) {
      return std::nullopt;
    }
    MultiPoly fe = f.eval_at_int(x, xi);
    MultiPoly ge = g.eval_at_int(x, xi);
    if (!fe.is_zero() && !ge.is_zero()) {
      std::optional<MultiPoly> image =
          heuristic_gcd(std::move(fe), std::move(ge), depth + 1);
      if (image) {
        MultiPoly h = xi_adic_lift(std::move(*image), x, xi);
        if (!h.is_zero()) {
          h = primitive_normalized(h);
          if (f.try_divide(h) && g.try_divide(h)) {
            return h.multiply_rat(Rat(c));
          }
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// Content of p viewed as univariate in s: gcd of its coefficients.
MultiPoly content_wrt(const MultiPoly& p, Sym s) {
  MultiPoly cont = MultiPoly::zero();
  int d = p.degree(s);
  for (int k = 0; k <= d; ++k) {
    MultiPoly ck = p.coeff_of(s, k);
    if (ck.is_zero()) continue;
    cont = gcd_impl(cont, ck);
    if (cont.is_one()) break;
  }
  return cont;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return primitive_normalized(b);
  if (b.is_zero()) return primitive_normalized(a);

  ExpVec ma = min_exponents(a);
  ExpVec mb = min_exponents(b);
  ExpVec mc{};
  for (int i = 0; i < kNumSymbols; ++i) mc[i] = std::min(ma[i], mb[i]);
  MultiPoly pa = shift_down(a, ma);
  MultiPoly pb = shift_down(b, mb);
  MultiPoly common = MultiPoly::monomial(mc, Rat(1));

  pa = primitive_normalized(pa);
  pb = primitive_normalized(pb);

  uint32_t mask = variable_mask(pa) | variable_mask(pb);
  if (mask == 0) return common;

  uint32_t both = variable_mask(pa) & variable_mask(pb);
  if (both == 0) return common;

  if ((mask & (mask - 1)) == 0) {
    int idx = 0;
    while (!(mask & (1u << idx))) ++idx;
    MultiPoly g = univariate_gcd(pa, pb, static_cast<Sym>(idx));
    return primitive_normalized(common * g);
  }

  if (pa == pb) return primitive_normalized(common * pa);
  if (pa.term_count() <= pb.term_count() && pb.try_divide(pa)) {
    return primitive_normalized(common * pa);
  }
  if (pb.term_count() <= pa.term_count() && pa.try_divide(pb)) {
    return primitive_normalized(common * pb);
  }

  if (certify_coprime(pa, pb)) return common;

  if (std::optional<MultiPoly> h = heuristic_gcd(pa, pb, 0)) {
    return primitive_normalized(common * *h);
  }

  int main_idx = 31 - __builtin_clz(mask);
  Sym s = static_cast<Sym>(main_idx);

  if (!pa.depends_on(s) || !pb.depends_on(s)) {
    MultiPoly with = pa.depends_on(s) ? pa : pb;
    MultiPoly without = pa.depends_on(s) ? pb : pa;
    MultiPoly g = gcd_impl(content_wrt(with, s), without);
    return primitive_normalized(common * g);
  }

  MultiPoly ca = content_wrt(pa, s);
  MultiPoly cb = content_wrt(pb, s);
  MultiPoly cont = gcd_impl(ca, cb);
  MultiPoly fa = pa.divide_exact(ca);
  MultiPoly fb = pb.divide_exact(cb);

  if (fa.degree(s) < fb.degree(s)) std::swap(fa, fb);
  MultiPoly gprim;
  while (true) {
    MultiPoly r = pseudo_remainder(fa, fb, s);
    if (r.is_zero()) {
      gprim = fb;
      break;
    }
    if (r.degree(s) == 0) {
      gprim = MultiPoly::constant(1);
      break;
    }
    fa = fb;
    fb = r.divide_exact(content_wrt(r, s));
    fb = primitive_normalized(fb);
  }
  gprim = gprim.divide_exact(content_wrt(gprim, s));
  return primitive_normalized(common * cont * gprim);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

}  // namespace qrs
