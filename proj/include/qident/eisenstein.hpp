#pragma once

#include <utility>
#include <vector>

#include "qfunctions.hpp"

namespace qident {

/* Legendre symbol (n | 3): +1, -1, 0 for n congruent to 1, 2, 0 mod 3. */
inline int legendre3(long long n) {
  long long r = n % 3;
  if (r < 0) r += 3;
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

enum class LambertWeight { none, linear, legendre3 };
enum class LambertParity { all, odd };

/* One term sign * q^(residue * n) / (1 - q^(modulus * n)) of a Lambert-type
 * sum; the full sum runs over n >= 1 restricted by parity and weighted by
 * w(n) = 1, n, or (n | 3).                                                 */
struct LambertTerm {
  int sign{1};
  long long residue{1};
};

struct LambertSpec {
  long long modulus{1};
  std::vector<LambertTerm> terms;
  LambertWeight weight{LambertWeight::none};
  LambertParity parity{LambertParity::all};
};

/* Expand sum_n w(n) sum_terms s_t q^(r_t n) / (1 - q^(m n)) below `order`
 * by unrolling each geometric tail q^(rn) + q^(rn+mn) + q^(rn+2mn) + ...   */
inline QSeries<Rat> lambert_series(const LambertSpec& spec, const Rat& order) {
  if (spec.modulus <= 0) throw DomainError("lambert_series: modulus must be positive");
  for (const auto& t : spec.terms) {
    if (t.residue <= 0) throw DomainError("lambert_series: residues must be positive");
  }
  long long n_slots = lattice_count(Lattice{Rat(0), Rat(1)}, order);
  if (n_slots <= 0) return s_zero<Rat>(order);
  std::vector<Rat> acc(static_cast<std::size_t>(n_slots), Rat(0));
  for (long long n = 1;; ++n) {
    bool any_alive = false;
    for (const auto& t : spec.terms) {
      if (t.residue * n < n_slots) any_alive = true;
    }
    if (!any_alive) break;
    if (spec.parity == LambertParity::odd && n % 2 == 0) continue;
    long long w = 1;
    switch (spec.weight) {
      case LambertWeight::none: break;
      case LambertWeight::linear: w = n; break;
      case LambertWeight::legendre3: w = legendre3(n); break;
    }
    if (w == 0) continue;
    for (const auto& t : spec.terms) {
      Rat contrib = Rat(t.sign) * Rat(w);
      for (long long e = t.residue * n; e < n_slots; e += spec.modulus * n) {
        acc[static_cast<std::size_t>(e)] += contrib;
      }
    }
  }
  QSeries<Rat> f;
  f.e0 = 0;
  f.step = 1;
  f.order = order;
  f.coeffs = std::move(acc);
  return s_canonical(std::move(f));
}

/* The bilateral sum
 *     sum_{n in Z} z^n / (1 - a x^n)
 * and its closed product form
 *     (az, x/(az), x, x; x)_inf / (a, x/a, z, x/z; x)_inf,
 * specialized to monomials a = q^a_exp, z = q^z_exp, x = q^base, returned
 * as the pair (sum side, product side), each exact below `order`.
 *
 * For n = -m < 0 the denominator 1 - a x^(-m) carries a negative exponent;
 * with X = base*m - a_exp > 0 it rewrites to a convergent tail:
 *     z^(-m) / (1 - q^(a_exp - base m)) = -q^(X - z_exp m) / (1 - q^X).    */
inline std::pair<QSeries<Rat>, QSeries<Rat>> onepsione_pair(long long a_exp,
                                                            long long z_exp,
                                                            long long base,
                                                            const Rat& order) {
  if (!(0 < a_exp && a_exp < base && 0 < z_exp && z_exp < base)) {
    throw DomainError("onepsione_pair: need 0 < a_exp, z_exp < base");
  }
  if (a_exp + z_exp >= base) {
    throw DomainError("onepsione_pair: need a_exp + z_exp < base");
  }
  long long n_slots = lattice_count(Lattice{Rat(0), Rat(1)}, order);
  std::vector<Rat> acc(static_cast<std::size_t>(n_slots > 0 ? n_slots : 0), Rat(0));
  auto add_tail = [&](long long start, long long stride, int sign) {
    for (long long e = start; e < n_slots; e += stride) {
      if (e < 0) continue;
      acc[static_cast<std::size_t>(e)] += sign;
    }
  };
  /* n >= 0: z^n/(1 - a x^n) = sum_j q^(z n + j(a + base n)). */
  for (long long n = 0; z_exp * n < n_slots; ++n) {
    add_tail(z_exp * n, a_exp + base * n, 1);
  }
  /* n = -m < 0, rewritten tail starting at X - z_exp m with X = base m - a. */
  for (long long m = 1;; ++m) {
    long long x = base * m - a_exp;
    long long start = x - z_exp * m;
    if (start >= n_slots) break;
    add_tail(start, x, -1);
  }
  QSeries<Rat> lhs;
  lhs.e0 = 0;
  lhs.step = 1;
  lhs.order = order;
  lhs.coeffs = std::move(acc);
  lhs = s_canonical(std::move(lhs));

  Rat m(base);
  auto poch = [&](long long e) { return pochhammer(mono_pos(Rat(e)), m, order); };
  QSeries<Rat> num = s_mul(s_mul(poch(a_exp + z_exp), poch(base - a_exp - z_exp)),
                           s_mul(poch(base), poch(base)));
  QSeries<Rat> den = s_mul(s_mul(poch(a_exp), poch(base - a_exp)),
                           s_mul(poch(z_exp), poch(base - z_exp)));
  QSeries<Rat> rhs = s_mul(num, s_unit_inv(den));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qident
