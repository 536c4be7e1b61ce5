#pragma once

#include <map>
#include <vector>

#include "series.hpp"

namespace qident {

/* A signed monomial +-q^exp used as a product/theta argument. */
struct MonomialArg {
  int sign{1};
  Rat exp{0};
};

inline MonomialArg mono_pos(const Rat& e) { return MonomialArg{1, e}; }
inline MonomialArg mono_neg(const Rat& e) { return MonomialArg{-1, e}; }
inline MonomialArg mono_flip(MonomialArg a) {
  a.sign = -a.sign;
  return a;
}

namespace detail {

/* Infinite product  prod_{k>=0} (1 - c * r^k * q^(e + k*m))  with signs
 * c, r in {+1,-1} and m > 0, truncated below `order`.  This one kernel
 * covers ordinary q-shifted factorials (r = +1) and the alternating
 * factor chains that triple products produce when the argument product is
 * negative (r = -1).  Each factor is applied as a sparse in-place update
 * acc -= sign * shift(acc), walking indices downward so the shifted reads
 * see pre-update values.                                                   */
inline QSeries<Rat> geometric_product(int c, int r, const Rat& e, const Rat& m,
                                      const Rat& order) {
  if (m <= 0) throw DomainError("product modulus must be positive");
  if (e < 0) throw DomainError("product argument exponent must be nonnegative");
  Rat step = rat_gcd(e, m);
  if (step == 0) step = 1;
  Lattice lat{Rat(0), step};
  long long n = lattice_count(lat, order);
  if (n <= 0) return s_zero<Rat>(order);
  std::vector<Rat> acc(static_cast<std::size_t>(n), Rat(0));
  acc[0] = 1;
  int sign = c;
  for (Rat ek = e;; ek += m) {
    if (ek >= order) break;
    if (ek == 0) {
      /* Factor (1 - c): either annihilates everything or doubles. */
      Rat factor = Rat(1 - sign);
      for (auto& a : acc) a *= factor;
    } else {
      long long shift = lattice_index(lat, ek).value();
      for (long long i = n - 1; i >= shift; --i) {
        const Rat& src = acc[static_cast<std::size_t>(i - shift)];
        if (src == 0) continue;
        if (sign > 0) {
          acc[static_cast<std::size_t>(i)] -= src;
        } else {
          acc[static_cast<std::size_t>(i)] += src;
        }
      }
    }
    sign *= r;
  }
  QSeries<Rat> f;
  f.e0 = 0;
  f.step = step;
  f.order = order;
  f.coeffs = std::move(acc);
  return s_canonical(std::move(f));
}

}  // namespace detail

/* (a; q^m)_infinity = prod_{k>=0} (1 - a.sign * q^(a.exp + k*m)),
 * for a strictly inside the unit disk: a.exp > 0.                          */
inline QSeries<Rat> pochhammer(const MonomialArg& a, const Rat& m,
                               const Rat& order) {
  if (a.exp <= 0) {
    throw DomainError("pochhammer: argument exponent must be positive");
  }
  return detail::geometric_product(a.sign, 1, a.exp, m, order);
}

enum class ThetaMethod { triple_product, bilateral_sum };

/* The two-variable theta function
 *     f(a, b) = sum_{n in Z} a^(n(n+1)/2) b^(n(n-1)/2),   |ab| < 1,
 * for monomial arguments a = a.sign q^a.exp, b = b.sign q^b.exp.
 *
 * method bilateral_sum evaluates the defining sum directly: the exponent
 * of the n-th term is a.exp*T(n) + b.exp*T(-n) with T(n) = n(n+1)/2, a
 * parabola in n, so iteration stops once both wings have left the window.
 *
 * method triple_product uses
 *     f(a, b) = (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf,
 * where each factor is a geometric_product chain: when ab has negative
 * sign the chain alternates, which the kernel's ratio sign handles.
 *
 * Both methods accept a.exp or b.exp equal to 0 (but not both): the series
 * then carries a doubled constant term or collapses to 0, matching the sum. */
inline QSeries<Rat> theta_f(const MonomialArg& a, const MonomialArg& b,
                            const Rat& order,
                            ThetaMethod method = ThetaMethod::triple_product) {
  if (a.exp < 0 || b.exp < 0 || a.exp + b.exp <= 0) {
    throw DomainError("theta_f: needs a.exp, b.exp >= 0 and a.exp + b.exp > 0");
  }
  if (method == ThetaMethod::triple_product) {
    int sab = a.sign * b.sign;
    Rat eab = a.exp + b.exp;
    QSeries<Rat> fa = detail::geometric_product(-a.sign, sab, a.exp, eab, order);
    QSeries<Rat> fb = detail::geometric_product(-b.sign, sab, b.exp, eab, order);
    QSeries<Rat> fc = detail::geometric_product(sab, sab, eab, eab, order);
    return s_mul(s_mul(fa, fb), fc);
  }

  std::map<Rat, Rat> terms;
  auto add_term = [&](long long n) -> bool {
    Int t1 = Int(n) * (Int(n) + 1) / 2;
    Int t2 = Int(n) * (Int(n) - 1) / 2;
    Rat e = a.exp * Rat(t1) + b.exp * Rat(t2);
    if (e >= order) return false;
    int s = 1;
    if (a.sign < 0 && (t1 & 1) == 1) s = -s;
    if (b.sign < 0 && (t2 & 1) == 1) s = -s;
    terms[e] += s;
    return true;
  };
  add_term(0);
  for (long long n = 1;; ++n) {
    bool up = add_term(n);
    bool down = add_term(-n);
    /* The exponent is a parabola in n; once both wings are past the
     * window for two consecutive n beyond the vertex, nothing returns.   */
    if (!up && !down && n > 2) break;
  }
  Rat step = rat_gcd(a.exp, b.exp);
  QSeries<Rat> f;
  f.step = step;
  f.order = order;
  if (terms.empty()) return s_zero<Rat>(order);
  f.e0 = 0;
  long long n = lattice_count(Lattice{Rat(0), step}, order);
  f.coeffs.assign(static_cast<std::size_t>(n), Rat(0));
  for (const auto& [e, c] : terms) {
    auto idx = lattice_index(Lattice{Rat(0), step}, e);
    f.coeffs[static_cast<std::size_t>(idx.value())] = c;
  }
  return s_canonical(std::move(f));
}

/* Convenience for the ubiquitous f(-q^x, -q^y). */
inline QSeries<Rat> theta_fm(const Rat& x, const Rat& y, const Rat& order) {
  return theta_f(mono_neg(x), mono_neg(y), order);
}

/* One eta factor: the Dedekind eta of t times tau, raised to power e,
 * i.e. q^(t*e/24) * (q^t; q^t)_inf^e, with rational e (roots allowed).     */
struct EtaFactor {
  Rat t;
  Rat e;
};
using EtaSpec = std::vector<EtaFactor>;

/* Product of eta factors as a single series: the monomial prefactor
 * q^(sum t_j e_j / 24) times the product of unit parts.  Rational powers
 * factor through s_nth_root (denominator) and s_pow_int (numerator); the
 * unit parts all have leading coefficient 1, so roots are well defined.    */
inline QSeries<Rat> eta_quotient(const EtaSpec& spec, const Rat& order) {
  Rat offset = 0;
  for (const auto& fac : spec) offset += fac.t * fac.e / 24;
  Rat unit_order = order - offset;
  if (unit_order <= 0) return s_zero<Rat>(order);
  QSeries<Rat> acc = s_const(Rat(1), unit_order);
  for (const auto& fac : spec) {
    if (fac.t <= 0) throw DomainError("eta_quotient: eta argument must be positive");
    if (fac.e == 0) continue;
    QSeries<Rat> unit = pochhammer(mono_pos(fac.t), fac.t, unit_order);
    Int num = numerator(fac.e);
    Int den = denominator(fac.e);
    if (den != 1) unit = s_nth_root(unit, den.convert_to<long long>());
    QSeries<Rat> powed = s_pow_int(unit, num.convert_to<long long>());
    acc = s_mul(acc, powed);
  }
  return s_shift(std::move(acc), Rat(1), offset);
}

/* The quadratic-factor product
 *     omega_k(q^s) = prod_{n>=1} (1 + alpha(k) q^(s n) + q^(2 s n)),
 * with alpha(k) = -2 cos(k pi / 10), taken over the field Q(b).  Each
 * factor is a sparse three-term in-place update on the scale-s lattice.    */
inline QSeries<KElem> omega(int k, const Rat& scale, const Rat& order) {
  if (scale <= 0) throw DomainError("omega: scale must be positive");
  KElem alpha = alpha_coeff(k);
  Lattice lat{Rat(0), scale};
  long long n = lattice_count(lat, order);
  if (n <= 0) return s_zero<KElem>(order);
  std::vector<KElem> acc(static_cast<std::size_t>(n), KElem(0));
  acc[0] = KElem(1);
  for (long long j = 1; j < n; ++j) {
    /* factor (1 + alpha q^(s j) + q^(2 s j)): shifts by j and 2j slots.  */
    for (long long i = n - 1; i >= j; --i) {
      KElem add = k_mul(alpha, acc[static_cast<std::size_t>(i - j)]);
      if (i >= 2 * j) add = k_add(add, acc[static_cast<std::size_t>(i - 2 * j)]);
      acc[static_cast<std::size_t>(i)] = k_add(acc[static_cast<std::size_t>(i)], add);
    }
  }
  QSeries<KElem> f;
  f.e0 = 0;
  f.step = scale;
  f.order = order;
  f.coeffs = std::move(acc);
  return s_canonical(std::move(f));
}

}  // namespace qident
