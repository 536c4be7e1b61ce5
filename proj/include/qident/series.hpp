#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kelem.hpp"
#include "rational.hpp"

namespace qident {

/* Coefficient-ring glue so the same series template serves both exact
 * rationals and field elements.                                            */
inline bool coeff_is_zero(const Rat& r) { return r == 0; }
inline bool coeff_is_zero(const KElem& e) { return e.is_zero(); }
inline Rat coeff_inv(const Rat& r) {
  if (r == 0) throw DomainError("coefficient inverse of zero");
  return Rat(1) / r;
}
inline KElem coeff_inv(const KElem& e) { return k_inv(e); }
inline std::string coeff_str(const Rat& r) { return rat_str(r); }
inline std::string coeff_str(const KElem& e) {
  if (e.is_rational()) return rat_str(e.c[0]);
  std::string s = "[" + rat_str(e.c[0]);
  for (int i = 1; i < 4; ++i) s += "," + rat_str(e.c[i]);
  return s + "]";
}

/* A truncated q-series supported on the arithmetic progression
 * e0, e0+step, e0+2*step, ... with rational exponents.  coeffs[i] is the
 * coefficient of q^(e0 + i*step).  `order` is the exclusive bound of
 * knowledge: every exponent < order is exact, everything at or beyond it
 * is unknown (not asserted zero).
 *
 * Canonical form (maintained by every operation here): coeffs is empty or
 * starts and ends with a nonzero coefficient, and all stored exponents are
 * < order.  A series with no known nonzero terms stores coeffs = {} and
 * e0 = order.                                                              */
template <class C>
struct QSeries {
  Rat e0{0};
  Rat step{1};
  std::vector<C> coeffs;
  Rat order{0};
};

struct Lattice {
  Rat e0{0};
  Rat step{1};
};

/* The coarsest lattice containing both arguments: anchored at the smaller
 * offset, with step = gcd(step_a, step_b, |e0_a - e0_b|).  The offset
 * difference enters the gcd so that both anchors land on lattice points.   */
inline Lattice lattice_refine(const Lattice& a, const Lattice& b) {
  Rat step = rat_gcd(rat_gcd(a.step, b.step), rat_abs(a.e0 - b.e0));
  return Lattice{a.e0 < b.e0 ? a.e0 : b.e0, step};
}

/* Index of exponent e on the lattice, if it lies there at or after e0. */
inline std::optional<long long> lattice_index(const Lattice& lat, const Rat& e) {
  return rat_to_index((e - lat.e0) / lat.step);
}

/* Number of lattice points in [e0, bound): ceil((bound - e0)/step).        */
inline long long lattice_count(const Lattice& lat, const Rat& bound) {
  if (bound <= lat.e0) return 0;
  Int n = rat_ceil((bound - lat.e0) / lat.step);
  return n.convert_to<long long>();
}

template <class C>
QSeries<C> s_canonical(QSeries<C> f) {
  if (f.step <= 0) throw DomainError("series step must be positive");
  std::size_t lead = 0;
  while (lead < f.coeffs.size() && coeff_is_zero(f.coeffs[lead])) ++lead;
  if (lead > 0) {
    f.coeffs.erase(f.coeffs.begin(), f.coeffs.begin() + static_cast<long>(lead));
    f.e0 += Rat(lead) * f.step;
  }
  long long keep = lattice_count(Lattice{f.e0, f.step}, f.order);
  if (keep < static_cast<long long>(f.coeffs.size())) {
    f.coeffs.resize(static_cast<std::size_t>(keep < 0 ? 0 : keep));
  }
  while (!f.coeffs.empty() && coeff_is_zero(f.coeffs.back())) f.coeffs.pop_back();
  if (f.coeffs.empty()) {
    f.e0 = f.order;
    f.step = 1;
  }
  return f;
}

template <class C>
QSeries<C> s_zero(const Rat& order) {
  QSeries<C> z;
  z.e0 = order;
  z.order = order;
  return z;
}

template <class C>
QSeries<C> s_monomial(const C& c, const Rat& e, const Rat& order) {
  QSeries<C> f;
  f.e0 = e;
  f.step = e == 0 ? Rat(1) : rat_abs(e);
  f.order = order;
  if (e < order && !coeff_is_zero(c)) f.coeffs.push_back(c);
  return s_canonical(std::move(f));
}

template <class C>
QSeries<C> s_const(const C& c, const Rat& order) {
  return s_monomial(c, Rat(0), order);
}

/* Coefficient of q^e.  Exponents at or beyond the truncation order are not
 * known, and asking for them is an error rather than a silent zero.        */
template <class C>
C s_coeff(const QSeries<C>& f, const Rat& e) {
  if (e >= f.order) {
    throw InsufficientOrderError("coefficient of q^" + rat_str(e) +
                                 " requested but series is only exact below q^" +
                                 rat_str(f.order));
  }
  auto idx = lattice_index(Lattice{f.e0, f.step}, e);
  if (!idx || *idx >= static_cast<long long>(f.coeffs.size())) return C(0);
  return f.coeffs[static_cast<std::size_t>(*idx)];
}

template <class C>
QSeries<C> s_neg(QSeries<C> f) {
  for (auto& c : f.coeffs) c = C(0) - c;
  return f;
}

template <class C>
QSeries<C> s_scale(QSeries<C> f, const C& k) {
  if (coeff_is_zero(k)) return s_zero<C>(f.order);
  for (auto& c : f.coeffs) c = c * k;
  return s_canonical(std::move(f));
}

/* Multiply by the monomial k * q^e (exact shift, no precision loss; the
 * lattice keeps its step and moves its anchor).                            */
template <class C>
QSeries<C> s_shift(QSeries<C> f, const C& k, const Rat& e) {
  f.e0 += e;
  f.order += e;
  return s_scale(std::move(f), k);
}

template <class C>
QSeries<C> s_add(const QSeries<C>& f, const QSeries<C>& g) {
  Rat order = f.order < g.order ? f.order : g.order;
  if (f.coeffs.empty() && g.coeffs.empty()) return s_zero<C>(order);
  if (f.coeffs.empty()) {
    QSeries<C> r = g;
    r.order = order;
    return s_canonical(std::move(r));
  }
  if (g.coeffs.empty()) {
    QSeries<C> r = f;
    r.order = order;
    return s_canonical(std::move(r));
  }
  Lattice lat = lattice_refine(Lattice{f.e0, f.step}, Lattice{g.e0, g.step});
  long long n = lattice_count(lat, order);
  QSeries<C> r;
  r.e0 = lat.e0;
  r.step = lat.step;
  r.order = order;
  r.coeffs.assign(static_cast<std::size_t>(n), C(0));
  auto splat = [&](const QSeries<C>& s) {
    long long base = *lattice_index(lat, s.e0);
    long long stride = rat_to_index(s.step / lat.step).value();
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      long long j = base + stride * static_cast<long long>(i);
      if (j >= n) break;
      r.coeffs[static_cast<std::size_t>(j)] =
          r.coeffs[static_cast<std::size_t>(j)] + s.coeffs[i];
    }
  };
  splat(f);
  splat(g);
  return s_canonical(std::move(r));
}

template <class C>
QSeries<C> s_sub(const QSeries<C>& f, const QSeries<C>& g) {
  return s_add(f, s_neg(g));
}

/* Product truncation: the unknown tail of f (exponents >= f.order) first
 * pollutes the product at exponent f.order + g.e0, and symmetrically, so
 * the result is exact below min(f.order + g.e0, g.order + f.e0).  For an
 * empty (identically unknown-free) factor the convention e0 = order makes
 * the same formula give the right zero series.                             */
template <class C>
QSeries<C> s_mul(const QSeries<C>& f, const QSeries<C>& g) {
  Rat oa = f.order + g.e0;
  Rat ob = g.order + f.e0;
  Rat order = oa < ob ? oa : ob;
  if (f.coeffs.empty() || g.coeffs.empty()) return s_zero<C>(order);
  Rat step = rat_gcd(f.step, g.step);
  Lattice lat{f.e0 + g.e0, step};
  long long n = lattice_count(lat, order);
  if (n <= 0) return s_zero<C>(order);
  QSeries<C> r;
  r.e0 = lat.e0;
  r.step = step;
  r.order = order;
  r.coeffs.assign(static_cast<std::size_t>(n), C(0));
  long long fs = rat_to_index(f.step / step).value();
  long long gs = rat_to_index(g.step / step).value();
  const bool f_outer = f.coeffs.size() <= g.coeffs.size();
  const auto& outer = f_outer ? f.coeffs : g.coeffs;
  const auto& inner = f_outer ? g.coeffs : f.coeffs;
  long long os = f_outer ? fs : gs;
  long long is = f_outer ? gs : fs;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (coeff_is_zero(outer[i])) continue;
    long long base = os * static_cast<long long>(i);
    if (base >= n) break;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      long long k = base + is * static_cast<long long>(j);
      if (k >= n) break;
      if (coeff_is_zero(inner[j])) continue;
      r.coeffs[static_cast<std::size_t>(k)] =
          r.coeffs[static_cast<std::size_t>(k)] + outer[i] * inner[j];
    }
  }
  return s_canonical(std::move(r));
}

/* Reciprocal of a series whose leading coefficient is invertible.  Writing
 * f = q^e0 * u with u = sum a_i x^i (x = q^step, a_0 invertible), the unit
 * reciprocal is the standard recursion
 *     b_0 = 1/a_0,    b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j},
 * and the result is q^{-e0} * u^{-1}, exact below f.order - 2*e0 (the tail
 * of f enters u at relative exponent (order - e0), which is where the
 * reciprocal's knowledge also stops; shifting by -e0 gives the bound).     */
template <class C>
QSeries<C> s_unit_inv(const QSeries<C>& f0) {
  QSeries<C> f = s_canonical(f0);
  if (f.coeffs.empty()) {
    throw DomainError("s_unit_inv: series has no known leading term");
  }
  long long n = lattice_count(Lattice{Rat(0), f.step}, f.order - f.e0);
  std::vector<C> a = f.coeffs;
  a.resize(static_cast<std::size_t>(n), C(0));
  std::vector<C> b(static_cast<std::size_t>(n), C(0));
  C inv0 = coeff_inv(a[0]);
  b[0] = inv0;
  for (long long k = 1; k < n; ++k) {
    C acc = C(0);
    for (long long j = 1; j <= k; ++j) {
      if (coeff_is_zero(a[static_cast<std::size_t>(j)])) continue;
      acc = acc + a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = C(0) - inv0 * acc;
  }
  QSeries<C> r;
  r.e0 = -f.e0;
  r.step = f.step;
  r.order = f.order - 2 * f.e0;
  r.coeffs = std::move(b);
  return s_canonical(std::move(r));
}

template <class C>
QSeries<C> s_pow_int(const QSeries<C>& f, long long k) {
  if (k < 0) return s_pow_int(s_unit_inv(f), -k);
  if (k == 0) {
    QSeries<C> canon = s_canonical(f);
    return s_const(C(1), canon.order - canon.e0);
  }
  QSeries<C> acc = f;
  QSeries<C> base = f;
  --k;
  while (k > 0) {
    if (k & 1) acc = s_mul(acc, base);
    k >>= 1;
    if (k > 0) base = s_mul(base, base);
  }
  return acc;
}

/* n-th root of a series with leading coefficient exactly 1.  With
 * f = q^e0 (1 + sum_{k>=1} f_k x^k) and g = f^{1/n} = q^{e0/n} (1 + ...),
 * differentiating g^n = f gives n g' f = g f' (in x), whose coefficient
 * comparison yields
 *     g_k = ( sum_{l=1..k} l f_l g_{k-l}  -  n sum_{l=1..k-1} l g_l f_{k-l} )
 *           / (n k).
 * The unit part stays on the x-lattice; only the q^{e0/n} prefactor moves
 * off it, which the offset field absorbs.                                  */
template <class C>
QSeries<C> s_nth_root(const QSeries<C>& f0, long long n) {
  if (n <= 0) throw DomainError("s_nth_root: root index must be positive");
  QSeries<C> f = s_canonical(f0);
  if (f.coeffs.empty()) {
    throw DomainError("s_nth_root: series has no known leading term");
  }
  if (!(f.coeffs[0] == C(1))) {
    throw DomainError("s_nth_root: leading coefficient must be 1");
  }
  long long m = lattice_count(Lattice{Rat(0), f.step}, f.order - f.e0);
  std::vector<C> a = f.coeffs;
  a.resize(static_cast<std::size_t>(m), C(0));
  std::vector<C> g(static_cast<std::size_t>(m), C(0));
  g[0] = C(1);
  for (long long k = 1; k < m; ++k) {
    C acc = C(0);
    for (long long l = 1; l <= k; ++l) {
      if (!coeff_is_zero(a[static_cast<std::size_t>(l)])) {
        acc = acc + C(Rat(l)) * a[static_cast<std::size_t>(l)] *
                        g[static_cast<std::size_t>(k - l)];
      }
    }
    C acc2 = C(0);
    for (long long l = 1; l <= k - 1; ++l) {
      if (!coeff_is_zero(g[static_cast<std::size_t>(l)])) {
        acc2 = acc2 + C(Rat(l)) * g[static_cast<std::size_t>(l)] *
                          a[static_cast<std::size_t>(k - l)];
      }
    }
    g[static_cast<std::size_t>(k)] =
        C(Rat(1, n * k)) * (acc - C(Rat(n)) * acc2);
  }
  QSeries<C> r;
  r.e0 = f.e0 / n;
  r.step = f.step;
  r.order = f.e0 / n + (f.order - f.e0);
  r.coeffs = std::move(g);
  return s_canonical(std::move(r));
}

/* q -> q^m for rational m > 0: a homomorphism that rescales the exponent
 * lattice, the offset, and the truncation bound alike.                     */
template <class C>
QSeries<C> s_substitute(QSeries<C> f, const Rat& m) {
  if (m <= 0) throw DomainError("s_substitute: exponent scale must be positive");
  f.e0 *= m;
  f.step *= m;
  f.order *= m;
  return f;
}

template <class C>
QSeries<C> s_truncate(QSeries<C> f, const Rat& order) {
  if (order < f.order) f.order = order;
  return s_canonical(std::move(f));
}

template <class C>
struct Mismatch {
  Rat exponent;
  C delta;
};

template <class C>
struct CompareResult {
  bool equal{true};
  std::optional<Mismatch<C>> first_mismatch;
};

/* Compare coefficients of f and g for every exponent < bound.  Asking for
 * a bound beyond either side's knowledge is an error: silence there would
 * turn "unknown" into "equal".                                             */
template <class C>
CompareResult<C> s_equal_to_order(const QSeries<C>& f, const QSeries<C>& g,
                                  const Rat& bound) {
  if (bound > f.order || bound > g.order) {
    throw InsufficientOrderError(
        "comparison to q^" + rat_str(bound) + " needs both series exact there, " +
        "but orders are q^" + rat_str(f.order) + " and q^" + rat_str(g.order));
  }
  CompareResult<C> res;
  if (f.coeffs.empty() && g.coeffs.empty()) return res;
  Lattice flat{f.coeffs.empty() ? g.e0 : f.e0, f.coeffs.empty() ? g.step : f.step};
  Lattice glat{g.coeffs.empty() ? f.e0 : g.e0, g.coeffs.empty() ? f.step : g.step};
  Lattice lat = lattice_refine(flat, glat);
  long long n = lattice_count(lat, bound);
  auto at = [&](const QSeries<C>& s, long long i) -> C {
    Rat e = lat.e0 + Rat(i) * lat.step;
    auto idx = lattice_index(Lattice{s.e0, s.step}, e);
    if (!idx || *idx >= static_cast<long long>(s.coeffs.size())) return C(0);
    return s.coeffs[static_cast<std::size_t>(*idx)];
  };
  for (long long i = 0; i < n; ++i) {
    C d = at(f, i) - at(g, i);
    if (!coeff_is_zero(d)) {
      res.equal = false;
      res.first_mismatch = Mismatch<C>{lat.e0 + Rat(i) * lat.step, d};
      return res;
    }
  }
  return res;
}

inline KElem coeff_widen(const Rat& r) { return KElem(r); }
inline KElem coeff_widen(const KElem& e) { return e; }

/* Rational series embed into the field-coefficient world losslessly. */
template <class To, class From>
QSeries<To> series_cast(const QSeries<From>& f) {
  QSeries<To> r;
  r.e0 = f.e0;
  r.step = f.step;
  r.order = f.order;
  r.coeffs.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) r.coeffs.push_back(To(coeff_widen(c)));
  return r;
}

template <class C>
std::string s_to_text(const QSeries<C>& f, std::size_t max_terms = 12) {
  std::ostringstream out;
  bool first = true;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < f.coeffs.size() && shown < max_terms; ++i) {
    if (coeff_is_zero(f.coeffs[i])) continue;
    if (!first) out << " + ";
    Rat e = f.e0 + Rat(i) * f.step;
    out << "(" << coeff_str(f.coeffs[i]) << ")";
    if (e != 0) out << "*q^" << rat_str(e);
    first = false;
    ++shown;
  }
  if (first) out << "0";
  out << " + O(q^" << rat_str(f.order) << ")";
  return out.str();
}

}  // namespace qident
