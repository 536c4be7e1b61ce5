#pragma once

#include <functional>

#include "qfunctions.hpp"
#include "real.hpp"

namespace qident {

/* The five continued fractions this library handles, named by their
 * conventional letters: R (order five), S1/S2 (order ten), T1/T2 (order
 * twenty).  Each admits a closed theta-quotient form, which is what
 * cf_series expands, and a partial-quotient display, which is what
 * cf_numeric evaluates; the two routes are compared in the test suites
 * and never collapsed into one implementation.                             */
enum class CFName { R, S1, S2, T1, T2 };

inline const char* cf_name_str(CFName n) {
  switch (n) {
    case CFName::R: return "R";
    case CFName::S1: return "S1";
    case CFName::S2: return "S2";
    case CFName::T1: return "T1";
    case CFName::T2: return "T2";
  }
  return "?";
}

/* Theta-quotient closed forms:
 *   R(q)  = q^(1/5) f(-q, -q^4)  / f(-q^2, -q^3)
 *   S1(q) = q^(3/4) f(-q, -q^9)  / f(-q^4, -q^6)
 *   S2(q) = q^(1/4) f(-q^2, -q^8) / f(-q^3, -q^7)
 *   T1(q) = q       f(-q^3, -q^17) / f(-q^7, -q^13)
 *   T2(q) = q^2     f(-q, -q^19) / f(-q^9, -q^11)                          */
inline QSeries<Rat> cf_series(CFName name, const Rat& scale, const Rat& order) {
  if (scale <= 0) throw DomainError("cf_series: scale must be positive");
  Rat e0;
  int nx = 0, ny = 0, dx = 0, dy = 0;
  switch (name) {
    case CFName::R: e0 = Rat(1, 5); nx = 1; ny = 4; dx = 2; dy = 3; break;
    case CFName::S1: e0 = Rat(3, 4); nx = 1; ny = 9; dx = 4; dy = 6; break;
    case CFName::S2: e0 = Rat(1, 4); nx = 2; ny = 8; dx = 3; dy = 7; break;
    case CFName::T1: e0 = Rat(1); nx = 3; ny = 17; dx = 7; dy = 13; break;
    case CFName::T2: e0 = Rat(2); nx = 1; ny = 19; dx = 9; dy = 11; break;
  }
  Rat x_order = order / scale;
  QSeries<Rat> num = theta_fm(nx, ny, x_order);
  QSeries<Rat> den = theta_fm(dx, dy, x_order);
  QSeries<Rat> unit = s_mul(num, s_unit_inv(den));
  QSeries<Rat> shifted = s_shift(std::move(unit), Rat(1), e0);
  return s_substitute(s_truncate(std::move(shifted), x_order), scale);
}

/* n-th root of a continued fraction, n in {1, 2, 4, 8}: the fractional
 * powers that appear inside the dissection monomials.                      */
inline QSeries<Rat> cf_root(CFName name, int n, const Rat& scale,
                            const Rat& order) {
  if (n != 1 && n != 2 && n != 4 && n != 8) {
    throw DomainError("cf_root: root index must be one of 1, 2, 4, 8");
  }
  if (n == 1) return cf_series(name, scale, order);
  QSeries<Rat> base = cf_series(name, scale, order + 2 * scale);
  return s_truncate(s_nth_root(base, n), order);
}

/* Partial-quotient displays, evaluated by the backward recurrence
 *     acc = d_depth;   acc = d_j + n_{j+1} / acc   (j = depth-1 .. 0);
 *     value = q^e0 * L / acc.
 *
 * The five displays (j >= 1 throughout):
 *   R:  L = 1,       d_0 = 1,         n_j = q^j,            d_j = 1
 *   S1: L = 1 - q,   d_0 = 1-q^(5/2),
 *       n_j = q^(5/2) (1-q^((10j-7)/2)) (1-q^((10j-3)/2)),
 *       d_j = (1-q^(5/2)) (1+q^(5j))
 *   S2: L = 1 - q^2, d_0 = 1-q^(5/2),
 *       n_j = q^(5/2) (1-q^((10j-9)/2)) (1-q^((10j-1)/2)),
 *       d_j = (1-q^(5/2)) (1+q^(5j))
 *   T1: L = 1 - q^3, d_0 = 1-q^5,
 *       n_j = q^5 (1-q^(10j-8)) (1-q^(10j-2)),
 *       d_j = (1-q^5) (1+q^(10j))
 *   T2: L = 1 - q,   d_0 = 1-q^5,
 *       n_j = q^5 (1-q^(10j-6)) (1-q^(10j-4)),
 *       d_j = (1-q^5) (1+q^(10j))                                          */
inline Real cf_numeric(CFName name, const Real& q, int depth) {
  if (!(q > 0 && q < 1)) throw DomainError("cf_numeric: q must be in (0, 1)");
  if (depth < 1) throw DomainError("cf_numeric: depth must be positive");
  const Real one(1);
  Real e0, lead;
  Real qh = sqrt(q * q * q * q * q);  /* q^(5/2) */
  auto qp = [&](int n) { return pow(q, n); };
  auto qph = [&](int n) { return pow(sqrt(q), n); };  /* q^(n/2) */
  std::function<Real(int)> dj, nj;
  switch (name) {
    case CFName::R:
      e0 = pow_rat(q, Rat(1, 5));
      lead = one;
      dj = [&](int) { return one; };
      nj = [&](int j) { return qp(j); };
      break;
    case CFName::S1:
      e0 = pow_rat(q, Rat(3, 4));
      lead = one - q;
      dj = [&](int j) { return j == 0 ? one - qh : (one - qh) * (one + qp(5 * j)); };
      nj = [&](int j) { return qh * (one - qph(10 * j - 7)) * (one - qph(10 * j - 3)); };
      break;
    case CFName::S2:
      e0 = pow_rat(q, Rat(1, 4));
      lead = one - q * q;
      dj = [&](int j) { return j == 0 ? one - qh : (one - qh) * (one + qp(5 * j)); };
      nj = [&](int j) { return qh * (one - qph(10 * j - 9)) * (one - qph(10 * j - 1)); };
      break;
    case CFName::T1:
      e0 = q;
      lead = one - q * q * q;
      dj = [&](int j) { return j == 0 ? one - qp(5) : (one - qp(5)) * (one + qp(10 * j)); };
      nj = [&](int j) { return qp(5) * (one - qp(10 * j - 8)) * (one - qp(10 * j - 2)); };
      break;
    case CFName::T2:
      e0 = q * q;
      lead = one - q;
      dj = [&](int j) { return j == 0 ? one - qp(5) : (one - qp(5)) * (one + qp(10 * j)); };
      nj = [&](int j) { return qp(5) * (one - qp(10 * j - 6)) * (one - qp(10 * j - 4)); };
      break;
  }
  Real acc = dj(depth);
  for (int j = depth - 1; j >= 0; --j) acc = dj(j) + nj(j + 1) / acc;
  return e0 * lead / acc;
}

/* Evaluate a truncated series at a real point inside (0, 1).  The result
 * carries the truncation error of the series, roughly q^order.             */
template <class C>
Real series_numeric(const QSeries<C>& f, const Real& q) {
  if (!(q > 0 && q < 1)) throw DomainError("series_numeric: q must be in (0, 1)");
  Real acc = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (coeff_is_zero(f.coeffs[i])) continue;
    Rat e = f.e0 + Rat(i) * f.step;
    acc += coeff_to_real(f.coeffs[i]) * pow_rat(q, e);
  }
  return acc;
}

}  // namespace qident
