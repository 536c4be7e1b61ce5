#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kelem.hpp"
#include "rational.hpp"

namespace qident {

/* Working precision for every floating-point oracle: 60 decimal digits.
 * Requested check tolerances stay many orders of magnitude above the
 * roundoff floor this gives.                                               */
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

inline Real real_pi() { return acos(Real(-1)); }

inline Real pow_rat(const Real& base, const Rat& e) {
  if (base <= 0) throw DomainError("pow_rat: base must be positive");
  return pow(base, Real(e));
}

inline Real coeff_to_real(const Rat& c) { return Real(c); }
inline Real coeff_to_real(const KElem& c) { return k_to_real<Real>(c); }

/* Minimal complex arithmetic over Real; std::complex is specified only for
 * built-in floating types, so the few operations needed here are spelled
 * out instead.                                                             */
struct Cplx {
  Real re{0};
  Real im{0};
};

inline Cplx operator+(const Cplx& a, const Cplx& b) {
  return {a.re + b.re, a.im + b.im};
}
inline Cplx operator-(const Cplx& a, const Cplx& b) {
  return {a.re - b.re, a.im - b.im};
}
inline Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
  Real n = b.re * b.re + b.im * b.im;
  if (n == 0) throw DomainError("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline Real cabs(const Cplx& a) { return sqrt(a.re * a.re + a.im * a.im); }

/* sin(x + iy) = sin x cosh y + i cos x sinh y. */
inline Cplx csin(const Cplx& z) {
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

}  // namespace qident
