#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rational.hpp"

namespace qident {

/* Elements of the degree-4 number field Q(b), where b is the positive root
 * of x^4 - 5x^2 + 5 = 0, i.e. b = sqrt((5 + sqrt5)/2) = 2 cos(pi/10).
 * Coordinates are with respect to the power basis {1, b, b^2, b^3}, so
 * reduction uses b^4 = 5 b^2 - 5.  This field contains sqrt5 = b^2·2 - 5
 * and 2 cos(k pi / 10) for every integer k, which is exactly the coefficient
 * ring needed for the quintic-dissection computations in this library.      */
struct KElem {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  KElem() = default;
  KElem(int n) : c{Rat(n), Rat(0), Rat(0), Rat(0)} {}
  KElem(const Rat& r) : c{r, Rat(0), Rat(0), Rat(0)} {}
  KElem(Rat c0, Rat c1, Rat c2, Rat c3)
      : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static KElem beta() { return KElem(Rat(0), Rat(1), Rat(0), Rat(0)); }

  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

  friend bool operator==(const KElem& a, const KElem& b) { return a.c == b.c; }
  friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }
};

inline KElem k_add(const KElem& a, const KElem& b) {
  KElem r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

inline KElem k_neg(const KElem& a) {
  KElem r;
  for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
  return r;
}

inline KElem k_sub(const KElem& a, const KElem& b) { return k_add(a, k_neg(b)); }

/* Schoolbook product in Q[x]/(x^4 - 5x^2 + 5): convolve to degree 6, then
 * fold down with x^4 = 5x^2 - 5, x^5 = 5x^3 - 5x, x^6 = 20x^2 - 25.        */
inline KElem k_mul(const KElem& a, const KElem& b) {
  std::array<Rat, 7> d;
  d.fill(Rat(0));
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) d[i + j] += a.c[i] * b.c[j];
  }
  KElem r;
  r.c[0] = d[0] - 5 * d[4] - 25 * d[6];
  r.c[1] = d[1] - 5 * d[5];
  r.c[2] = d[2] + 5 * d[4] + 20 * d[6];
  r.c[3] = d[3] + 5 * d[5];
  return r;
}

inline KElem operator+(const KElem& a, const KElem& b) { return k_add(a, b); }
inline KElem operator-(const KElem& a, const KElem& b) { return k_sub(a, b); }
inline KElem operator-(const KElem& a) { return k_neg(a); }
inline KElem operator*(const KElem& a, const KElem& b) { return k_mul(a, b); }

/* Inverse by solving the 4x4 linear system M x = e_0, where M is the
 * multiplication-by-a matrix in the power basis (column j holds a * b^j).
 * Exact Gaussian elimination with a nonzero pivot always exists because a
 * nonzero element of a field has an invertible multiplication matrix.      */
inline KElem k_inv(const KElem& a) {
  if (a.is_zero()) throw DomainError("k_inv: zero has no inverse");
  Rat m[4][5];
  KElem col = KElem(1);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m[i][j] = k_mul(a, col).c[i];
    col = k_mul(col, KElem::beta());
  }
  for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? Rat(1) : Rat(0);

  for (int col_i = 0; col_i < 4; ++col_i) {
    int pivot = -1;
    for (int i = col_i; i < 4; ++i) {
      if (m[i][col_i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw DomainError("k_inv: singular multiplication matrix");
    if (pivot != col_i) {
      for (int j = 0; j < 5; ++j) std::swap(m[pivot][j], m[col_i][j]);
    }
    Rat inv_p = Rat(1) / m[col_i][col_i];
    for (int j = col_i; j < 5; ++j) m[col_i][j] *= inv_p;
    for (int i = 0; i < 4; ++i) {
      if (i == col_i || m[i][col_i] == 0) continue;
      Rat f = m[i][col_i];
      for (int j = col_i; j < 5; ++j) m[i][j] -= f * m[col_i][j];
    }
  }
  return KElem(m[0][4], m[1][4], m[2][4], m[3][4]);
}

inline KElem k_div(const KElem& a, const KElem& b) { return k_mul(a, k_inv(b)); }

/* Evaluate at the real embedding b = sqrt((5+sqrt5)/2), at whatever
 * precision Real carries.                                                  */
template <class Real>
Real k_to_real(const KElem& a) {
  Real b = sqrt((Real(5) + sqrt(Real(5))) / 2);
  Real acc = Real(0);
  Real p = Real(1);
  for (int i = 0; i < 4; ++i) {
    acc += Real(a.c[i]) * p;
    p *= b;
  }
  return acc;
}

/* Decimal rendering with `digits` significant digits, evaluated at 80
 * decimal digits of working precision so the rounded output is reliable
 * far beyond any digit count this library requests.                        */
inline std::string k_embed(const KElem& a, int digits) {
  if (digits < 1) throw DomainError("k_embed: digits must be positive");
  if (a.is_zero()) return "0." + std::string(static_cast<std::size_t>(digits), '0');
  using EmbedReal =
      boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>>;
  EmbedReal v = k_to_real<EmbedReal>(a);
  return v.str(digits);
}

/* Named constants.
 *
 * Shorthands used throughout (all positive reals):
 *   sqrt5          = 2 b^2 - 5
 *   sqrt(10+2√5)   = 2 b              (since 10 + 2√5 = 4 b^2)
 *   sqrt(10-2√5)   = 2 b^3 - 6 b
 *   sqrt(50-10√5)  = 10 b - 2 b^3     (= sqrt5 * sqrt(10-2√5))
 *   golden_p       = (1+√5)/2 = b^2 - 2
 *   golden_m       = (√5-1)/2 = b^2 - 3
 *   alpha(k)       = -2 cos(k pi / 10), k = 1..9.                          */
struct ConstName {
  enum class Tag {
    sqrt5,
    sqrt_10p2s5,
    sqrt_10m2s5,
    sqrt_50m10s5,
    golden_p,
    golden_m,
    alpha
  };
  Tag tag{Tag::sqrt5};
  int k{0};

  static ConstName sqrt5() { return {Tag::sqrt5, 0}; }
  static ConstName sqrt_10p2s5() { return {Tag::sqrt_10p2s5, 0}; }
  static ConstName sqrt_10m2s5() { return {Tag::sqrt_10m2s5, 0}; }
  static ConstName sqrt_50m10s5() { return {Tag::sqrt_50m10s5, 0}; }
  static ConstName golden_p() { return {Tag::golden_p, 0}; }
  static ConstName golden_m() { return {Tag::golden_m, 0}; }
  static ConstName alpha(int k) { return {Tag::alpha, k}; }
};

/* alpha(k) = -2 cos(k pi/10) expressed in the power basis, from Chebyshev
 * reduction of cos(k pi/10) against 2 cos(pi/10) = b:
 *   alpha(1) = -b            alpha(2) = 2 - b^2        alpha(3) = 3b - b^3
 *   alpha(4) = 3 - b^2       alpha(5) = 0              alpha(6) = b^2 - 3
 *   alpha(7) = b^3 - 3b      alpha(8) = b^2 - 2        alpha(9) = b
 * The symmetry alpha(k) + alpha(10-k) = 0 (from cos(pi - x) = -cos x) is
 * visible column by column.                                                */
inline KElem alpha_coeff(int k) {
  if (k < 1 || k > 9) throw DomainError("alpha(k): k must be in 1..9");
  switch (k) {
    case 1: return KElem(Rat(0), Rat(-1), Rat(0), Rat(0));
    case 2: return KElem(Rat(2), Rat(0), Rat(-1), Rat(0));
    case 3: return KElem(Rat(0), Rat(3), Rat(0), Rat(-1));
    case 4: return KElem(Rat(3), Rat(0), Rat(-1), Rat(0));
    case 5: return KElem(0);
    case 6: return KElem(Rat(-3), Rat(0), Rat(1), Rat(0));
    case 7: return KElem(Rat(0), Rat(-3), Rat(0), Rat(1));
    case 8: return KElem(Rat(-2), Rat(0), Rat(1), Rat(0));
    default: return KElem(Rat(0), Rat(1), Rat(0), Rat(0));
  }
}

inline KElem const_lookup(const ConstName& name) {
  using Tag = ConstName::Tag;
  switch (name.tag) {
    case Tag::sqrt5: return KElem(Rat(-5), Rat(0), Rat(2), Rat(0));
    case Tag::sqrt_10p2s5: return KElem(Rat(0), Rat(2), Rat(0), Rat(0));
    case Tag::sqrt_10m2s5: return KElem(Rat(0), Rat(-6), Rat(0), Rat(2));
    case Tag::sqrt_50m10s5: return KElem(Rat(0), Rat(10), Rat(0), Rat(-2));
    case Tag::golden_p: return KElem(Rat(-2), Rat(0), Rat(1), Rat(0));
    case Tag::golden_m: return KElem(Rat(-3), Rat(0), Rat(1), Rat(0));
    case Tag::alpha: return alpha_coeff(name.k);
  }
  throw DomainError("const_lookup: unknown constant");
}

}  // namespace qident
