#pragma once

#include <random>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "real.hpp"

namespace qident {

/* theta_1 with nome p (|p| < 1):
 *     theta1(z, p) = 2 sum_{n>=0} (-1)^n p^((2n+1)^2/8) sin((2n+1) z).
 * The convention matches series in the modular parameterization where the
 * function of z | N tau carries nome p = q^N.                              */
inline Cplx theta1_sum(const Cplx& z, const Real& p) {
  if (!(p > 0 && p < 1)) throw DomainError("theta1_sum: nome must be in (0, 1)");
  Cplx acc{Real(0), Real(0)};
  const Real floor_mag("1e-75");
  int small_streak = 0;
  for (int n = 0; n < 500; ++n) {
    Real w = pow(p, Real((2 * n + 1) * (2 * n + 1)) / 8);
    Cplx term = w * csin(Real(2 * n + 1) * z);
    if (n % 2 == 1) term = Cplx{Real(0), Real(0)} - term;
    acc = acc + term;
    if (cabs(term) < floor_mag * (Real(1) + cabs(acc))) {
      if (++small_streak >= 3) break;
    } else {
      small_streak = 0;
    }
  }
  return Real(2) * acc;
}

inline Cplx operator*(const Cplx& a, const Real& s) { return s * a; }

inline Real theta1_sum_real(const Real& z, const Real& p) {
  return theta1_sum(Cplx{z, Real(0)}, p).re;
}

/* Product form over the reals:
 *     theta1(z, p) = 2 p^(1/8) sin z prod_{n>=1} (1-p^n)(1 - 2 p^n cos 2z + p^(2n)). */
inline Real theta1_product(const Real& z, const Real& p) {
  if (!(p > 0 && p < 1)) throw DomainError("theta1_product: nome must be in (0, 1)");
  Real acc = 2 * pow_rat(p, Rat(1, 8)) * sin(z);
  Real c2 = cos(2 * z);
  Real pn = p;
  const Real floor_mag("1e-72");
  while (pn > floor_mag) {
    acc *= (1 - pn) * (1 - 2 * pn * c2 + pn * pn);
    pn *= p;
  }
  return acc;
}

/* theta1'(0, p) = 2 p^(1/8) (p; p)_inf^3. */
inline Real theta1_prime0(const Real& p) {
  Real e = 1;
  Real pn = p;
  const Real floor_mag("1e-72");
  while (pn > floor_mag) {
    e *= 1 - pn;
    pn *= p;
  }
  return 2 * pow_rat(p, Rat(1, 8)) * e * e * e;
}

/* eta-like numeric helper q^(t/24) prod (1 - q^(t n)). */
inline Real eta_numeric(long long t, const Real& q) {
  Real e = 1;
  Real x = pow(q, static_cast<int>(t));
  Real xn = x;
  const Real floor_mag("1e-72");
  while (xn > floor_mag) {
    e *= 1 - xn;
    xn *= x;
  }
  return pow_rat(q, Rat(t, 24)) * e;
}

inline std::string real_str(const Real& x, unsigned digits = 3) {
  return x.str(digits, std::ios_base::scientific);
}

struct CheckResult {
  bool pass{true};
  Real worst{0};
  std::vector<std::string> samples;
  std::string detail;
};

inline void record(CheckResult& r, const std::string& label, const Real& err,
                   const Real& tol) {
  if (!(err < tol)) r.pass = false;
  if (err > r.worst) r.worst = err;
  r.samples.push_back(label + " err=" + real_str(err));
}

/* sin-ratio tables: numeric n-th value against the exact period-20 closed
 * form.  `which` selects one of the three coefficient combinations used by
 * the dissections:
 *   1:  s_1(n) - s_9(n)
 *   2:  (1 + alpha(9)) s_9(n) + (1 + alpha(1)) s_1(n)
 *   3:  alpha(9) s_9(n) - alpha(1) s_1(n)
 * with s_k(n) = sin((2n+1) k pi/20) / sin(k pi/20).                        */
inline KElem a_table_exact(int which, long long n) {
  static const KElem sp = const_lookup(ConstName::sqrt_10p2s5());
  static const KElem sm = const_lookup(ConstName::sqrt_10m2s5());
  static const KElem s5 = const_lookup(ConstName::sqrt5());
  static const KElem h = k_add(sm, sp);
  std::vector<KElem> five;
  switch (which) {
    case 1:
      five = {KElem(0), sp, sp, h, h};
      break;
    case 2:
      five = {KElem(2), k_neg(k_add(KElem(3), s5)), KElem(-2),
              k_neg(k_add(k_mul(KElem(2), s5), KElem(2))),
              k_neg(k_add(KElem(3), s5))};
      break;
    case 3:
      five = {sp, sp, k_add(sm, k_mul(KElem(2), sp)),
              k_add(sm, k_mul(KElem(2), sp)),
              k_add(k_mul(KElem(2), sm), k_mul(KElem(2), sp))};
      break;
    default:
      throw DomainError("a_table_exact: table index must be 1, 2, or 3");
  }
  long long r = n % 20;
  if (r < 0) r += 20;
  bool negate = r >= 10;
  long long r10 = r % 10;
  KElem v = five[static_cast<std::size_t>(r10 <= 4 ? r10 : 9 - r10)];
  return negate ? k_neg(v) : v;
}

inline CheckResult a_table_check(int which, long long n_lo, long long n_hi,
                                 const Real& tol) {
  CheckResult res;
  const Real pi = real_pi();
  Real s1d = sin(pi / 20);
  Real s9d = sin(9 * pi / 20);
  Real a1 = coeff_to_real(alpha_coeff(1));
  Real a9 = coeff_to_real(alpha_coeff(9));
  Real worst = 0;
  long long worst_n = n_lo;
  for (long long n = n_lo; n < n_hi; ++n) {
    Real s1 = sin(Real(2 * n + 1) * pi / 20) / s1d;
    Real s9 = sin(Real(2 * n + 1) * 9 * pi / 20) / s9d;
    Real numeric;
    switch (which) {
      case 1: numeric = s1 - s9; break;
      case 2: numeric = (1 + a9) * s9 + (1 + a1) * s1; break;
      case 3: numeric = a9 * s9 - a1 * s1; break;
      default: throw DomainError("a_table_check: table index must be 1, 2, or 3");
    }
    Real err = abs(numeric - coeff_to_real(a_table_exact(which, n)));
    if (err > worst) {
      worst = err;
      worst_n = n;
    }
  }
  record(res, "table=" + std::to_string(which) + " n=[" + std::to_string(n_lo) +
                  "," + std::to_string(n_hi) + ") worst_at=" +
                  std::to_string(worst_n),
         worst, tol);
  return res;
}

/* prod_{k=1..9} sin(k pi / 20) = sqrt(10) / 512. */
inline CheckResult sine_product_check(const Real& tol) {
  CheckResult res;
  const Real pi = real_pi();
  Real prod = 1;
  for (int k = 1; k <= 9; ++k) prod *= sin(Real(k) * pi / 20);
  Real err = abs(prod - sqrt(Real(10)) / 512);
  record(res, "prod sin(k pi/20)", err, tol);
  return res;
}

/* prod_{k=1..9} theta1(k pi/20, q) = sqrt(10) eta(tau)^9 eta(20 tau) / eta(2 tau),
 * checked at q = 1/10.                                                     */
inline CheckResult theta_sine_product_check(const Real& tol) {
  CheckResult res;
  const Real pi = real_pi();
  const Real q = Real(1) / 10;
  Real lhs = 1;
  for (int k = 1; k <= 9; ++k) lhs *= theta1_sum_real(Real(k) * pi / 20, q);
  Real rhs = sqrt(Real(10));
  Real e1 = eta_numeric(1, q);
  for (int i = 0; i < 9; ++i) rhs *= e1;
  rhs *= eta_numeric(20, q) / eta_numeric(2, q);
  record(res, "q=0.1", abs(lhs - rhs), tol);
  return res;
}

/* Sum-vs-product agreement of theta1 itself on seeded random samples. */
inline CheckResult theta1_pair_check(int count, unsigned seed, const Real& tol) {
  CheckResult res;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> qd(0.02, 0.45);
  std::uniform_real_distribution<double> zd(0.05, 1.5);
  for (int i = 0; i < count; ++i) {
    Real p(qd(rng));
    Real z(zd(rng));
    Real err = abs(theta1_sum_real(z, p) - theta1_product(z, p));
    record(res, "p=" + real_str(p) + " z=" + real_str(z), err, tol);
  }
  return res;
}

/* Central finite difference of the sum form at 0 against the closed
 * product form of theta1'(0).                                              */
inline CheckResult theta1_prime_fd_check(const Real& tol) {
  CheckResult res;
  const Real h("1e-12");
  for (double pd : {0.08, 0.15, 0.3}) {
    Real p(pd);
    Real fd = (theta1_sum_real(h, p) - theta1_sum_real(-h, p)) / (2 * h);
    Real err = abs(fd - theta1_prime0(p));
    record(res, "p=" + real_str(p), err, tol);
  }
  return res;
}

enum class EsLemma { first, second };

struct EsSample {
  Real q;
  Real z;
};

inline std::vector<EsSample> es_default_samples() {
  return {{Real("0.15"), Real("0.7")},
          {Real("0.1"), Real("1.1")},
          {Real("0.2"), Real("0.4")}};
}

/* The two sine-weighted Lambert sums and their theta-quotient closed forms:
 *
 *   sum_{n>=1} (q^n - q^(9n) - q^(11n) + q^(19n)) / (1 - q^(20n)) sin(2nz)
 *     = - theta1'(0|20tau) theta1(2z|20tau) theta1(10 pi tau|20tau) theta1(8 pi tau|20tau)
 *       / (4 theta1(z-pi tau|20tau) theta1(z+pi tau|20tau)
 *            theta1(z-9 pi tau|20tau) theta1(z+9 pi tau|20tau)),
 *
 * and the (3, 7, 13, 17) variant with theta1(4 pi tau) upstairs and shifts
 * 3 pi tau, 7 pi tau downstairs.  Here q = e^(2 pi i tau), so the nome of
 * the 20tau functions is q^20 and pi tau = -(ln q)/2 * i.  A sample whose
 * denominator factors nearly vanish is rejected as ill-conditioned.        */
inline CheckResult es_lemma_check(EsLemma which, const std::vector<EsSample>& samples,
                                  const Real& tol) {
  CheckResult res;
  for (const auto& s : samples) {
    if (!(s.q > 0 && s.q < 1)) throw DomainError("es_lemma_check: q must be in (0, 1)");
    Real p20 = pow(s.q, 20);
    Cplx ptau{Real(0), -log(s.q) / 2};
    int r1 = which == EsLemma::first ? 1 : 3;
    int r2 = which == EsLemma::first ? 9 : 7;
    int top = which == EsLemma::first ? 8 : 4;

    Real lhs = 0;
    for (int n = 1; n < 4000; ++n) {
      Real qn = pow(s.q, n);
      if (qn < Real("1e-66")) break;
      Real num = pow(s.q, r1 * n) - pow(s.q, (10 - r1) * n) -
                 pow(s.q, (10 + r1) * n) + pow(s.q, (20 - r1) * n);
      lhs += num / (1 - pow(s.q, 20 * n)) * sin(2 * n * s.z);
    }

    Cplx z{s.z, Real(0)};
    auto th = [&](const Cplx& arg) { return theta1_sum(arg, p20); };
    Cplx d1 = th(z - Real(r1) * ptau);
    Cplx d2 = th(z + Real(r1) * ptau);
    Cplx d3 = th(z - Real(r2) * ptau);
    Cplx d4 = th(z + Real(r2) * ptau);
    for (const Cplx& d : {d1, d2, d3, d4}) {
      if (cabs(d) < Real("1e-10")) {
        throw DomainError("es_lemma_check: sample rejected, denominator nearly vanishes");
      }
    }
    Cplx num = Cplx{-theta1_prime0(p20), Real(0)} * th(Real(2) * z) *
               th(Real(10) * ptau) * th(Real(top) * ptau);
    Cplx rhs = num / (Real(4) * d1 * d2 * d3 * d4);
    Real err = abs(lhs - rhs.re) + abs(rhs.im);
    record(res, "q=" + real_str(s.q) + " z=" + real_str(s.z), err, tol);
  }
  return res;
}

/* Quintuple-free product shift identity for theta1 at third-period offsets:
 *     theta1(pi/3 - z, p) theta1(pi/3 + z, p)
 *         = (p; p)^3 theta1(3z, p^3) / ((p^3; p^3) theta1(z, p)),
 * plus the closed evaluation theta1(2 pi/3, p) = sqrt3 p^(1/8) (p^3; p^3). */
inline CheckResult liu_shift_check(const Real& tol) {
  CheckResult res;
  const Real pi = real_pi();
  auto euler = [&](const Real& x) {
    Real e = 1;
    Real xn = x;
    while (xn > Real("1e-72")) {
      e *= 1 - xn;
      xn *= x;
    }
    return e;
  };
  struct P {
    double q, z;
  };
  for (P s : {P{0.1, 0.5}, P{0.25, 0.9}, P{0.18, 1.3}}) {
    Real p(s.q), z(s.z);
    Real lhs = theta1_sum_real(pi / 3 - z, p) * theta1_sum_real(pi / 3 + z, p);
    Real p3 = p * p * p;
    Real rhs = euler(p) * euler(p) * euler(p) * theta1_sum_real(3 * z, p3) /
               (euler(p3) * theta1_sum_real(z, p));
    record(res, "p=" + real_str(p) + " z=" + real_str(z), abs(lhs - rhs), tol);
  }
  Real p("0.15");
  Real lhs = theta1_sum_real(2 * pi / 3, p);
  Real rhs = sqrt(Real(3)) * pow_rat(p, Rat(1, 8)) * euler(p * p * p);
  record(res, "third-period value p=0.15", abs(lhs - rhs), tol);
  return res;
}

}  // namespace qident
