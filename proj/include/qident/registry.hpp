#pragma once

/* The identity registry: a closed-world catalog of verifiable statements.
 * Each entry packages two expression builders (left and right side), a
 * comparison mode, and default truncation orders.  Exact entries build
 * both sides as truncated series and compare coefficient-by-coefficient;
 * numeric entries run a high-precision floating oracle over fixed sample
 * points.  Entries marked `document` are alternate readings or corrected
 * forms: their outcome is recorded but never affects the aggregate exit
 * code, which depends only on entries expected to pass.                    */

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qident/cfractions.hpp"
#include "qident/chebyshev.hpp"
#include "qident/eisenstein.hpp"
#include "qident/kelem.hpp"
#include "qident/numeric.hpp"
#include "qident/qfunctions.hpp"
#include "qident/rational.hpp"
#include "qident/series.hpp"

namespace qident {

enum class CheckMode { exact, numeric };
enum class RingKind { rational, field };
enum class Expectation { pass, document };
enum class RingHint { automatic, rational, field };
enum class Profile { quick, full };

struct IdentitySpec {
  std::string id;
  std::string description;
  CheckMode mode{CheckMode::exact};
  RingKind ring{RingKind::rational};
  Expectation expected{Expectation::pass};
  Rat full_order{0};
  Rat quick_order{0};
  /* Exact entries fill the builder pair matching `ring`; numeric entries
   * fill `numeric_run` instead.  Builders receive the comparison bound
   * and must return series truncated at or beyond it.                      */
  std::function<QSeries<Rat>(const Rat&)> lhs_rat, rhs_rat;
  std::function<QSeries<KElem>(const Rat&)> lhs_field, rhs_field;
  std::function<CheckResult()> numeric_run;
};

struct ReportMismatch {
  Rat exponent;
  KElem delta;
};

struct Report {
  std::string id;
  std::string status;  /* "pass", "fail", or "error" */
  CheckMode mode{CheckMode::exact};
  Rat order{0};
  std::vector<std::string> samples;
  std::optional<ReportMismatch> first_mismatch;
  std::string message;
  long long wall_ms{0};
};

namespace detail {

/* ---- shared builders for the order-five dissection identities ---------- */

/* The ten dissection identities all combine the same shell series and the
 * same six root monomials.  Both shells are unary in q; the left sides
 * live on the q^(1/5) lattice.  With
 *     psi_shell = q^(19/40) eta(4t)/(eta(t/5) eta(4t/5)) * f(-q^5,-q^15),
 *     eta_shell = q^(-3/20) eta(4t) eta(20t) eta(t)^(1/8)
 *                           / (eta(t/5) eta(4t/5) eta(5t)^(1/8)),
 * the right sides are field-coefficient combinations of psi_shell and
 * eta_shell times one of
 *     recip_t1s2r = 1 / (T1^(1/2) S2^(1/4) R^(1/8)),
 *     t1_over_s2r = T1^(1/2) / (S2^(1/4) R^(1/8)),
 *     t1s1r       = T1^(1/2) S1^(1/4) R^(1/8),
 *     t1s2r       = T1^(1/2) S2^(1/4) R^(1/8),
 *     s1r_over_t2 = S1^(1/4) R^(1/8) / T2^(1/2),
 *     t2s1r       = T2^(1/2) S1^(1/4) R^(1/8).
 * Root series are built with a cushion of six beyond the comparison bound
 * because inversion spends 2 e0 of order and every product loses the
 * partner's leading exponent.                                              */
struct DissectionPieces {
  QSeries<Rat> psi_shell, eta_shell;
  QSeries<Rat> recip_t1s2r, t1_over_s2r, t1s1r, t1s2r, s1r_over_t2, t2s1r;
  QSeries<Rat> sh_u, sh_v, sh_w, sh_w2, sh_y, sh_y2;
  QSeries<KElem> omega1, omega3, omega7, omega9;
  QSeries<KElem> prod_all, prod_no1, prod_no9;
};

inline DissectionPieces build_dissection(const Rat& bound) {
  DissectionPieces p;
  Rat shell_ord = bound + 2;
  Rat root_ord = bound + 6;

  QSeries<Rat> rt_t1 = cf_root(CFName::T1, 2, 1, root_ord);
  QSeries<Rat> rt_t2 = cf_root(CFName::T2, 2, 1, root_ord);
  QSeries<Rat> rt_s1 = cf_root(CFName::S1, 4, 1, root_ord);
  QSeries<Rat> rt_s2 = cf_root(CFName::S2, 4, 1, root_ord);
  QSeries<Rat> rt_r = cf_root(CFName::R, 8, 1, root_ord);
  QSeries<Rat> s1r = s_mul(rt_s1, rt_r);
  QSeries<Rat> s2r = s_mul(rt_s2, rt_r);
  p.recip_t1s2r = s_unit_inv(s_mul(rt_t1, s2r));
  p.t1_over_s2r = s_mul(rt_t1, s_unit_inv(s2r));
  p.t1s1r = s_mul(rt_t1, s1r);
  p.t1s2r = s_mul(rt_t1, s2r);
  p.s1r_over_t2 = s_mul(s1r, s_unit_inv(rt_t2));
  p.t2s1r = s_mul(rt_t2, s1r);

  QSeries<Rat> narrow = eta_quotient(
      {{4, 1}, {Rat(1, 5), -1}, {Rat(4, 5), -1}}, shell_ord);
  p.psi_shell = s_shift(s_mul(narrow, theta_fm(5, 15, shell_ord)), Rat(1),
                        Rat(19, 40));
  p.eta_shell = s_shift(
      eta_quotient({{4, 1},
                    {20, 1},
                    {1, Rat(1, 8)},
                    {Rat(1, 5), -1},
                    {Rat(4, 5), -1},
                    {5, Rat(-1, 8)}},
                   shell_ord),
      Rat(1), Rat(-3, 20));

  p.sh_u = s_mul(p.eta_shell, p.recip_t1s2r);
  p.sh_v = s_mul(p.eta_shell, p.t1_over_s2r);
  p.sh_w = s_mul(p.eta_shell, p.t1s1r);
  p.sh_w2 = s_mul(p.eta_shell, p.t1s2r);
  p.sh_y = s_mul(p.eta_shell, p.s1r_over_t2);
  p.sh_y2 = s_mul(p.eta_shell, p.t2s1r);

  Rat fifth(1, 5);
  p.omega1 = omega(1, fifth, bound);
  p.omega3 = omega(3, fifth, bound);
  p.omega7 = omega(7, fifth, bound);
  p.omega9 = omega(9, fifth, bound);
  QSeries<KElem> mid = omega(2, fifth, bound);
  for (int k : {3, 4, 6, 7, 8}) mid = s_mul(mid, omega(k, fifth, bound));
  p.prod_no1 = s_mul(mid, p.omega9);
  p.prod_no9 = s_mul(mid, p.omega1);
  p.prod_all = s_mul(p.prod_no1, p.omega1);
  return p;
}

inline std::shared_ptr<const DissectionPieces> dissection_pieces(
    const Rat& bound) {
  static std::mutex mu;
  static std::map<Rat, std::shared_ptr<const DissectionPieces>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const DissectionPieces>(build_dissection(bound));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(bound, built);
  (void)inserted;
  return it->second;
}

/* Right-side assembly: psi_shell and the six shell monomials, each scaled
 * by a field constant.  Zero coefficients skip their term entirely so an
 * all-zero row yields the zero series at the bound.                        */
struct ShellCoeffs {
  KElem ash, u, v, w, w2, y, y2;
};

inline QSeries<KElem> shell_combination(const DissectionPieces& p,
                                        const ShellCoeffs& c, const Rat& bound) {
  QSeries<KElem> acc = s_zero<KElem>(bound);
  auto put = [&](const KElem& k, const QSeries<Rat>& s) {
    if (k.is_zero()) return;
    acc = s_add(acc, s_scale(series_cast<KElem>(s), k));
  };
  put(c.ash, p.psi_shell);
  put(c.u, p.sh_u);
  put(c.v, p.sh_v);
  put(c.w, p.sh_w);
  put(c.w2, p.sh_w2);
  put(c.y, p.sh_y);
  put(c.y2, p.sh_y2);
  return acc;
}

/* One dissection identity: the left side combines two of the quadratic-
 * factor products against the full product over k != 5, everything in
 * q^(1/5); the cataloged right side and the corrected right side are
 * rows of shell coefficients.  The corrected row always replaces the
 * final monomial by t2s1r and is registered separately as `-derived`.     */
struct DissectionRow {
  const char* base;
  const char* what;
  int k_hi, k_lo;
  KElem c_hi, c_lo;
  ShellCoeffs printed;
  ShellCoeffs corrected;
};

inline const QSeries<KElem>& omega_of(const DissectionPieces& p, int k) {
  switch (k) {
    case 1: return p.omega1;
    case 3: return p.omega3;
    case 7: return p.omega7;
    case 9: return p.omega9;
  }
  throw DomainError("dissection combination uses k in {1,3,7,9}");
}

inline QSeries<KElem> dissection_lhs(const DissectionPieces& p,
                                     const DissectionRow& row) {
  QSeries<KElem> combo = s_add(s_scale(omega_of(p, row.k_hi), row.c_hi),
                               s_scale(omega_of(p, row.k_lo), row.c_lo));
  return s_mul(combo, p.prod_all);
}

}  // namespace detail

/* ---- registry ---------------------------------------------------------- */

class Registry {
 public:
  Registry();
  const std::vector<IdentitySpec>& entries() const { return entries_; }
  const IdentitySpec* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

 private:
  void add(IdentitySpec spec);
  std::vector<IdentitySpec> entries_;
  std::map<std::string, std::size_t> index_;
};

inline void Registry::add(IdentitySpec spec) {
  if (index_.count(spec.id)) {
    throw std::logic_error("duplicate registry id: " + spec.id);
  }
  entries_.push_back(std::move(spec));
}

inline Registry::Registry() {
  using detail::DissectionPieces;
  using detail::dissection_pieces;
  using detail::shell_combination;
  using detail::ShellCoeffs;
  using detail::DissectionRow;

  auto tf = [](long long x, long long y, const Rat& ord) {
    return theta_f(mono_pos(x), mono_pos(y), ord);
  };
  auto tfm = [](long long x, long long y, const Rat& ord) {
    return theta_fm(x, y, ord);
  };

  /* -- classical building blocks ---------------------------------------- */
  {
    IdentitySpec e;
    e.id = "pentagonal";
    e.description =
        "product (q;q)_inf equals the alternating bilateral sum of "
        "q^(n(3n-1)/2)";
    e.ring = RingKind::rational;
    e.full_order = 40;
    e.quick_order = 24;
    e.lhs_rat = [](const Rat& o) { return pochhammer(mono_pos(1), 1, o); };
    e.rhs_rat = [](const Rat& o) {
      return theta_f(mono_neg(1), mono_neg(2), o, ThetaMethod::bilateral_sum);
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "psi-product";
    e.description =
        "psi(q) = (q^2;q^2)_inf / (q;q^2)_inf equals the triangular-number "
        "sum f(q,q^3)";
    e.ring = RingKind::rational;
    e.full_order = 40;
    e.quick_order = 24;
    e.lhs_rat = [](const Rat& o) {
      return s_mul(pochhammer(mono_pos(2), 2, o),
                   s_unit_inv(pochhammer(mono_pos(1), 2, o)));
    };
    e.rhs_rat = [](const Rat& o) {
      return theta_f(mono_pos(1), mono_pos(3), o, ThetaMethod::bilateral_sum);
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "jtp-spot";
    e.description =
        "triple-product and bilateral-sum evaluations of f(-q^3,-q^17) agree";
    e.ring = RingKind::rational;
    e.full_order = 40;
    e.quick_order = 24;
    e.lhs_rat = [](const Rat& o) {
      return theta_f(mono_neg(3), mono_neg(17), o, ThetaMethod::triple_product);
    };
    e.rhs_rat = [](const Rat& o) {
      return theta_f(mono_neg(3), mono_neg(17), o, ThetaMethod::bilateral_sum);
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "eta-def";
    e.description = "eta quotient machinery reproduces q^(1/24) (q;q)_inf";
    e.ring = RingKind::rational;
    e.full_order = 40;
    e.quick_order = 24;
    e.lhs_rat = [](const Rat& o) { return eta_quotient({{1, 1}}, o); };
    e.rhs_rat = [](const Rat& o) {
      return s_shift(pochhammer(mono_pos(1), 1, o), Rat(1), Rat(1, 24));
    };
    add(std::move(e));
  }

  /* -- four-way theta splittings over seven argument pairs --------------- *
   * With a = q^x, b = q^y the four statements read
   *   (f1)  f(a,ab^2) f(b,a^2 b) = f(a,b) psi(ab),
   *   (f2)  f(a,b) + f(-a,-b)    = 2 f(a^3 b, a b^3),
   *   (f3)  f(a,b) - f(-a,-b)    = 2a f(b/a, a^5 b^3),
   *   (f4)  f(-a,-b) = f(a^3 b, a b^3) - a f(b/a, a^5 b^3).
   * The pair x = y = 1 degenerates f(b/a, .) to f(1, q^8), whose lattice
   * doubling the theta kernel handles directly.                            */
  {
    const std::pair<long long, long long> pairs[] = {
        {1, 1}, {1, 2}, {5, 95}, {15, 85}, {25, 75}, {35, 65}, {45, 55}};
    auto exp_tag = [](long long n) {
      return n == 1 ? std::string("q") : "q" + std::to_string(n);
    };
    for (auto [x, y] : pairs) {
      std::string suffix = "-a=" + exp_tag(x) + "-b=" + exp_tag(y);
      {
        IdentitySpec e;
        e.id = "lemma2-f1" + suffix;
        e.description = "theta product splitting f(a,ab^2) f(b,a^2b) = "
                        "f(a,b) psi(ab) at a=q^" + std::to_string(x) +
                        ", b=q^" + std::to_string(y);
        e.ring = RingKind::rational;
        e.full_order = 25;
        e.quick_order = 15;
        e.lhs_rat = [=](const Rat& o) {
          return s_mul(tf(x, x + 2 * y, o), tf(y, 2 * x + y, o));
        };
        e.rhs_rat = [=](const Rat& o) {
          return s_mul(tf(x, y, o), tf(x + y, 3 * (x + y), o));
        };
        add(std::move(e));
      }
      {
        IdentitySpec e;
        e.id = "lemma2-f2" + suffix;
        e.description = "even part 2 f(a^3b,ab^3) of f(a,b) + f(-a,-b) at "
                        "a=q^" + std::to_string(x) + ", b=q^" +
                        std::to_string(y);
        e.ring = RingKind::rational;
        e.full_order = 25;
        e.quick_order = 15;
        e.lhs_rat = [=](const Rat& o) {
          return s_add(tf(x, y, o), tfm(x, y, o));
        };
        e.rhs_rat = [=](const Rat& o) {
          return s_scale(tf(3 * x + y, x + 3 * y, o), Rat(2));
        };
        add(std::move(e));
      }
      {
        IdentitySpec e;
        e.id = "lemma2-f3" + suffix;
        e.description = "odd part 2a f(b/a,a^5b^3) of f(a,b) - f(-a,-b) at "
                        "a=q^" + std::to_string(x) + ", b=q^" +
                        std::to_string(y);
        e.ring = RingKind::rational;
        e.full_order = 25;
        e.quick_order = 15;
        e.lhs_rat = [=](const Rat& o) {
          return s_sub(tf(x, y, o), tfm(x, y, o));
        };
        e.rhs_rat = [=](const Rat& o) {
          return s_shift(tf(y - x, 5 * x + 3 * y, o), Rat(2), Rat(x));
        };
        add(std::move(e));
      }
      {
        IdentitySpec e;
        e.id = "lemma2-f4" + suffix;
        e.description = "sign-flip decomposition f(-a,-b) = f(a^3b,ab^3) - "
                        "a f(b/a,a^5b^3) at a=q^" + std::to_string(x) +
                        ", b=q^" + std::to_string(y);
        e.ring = RingKind::rational;
        e.full_order = 25;
        e.quick_order = 15;
        e.lhs_rat = [=](const Rat& o) { return tfm(x, y, o); };
        e.rhs_rat = [=](const Rat& o) {
          return s_sub(tf(3 * x + y, x + 3 * y, o),
                       s_shift(tf(y - x, 5 * x + 3 * y, o), Rat(1), Rat(x)));
        };
        add(std::move(e));
      }
    }
  }

  /* -- cyclotomic factorization and the omega product --------------------- */
  {
    IdentitySpec e;
    e.id = "x20-cyclotomic";
    e.description =
        "x^20 - 1 = (x^2 - 1) prod_k (x^2 + alpha_k x + 1) over k = 1..9";
    e.ring = RingKind::field;
    e.full_order = 22;
    e.quick_order = 22;
    e.lhs_field = [](const Rat& o) {
      return s_sub(s_monomial(KElem(1), Rat(20), o), s_const(KElem(1), o));
    };
    e.rhs_field = [](const Rat& o) {
      QSeries<KElem> acc =
          s_sub(s_monomial(KElem(1), Rat(2), o), s_const(KElem(1), o));
      for (int k = 1; k <= 9; ++k) {
        QSeries<KElem> fac = s_add(
            s_add(s_monomial(KElem(1), Rat(2), o),
                  s_monomial(alpha_coeff(k), Rat(1), o)),
            s_const(KElem(1), o));
        acc = s_mul(acc, fac);
      }
      return acc;
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "eq-prodK";
    e.description =
        "prod_{k=1..9} omega_k(q) collapses to the rational quotient "
        "(q^20;q^20)_inf / (q^2;q^2)_inf";
    e.ring = RingKind::field;
    e.full_order = 30;
    e.quick_order = 20;
    e.lhs_field = [](const Rat& o) {
      QSeries<KElem> acc = omega(1, 1, o);
      for (int k = 2; k <= 9; ++k) acc = s_mul(acc, omega(k, 1, o));
      return acc;
    };
    e.rhs_field = [](const Rat& o) {
      QSeries<Rat> quot =
          s_shift(eta_quotient({{20, 1}, {2, -1}}, o + Rat(3, 4)), Rat(1),
                  Rat(-3, 4));
      return series_cast<KElem>(quot);
    };
    add(std::move(e));
  }

  /* -- theta expansion of each omega_k ------------------------------------ *
   * (q;q)_inf omega_k(q) = sum_{n>=0} (-1)^n s_k(n) q^(n(n+1)/2) with the
   * sine ratios s_k(n) = sin((2n+1) k pi/20) / sin(k pi/20) taken exactly
   * in Q(beta) via their Chebyshev recurrence.                             */
  for (int k = 1; k <= 9; ++k) {
    IdentitySpec e;
    e.id = "omega-theta-" + std::to_string(k);
    e.description = "alternating sine-ratio series over triangular numbers "
                    "equals (q;q)_inf omega_" + std::to_string(k) + "(q)";
    e.ring = RingKind::field;
    e.full_order = 30;
    e.quick_order = 18;
    e.lhs_field = [k](const Rat& o) {
      Lattice lat{Rat(0), Rat(1)};
      long long slots = lattice_count(lat, o);
      if (slots <= 0) return s_zero<KElem>(o);
      long long terms = 0;
      while (Rat(terms * (terms + 1), 2) < o) ++terms;
      std::vector<KElem> ratios = sine_ratio_table(k, terms);
      QSeries<KElem> r;
      r.e0 = 0;
      r.step = 1;
      r.order = o;
      r.coeffs.assign(static_cast<std::size_t>(slots), KElem(0));
      for (long long n = 0; n < terms; ++n) {
        Rat tri(n * (n + 1), 2);
        if (tri >= o) break;
        KElem val = ratios[static_cast<std::size_t>(n)];
        r.coeffs[static_cast<std::size_t>(rat_to_index(tri).value())] =
            (n % 2 == 0) ? val : k_neg(val);
      }
      return s_canonical(std::move(r));
    };
    e.rhs_field = [k](const Rat& o) {
      return s_mul(series_cast<KElem>(pochhammer(mono_pos(1), 1, o)),
                   omega(k, 1, o));
    };
    add(std::move(e));
  }

  /* -- the ten order-five dissection identities --------------------------- *
   * Field constants, written on the power basis of Q(beta):
   *   sp = sqrt(10+2 sqrt 5),  sm = sqrt(10-2 sqrt 5),  s5 = sqrt 5,
   *   h = sp + sm.
   * Each row lists the cataloged right side and the corrected right side;
   * the corrected rows all end in the t2s1r monomial and are what the
   * dissection of the left side actually produces.                         */
  {
    const KElem one(1);
    const KElem two(2);
    const KElem zero(0);
    const KElem sp = const_lookup(ConstName::sqrt_10p2s5());
    const KElem sm = const_lookup(ConstName::sqrt_10m2s5());
    const KElem s5 = const_lookup(ConstName::sqrt5());
    const KElem h = sp + sm;
    const KElem a1 = alpha_coeff(1), a3 = alpha_coeff(3);
    const KElem a7 = alpha_coeff(7), a9 = alpha_coeff(9);
    const KElem c1 = one + a1, c3 = one + a3, c7 = one + a7, c9 = one + a9;

    auto neg = [](const KElem& k) { return k_neg(k); };

    const std::vector<DissectionRow> rows = {
        {"thm3-o1-o9", "omega_1 - omega_9 against the full product",
         1, 9, one, neg(one),
         /* cataloged: -sp ash + sp u + h v - h w                           */
         {neg(sp), sp, h, neg(h), zero, zero, zero},
         /* corrected:  sp ash - sp u - h v + h y2                          */
         {sp, neg(sp), neg(h), zero, zero, zero, h}},
        {"thm3-o3-o7", "omega_3 - omega_7 against the full product",
         3, 7, one, neg(one),
         {sm, neg(sm), sp - sm, neg(sp - sm), zero, zero, zero},
         {sm, neg(sm), neg(sm - sp), zero, zero, zero, sm - sp}},
        {"thm3-1o1-plus-9o9",
         "(1+alpha_9) omega_9 + (1+alpha_1) omega_1 against the full product",
         9, 1, c9, c1,
         {neg(two), s5 + KElem(3), s5 * two + two, neg(s5 + KElem(3)), zero,
          two, zero},
         {neg(two), s5 + KElem(3), s5 * two + two, zero, zero, two,
          neg(s5 + KElem(3))}},
        {"thm3-zero",
         "(1+alpha_9) omega_9 - (1+alpha_1) omega_1 against the full product",
         9, 1, c9, neg(c1),
         /* cataloged right side: identically zero                          */
         {zero, zero, zero, zero, zero, zero, zero},
         {h, zero, neg(sp), zero, zero, sp, h}},
        {"thm3-7o7-plus-3o3",
         "(1+alpha_7) omega_7 + (1+alpha_3) omega_3 against the full product",
         7, 3, c7, c3,
         /* cataloged with the inferred '+' before the (s5-3) group         */
         {neg(two), neg(s5 - KElem(3)), neg(s5 * two - two), s5 - KElem(3),
          zero, two, zero},
         {neg(two), neg(s5 - KElem(3)), neg(s5 * two - two), zero, zero, two,
          s5 - KElem(3)}},
        {"thm3-7o7-minus-3o3",
         "(1+alpha_7) omega_7 - (1+alpha_3) omega_3 against the full product",
         7, 3, c7, neg(c3),
         {sm - sp, zero, neg(sm), sm - sp, zero, sm, zero},
         {sm - sp, zero, neg(sm), zero, zero, sm, sm - sp}},
        {"thm3-o99-plus-o11",
         "alpha_9 omega_9 + alpha_1 omega_1 against the full product",
         9, 1, a9, a1,
         {neg(s5 + KElem(5)), s5 + KElem(5), s5 * KElem(3) + KElem(5),
          neg(s5 * KElem(3) + KElem(5)), zero, zero, zero},
         {neg(s5 + KElem(5)), s5 + KElem(5), s5 * KElem(3) + KElem(5), zero,
          zero, zero, neg(s5 * KElem(3) + KElem(5))}},
        {"thm3-o99-minus-o11",
         "alpha_9 omega_9 - alpha_1 omega_1 against the full product",
         9, 1, a9, neg(a1),
         {sm + sp * two, neg(sp), neg(sm + sp * two), zero,
          (sm + sp) * two, sp, zero},
         {sm + sp * two, neg(sp), neg(sm + sp * two), zero, zero, sp,
          (sm + sp) * two}},
        {"thm3-o77-plus-o33",
         "alpha_7 omega_7 + alpha_3 omega_3 against the full product",
         7, 3, a7, a3,
         {s5 - KElem(5), KElem(5) - s5, KElem(5) - s5 * KElem(3),
          s5 * KElem(3) - KElem(5), zero, zero, zero},
         {s5 - KElem(5), KElem(5) - s5, KElem(5) - s5 * KElem(3), zero, zero,
          zero, s5 * KElem(3) - KElem(5)}},
        {"thm3-o77-minus-o33",
         "alpha_7 omega_7 - alpha_3 omega_3 against the full product",
         7, 3, a7, neg(a3),
         {sm * two - sp, neg(sm), neg(sm * two - sp), zero,
          (sm - sp) * two, sm, zero},
         {sm * two - sp, neg(sm), neg(sm * two - sp), zero, zero, sm,
          (sm - sp) * two}},
    };

    for (const auto& row : rows) {
      {
        IdentitySpec e;
        e.id = row.base;
        e.description = std::string(row.what) + "; cataloged right side";
        e.ring = RingKind::field;
        e.full_order = 10;
        e.quick_order = 10;
        e.lhs_field = [row](const Rat& o) {
          return detail::dissection_lhs(*dissection_pieces(o), row);
        };
        e.rhs_field = [row](const Rat& o) {
          return detail::shell_combination(*dissection_pieces(o), row.printed,
                                           o);
        };
        add(std::move(e));
      }
      {
        IdentitySpec e;
        e.id = std::string(row.base) + "-derived";
        e.description =
            std::string(row.what) + "; corrected right side (final monomial "
            "t2s1r, signs as the dissection produces)";
        e.ring = RingKind::field;
        e.expected = Expectation::document;
        e.full_order = 10;
        e.quick_order = 10;
        e.lhs_field = [row](const Rat& o) {
          return detail::dissection_lhs(*dissection_pieces(o), row);
        };
        e.rhs_field = [row](const Rat& o) {
          return detail::shell_combination(*dissection_pieces(o),
                                           row.corrected, o);
        };
        add(std::move(e));
      }
    }

    /* Variant readings, each expected=document: they record which reading
     * of an ambiguous display holds.                                       */
    {
      IdentitySpec e;
      e.id = "thm3-o1-o9-var-single";
      e.description =
          "variant of thm3-o1-o9 with each leading factor appearing once "
          "(the two terms then both equal the full product)";
      e.ring = RingKind::field;
      e.expected = Expectation::document;
      e.full_order = 10;
      e.quick_order = 10;
      e.lhs_field = [](const Rat& o) {
        auto p = dissection_pieces(o);
        return s_sub(s_mul(p->omega1, p->prod_no1),
                     s_mul(p->omega9, p->prod_no9));
      };
      ShellCoeffs printed{neg(sp), sp, h, neg(h), zero, zero, zero};
      e.rhs_field = [printed](const Rat& o) {
        return detail::shell_combination(*dissection_pieces(o), printed, o);
      };
      add(std::move(e));
    }
    {
      IdentitySpec e;
      e.id = "thm3-7o7-plus-3o3-var-minus";
      e.description =
          "variant of thm3-7o7-plus-3o3 reading the missing operator as '-' "
          "before the (sqrt5 - 3) group";
      e.ring = RingKind::field;
      e.expected = Expectation::document;
      e.full_order = 10;
      e.quick_order = 10;
      DissectionRow base{"", "", 7, 3, c7, c3, {}, {}};
      e.lhs_field = [base](const Rat& o) {
        return detail::dissection_lhs(*dissection_pieces(o), base);
      };
      ShellCoeffs printed{neg(two), s5 - KElem(3), neg(s5 * two - two),
                          neg(s5 - KElem(3)), zero, two, zero};
      e.rhs_field = [printed](const Rat& o) {
        return detail::shell_combination(*dissection_pieces(o), printed, o);
      };
      add(std::move(e));
    }
    {
      IdentitySpec e;
      e.id = "thm3-o99-minus-o11-var-s1root";
      e.description =
          "variant of thm3-o99-minus-o11 reading the final monomial with "
          "S1^(1/4) in place of S2^(1/4)";
      e.ring = RingKind::field;
      e.expected = Expectation::document;
      e.full_order = 10;
      e.quick_order = 10;
      DissectionRow base{"", "", 9, 1, a9, neg(a1), {}, {}};
      e.lhs_field = [base](const Rat& o) {
        return detail::dissection_lhs(*dissection_pieces(o), base);
      };
      ShellCoeffs printed{sm + sp * two, neg(sp), neg(sm + sp * two),
                          (sm + sp) * two, zero, sp, zero};
      e.rhs_field = [printed](const Rat& o) {
        return detail::shell_combination(*dissection_pieces(o), printed, o);
      };
      add(std::move(e));
    }
  }

  /* -- Lambert expansions against eta and continued-fraction quotients ---- */
  auto poch_product = [](std::vector<long long> exps, long long m,
                         const Rat& ord) {
    QSeries<Rat> acc = s_const(Rat(1), ord);
    for (long long x : exps) acc = s_mul(acc, pochhammer(mono_pos(x), m, ord));
    return acc;
  };
  {
    IdentitySpec e;
    e.id = "eis-e1";
    e.description =
        "odd-n Lambert sum over residues (3,7)-(13,17) mod 20 equals "
        "eta(40t)^4/eta(20t)^2 [1/T1(q^2) + T1(q^2)]";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 3}, {1, 7}, {-1, 13}, {-1, 17}},
                             LambertWeight::none,
                             LambertParity::odd},
                            o);
    };
    e.rhs_rat = [](const Rat& o) {
      QSeries<Rat> pref = eta_quotient({{40, 4}, {20, -2}}, o + 8);
      QSeries<Rat> t = cf_series(CFName::T1, 2, o + 8);
      QSeries<Rat> bracket = s_add(s_unit_inv(t), t);
      return s_mul(pref, bracket);
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "eis-e2";
    e.description =
        "odd-n Lambert sum over residues (1,9)-(11,19) mod 20 equals "
        "eta(40t)^4/eta(20t)^2 [1/T2(q^2) + T2(q^2)]";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 1}, {1, 9}, {-1, 11}, {-1, 19}},
                             LambertWeight::none,
                             LambertParity::odd},
                            o);
    };
    e.rhs_rat = [](const Rat& o) {
      QSeries<Rat> pref = eta_quotient({{40, 4}, {20, -2}}, o + 8);
      QSeries<Rat> t = cf_series(CFName::T2, 2, o + 8);
      QSeries<Rat> bracket = s_add(s_unit_inv(t), t);
      return s_mul(pref, bracket);
    };
    add(std::move(e));
  }
  for (long long z : {6LL, 14LL}) {
    IdentitySpec e;
    e.id = "onepsione-z" + std::to_string(z);
    e.description =
        "bilateral 1psi1 sum at a = q^20, z = q^" + std::to_string(z) +
        ", base q^40 against its four-factor product";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [z](const Rat& o) { return onepsione_pair(20, z, 40, o).first; };
    e.rhs_rat = [z](const Rat& o) {
      return onepsione_pair(20, z, 40, o).second;
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es3";
    e.description =
        "n-weighted Lambert sum over (1,-9,-11,19) mod 20 equals its "
        "eta-style product times q";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 1}, {-1, 9}, {-1, 11}, {1, 19}},
                             LambertWeight::linear,
                             LambertParity::all},
                            o);
    };
    e.rhs_rat = [poch_product](const Rat& o) {
      QSeries<Rat> num = s_mul(s_mul(poch_product({20, 20}, 20, o),
                                     poch_product({10, 10}, 10, o)),
                               poch_product({8, 12}, 20, o));
      QSeries<Rat> den = poch_product({1, 9, 11, 19, 1, 9, 11, 19}, 20, o);
      return s_shift(s_mul(num, s_unit_inv(den)), Rat(1), Rat(1));
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es4";
    e.description =
        "n-weighted Lambert sum over (3,-7,-13,17) mod 20 equals its "
        "eta-style product times q^3";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 3}, {-1, 7}, {-1, 13}, {1, 17}},
                             LambertWeight::linear,
                             LambertParity::all},
                            o);
    };
    e.rhs_rat = [poch_product](const Rat& o) {
      QSeries<Rat> num = s_mul(s_mul(poch_product({20, 20}, 20, o),
                                     poch_product({10, 10}, 10, o)),
                               poch_product({4, 16}, 20, o));
      QSeries<Rat> den = poch_product({3, 7, 13, 17, 3, 7, 13, 17}, 20, o);
      return s_shift(s_mul(num, s_unit_inv(den)), Rat(1), Rat(3));
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es5";
    e.description =
        "Legendre-symbol-weighted Lambert sum over (1,-9,-11,19) mod 20 "
        "equals its mixed base-20/base-60 product times q";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 1}, {-1, 9}, {-1, 11}, {1, 19}},
                             LambertWeight::legendre3,
                             LambertParity::all},
                            o);
    };
    e.rhs_rat = [poch_product](const Rat& o) {
      QSeries<Rat> num =
          s_mul(s_mul(poch_product({10, 10}, 10, o),
                      poch_product({60}, 60, o)),
                poch_product({1, 8, 9, 11, 12, 19}, 20, o));
      QSeries<Rat> den = s_mul(poch_product({20}, 20, o),
                               poch_product({3, 27, 33, 57}, 60, o));
      return s_shift(s_mul(num, s_unit_inv(den)), Rat(1), Rat(1));
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es6";
    e.description =
        "Legendre-symbol-weighted Lambert sum over (3,-7,-13,17) mod 20 "
        "equals its mixed base-20/base-60 product times q^3";
    e.ring = RingKind::rational;
    e.full_order = 60;
    e.quick_order = 30;
    e.lhs_rat = [](const Rat& o) {
      return lambert_series({20,
                             {{1, 3}, {-1, 7}, {-1, 13}, {1, 17}},
                             LambertWeight::legendre3,
                             LambertParity::all},
                            o);
    };
    e.rhs_rat = [poch_product](const Rat& o) {
      QSeries<Rat> num =
          s_mul(s_mul(poch_product({10, 10}, 10, o),
                      poch_product({60}, 60, o)),
                poch_product({3, 4, 7, 13, 16, 17}, 20, o));
      QSeries<Rat> den = s_mul(poch_product({20}, 20, o),
                               poch_product({9, 21, 39, 51}, 60, o));
      return s_shift(s_mul(num, s_unit_inv(den)), Rat(1), Rat(3));
    };
    add(std::move(e));
  }

  /* -- continued fractions: series route vs convergent route -------------- */
  for (CFName name : {CFName::R, CFName::S1, CFName::S2, CFName::T1,
                      CFName::T2}) {
    IdentitySpec e;
    e.id = std::string("cf-") + cf_name_str(name);
    e.description = std::string("series expansion of ") + cf_name_str(name) +
                    " matches its partial-quotient display numerically";
    e.mode = CheckMode::numeric;
    e.numeric_run = [name]() {
      CheckResult res;
      QSeries<Rat> ser = cf_series(name, 1, 50);
      for (double qd : {0.05, 0.1, 0.2}) {
        Real qv(qd);
        Real a = series_numeric(ser, qv);
        Real b = cf_numeric(name, qv, 60);
        record(res, "q=" + real_str(Real(qv)), abs(a - b), Real(1e-8));
      }
      return res;
    };
    add(std::move(e));
  }

  /* -- floating oracle spot checks ----------------------------------------- */
  for (int which : {1, 2, 3}) {
    IdentitySpec e;
    e.id = "atable-" + std::to_string(which);
    e.description = "coefficient table " + std::to_string(which) +
                    " matches its exact sine-ratio closed form for n < 120";
    e.mode = CheckMode::numeric;
    e.numeric_run = [which]() { return a_table_check(which, 0, 120, Real(1e-25)); };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "prodsine";
    e.description = "prod_{k=1..9} sin(k pi/20) = sqrt(10)/512";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() { return sine_product_check(Real(1e-25)); };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "tm";
    e.description =
        "theta_1 product over k pi/20 against the eta closed form at q = 0.1";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() { return theta_sine_product_check(Real(1e-20)); };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "theta1-sum-product";
    e.description =
        "theta_1 sine series against its triple product at random samples";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() { return theta1_pair_check(20, 20260822u, Real(1e-25)); };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "theta1-prime";
    e.description =
        "theta_1'(0) finite difference against 2 p^(1/8) (p;p)_inf^3";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() { return theta1_prime_fd_check(Real(1e-15)); };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es1";
    e.description =
        "two-variable theta-quotient Lambert identity, residue pair (1,9)";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() {
      return es_lemma_check(EsLemma::first, es_default_samples(), Real(1e-20));
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "es2";
    e.description =
        "two-variable theta-quotient Lambert identity, residue pair (3,7)";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() {
      return es_lemma_check(EsLemma::second, es_default_samples(), Real(1e-20));
    };
    add(std::move(e));
  }
  {
    IdentitySpec e;
    e.id = "liu";
    e.description = "theta_1(pi/3 - z) theta_1(pi/3 + z) product shift";
    e.mode = CheckMode::numeric;
    e.numeric_run = []() { return liu_shift_check(Real(1e-25)); };
    add(std::move(e));
  }

  std::sort(entries_.begin(), entries_.end(),
            [](const IdentitySpec& a, const IdentitySpec& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].id] = i;
}

/* ---- verification driver ----------------------------------------------- */

inline Report verify_entry(const IdentitySpec& spec,
                           const std::optional<Rat>& order_req,
                           RingHint hint = RingHint::automatic) {
  Report rep;
  rep.id = spec.id;
  rep.mode = spec.mode;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (spec.mode == CheckMode::numeric) {
      CheckResult res = spec.numeric_run();
      rep.samples = res.samples;
      rep.status = res.pass ? "pass" : "fail";
      if (!res.pass) {
        rep.message = "worst sample error " + real_str(res.worst);
      }
    } else {
      Rat bound = order_req ? *order_req : spec.full_order;
      rep.order = bound;
      bool native_field = spec.ring == RingKind::field;
      if (hint == RingHint::rational && native_field) {
        throw DomainError("entry needs field coefficients; rational ring "
                          "cannot represent them");
      }
      bool use_field = native_field || hint == RingHint::field;
      if (use_field) {
        QSeries<KElem> lhs = native_field
                                 ? spec.lhs_field(bound)
                                 : series_cast<KElem>(spec.lhs_rat(bound));
        QSeries<KElem> rhs = native_field
                                 ? spec.rhs_field(bound)
                                 : series_cast<KElem>(spec.rhs_rat(bound));
        auto cmp = s_equal_to_order(lhs, rhs, bound);
        rep.status = cmp.equal ? "pass" : "fail";
        if (cmp.first_mismatch) {
          rep.first_mismatch = ReportMismatch{cmp.first_mismatch->exponent,
                                              cmp.first_mismatch->delta};
        }
      } else {
        auto cmp = s_equal_to_order(spec.lhs_rat(bound), spec.rhs_rat(bound),
                                    bound);
        rep.status = cmp.equal ? "pass" : "fail";
        if (cmp.first_mismatch) {
          rep.first_mismatch = ReportMismatch{cmp.first_mismatch->exponent,
                                              KElem(cmp.first_mismatch->delta)};
        }
      }
    }
  } catch (const std::exception& ex) {
    rep.status = "error";
    rep.message = ex.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

inline Report verify(const Registry& reg, const std::string& id,
                     const std::optional<Rat>& order_req = std::nullopt,
                     RingHint hint = RingHint::automatic) {
  const IdentitySpec* spec = reg.find(id);
  if (!spec) throw UnknownIdError("unknown identity id: " + id);
  return verify_entry(*spec, order_req, hint);
}

/* Run every entry at its profile default.  Entries are already sorted by
 * id; worker threads claim indices from a shared counter and write into
 * preallocated slots, so the merged result is deterministic regardless of
 * scheduling.                                                              */
inline std::vector<Report> verify_all(const Registry& reg, Profile profile,
                                      int jobs = 1) {
  const auto& es = reg.entries();
  std::vector<Report> out(es.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= es.size()) return;
      const IdentitySpec& sp = es[i];
      std::optional<Rat> ord;
      if (sp.mode == CheckMode::exact) {
        ord = profile == Profile::quick ? sp.quick_order : sp.full_order;
      }
      out[i] = verify_entry(sp, ord);
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

/* Exit-code contract: nonzero iff an entry expected to pass did not. */
inline int aggregate_exit(const Registry& reg,
                          const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    const IdentitySpec* sp = reg.find(r.id);
    if (sp && sp->expected == Expectation::pass && r.status != "pass") {
      return 1;
    }
  }
  return 0;
}

/* ---- report serialization ---------------------------------------------- */

inline nlohmann::ordered_json report_json(const Report& r, bool stable) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = r.status;
  j["mode"] = r.mode == CheckMode::exact ? "exact" : "numeric";
  if (r.mode == CheckMode::exact) {
    j["order"] = rat_str(r.order);
  } else {
    j["samples"] = r.samples;
  }
  if (r.first_mismatch) {
    nlohmann::ordered_json m;
    m["exponent"] = rat_str(r.first_mismatch->exponent);
    m["delta_exact"] = {rat_str(r.first_mismatch->delta.c[0]),
                        rat_str(r.first_mismatch->delta.c[1]),
                        rat_str(r.first_mismatch->delta.c[2]),
                        rat_str(r.first_mismatch->delta.c[3])};
    m["delta_numeric"] = k_embed(r.first_mismatch->delta, 20);
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["wall_ms"] = stable ? 0 : r.wall_ms;
  return j;
}

inline std::string report_line(const Report& r) {
  std::string line = r.id + ": ";
  for (char ch : r.status) line += static_cast<char>(std::toupper(ch));
  if (r.mode == CheckMode::exact) {
    line += " (exact to q^" + rat_str(r.order) + ", " +
            std::to_string(r.wall_ms) + " ms)";
  } else {
    line += " (numeric, " + std::to_string(r.samples.size()) + " samples, " +
            std::to_string(r.wall_ms) + " ms)";
  }
  if (r.first_mismatch) {
    line += "\n  first mismatch at q^" + rat_str(r.first_mismatch->exponent) +
            ": delta = (" + rat_str(r.first_mismatch->delta.c[0]) + ", " +
            rat_str(r.first_mismatch->delta.c[1]) + ", " +
            rat_str(r.first_mismatch->delta.c[2]) + ", " +
            rat_str(r.first_mismatch->delta.c[3]) + ") ~ " +
            k_embed(r.first_mismatch->delta, 20);
  }
  if (!r.message.empty()) line += "\n  " + r.message;
  return line;
}

}  // namespace qident
