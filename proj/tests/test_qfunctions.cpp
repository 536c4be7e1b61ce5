#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <qident/chebyshev.hpp>
#include <qident/qfunctions.hpp>

using namespace qident;

namespace {

void check_prefix(const QSeries<Rat>& f, const std::vector<Rat>& expect,
                  const Rat& e0 = Rat(0), const Rat& step = Rat(1)) {
  for (std::size_t i = 0; i < expect.size(); ++i) {
    Rat e = e0 + Rat(i) * step;
    INFO("exponent " << rat_str(e));
    CHECK(s_coeff(f, e) == expect[i]);
  }
}

}  // namespace

TEST_CASE("q-shifted factorial prefixes") {
  /* (q; q)_inf: nonzero exactly at generalized pentagonal numbers with
   * sign (-1)^j; prefix frozen from an independent exact computation.     */
  QSeries<Rat> euler = pochhammer(mono_pos(1), 1, 17);
  check_prefix(euler, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0});

  /* (-q^2; q^2)_inf counts partitions into distinct even parts. */
  QSeries<Rat> dep = pochhammer(mono_neg(2), 2, 10);
  check_prefix(dep, {1, 0, 1, 0, 1, 0, 2, 0, 2, 0});

  /* Fractional lattice: (q^(5/2); q^(5/2))_inf lives on step 5/2. */
  QSeries<Rat> frac = pochhammer(mono_pos(Rat(5, 2)), Rat(5, 2), 13);
  CHECK(frac.step == Rat(5, 2));
  CHECK(s_coeff(frac, Rat(5, 2)) == -1);
  CHECK(s_coeff(frac, Rat(5)) == -1);
  CHECK(s_coeff(frac, Rat(15, 2)) == 0);
  CHECK(s_coeff(frac, Rat(10)) == 0);
  CHECK(s_coeff(frac, Rat(25, 2)) == 1);

  CHECK_THROWS_AS(pochhammer(mono_pos(0), 1, 5), DomainError);
  CHECK_THROWS_AS(pochhammer(mono_pos(1), 0, 5), DomainError);
}

TEST_CASE("theta function, both methods") {
  /* psi(q) = f(q, q^3) = sum q^(n(n+1)/2): indicator of triangular
   * numbers; prefix frozen independently.                                 */
  std::vector<Rat> psi_prefix = {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1};
  QSeries<Rat> psi_b =
      theta_f(mono_pos(1), mono_pos(3), 11, ThetaMethod::bilateral_sum);
  QSeries<Rat> psi_p =
      theta_f(mono_pos(1), mono_pos(3), 11, ThetaMethod::triple_product);
  check_prefix(psi_b, psi_prefix);
  check_prefix(psi_p, psi_prefix);

  /* f(-q^3, -q^17): bilateral exponents 20n^2/2 +- 7n shifted; frozen. */
  QSeries<Rat> f317 = theta_fm(3, 17, 28);
  check_prefix(f317, {1,  0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                      0,  0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});

  /* Its reciprocal, also frozen from an exact independent run. */
  QSeries<Rat> inv = s_unit_inv(theta_fm(3, 17, 22));
  check_prefix(inv, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0,
                     0, 1, 0, 0, 1, 0, 1, 1, 0, 2, 1});

  /* Euler product as a theta value: (q;q)_inf = f(-q, -q^2). */
  QSeries<Rat> jtp = theta_f(mono_neg(1), mono_neg(2), 17,
                             ThetaMethod::bilateral_sum);
  check_prefix(jtp, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0});

  /* Degenerate arguments: f(1, x) doubles, f(-1, x) vanishes. */
  QSeries<Rat> dbl = theta_f(MonomialArg{1, Rat(0)}, mono_pos(1), 8,
                             ThetaMethod::triple_product);
  QSeries<Rat> dbl_b = theta_f(MonomialArg{1, Rat(0)}, mono_pos(1), 8,
                               ThetaMethod::bilateral_sum);
  CHECK(s_equal_to_order(dbl, dbl_b, Rat(8)).equal);
  CHECK(s_coeff(dbl, Rat(0)) == 2);
  QSeries<Rat> van = theta_f(MonomialArg{-1, Rat(0)}, mono_neg(1), 8,
                             ThetaMethod::triple_product);
  QSeries<Rat> van_b = theta_f(MonomialArg{-1, Rat(0)}, mono_neg(1), 8,
                               ThetaMethod::bilateral_sum);
  CHECK(van.coeffs.empty());
  CHECK(van_b.coeffs.empty());

  CHECK_THROWS_AS(theta_f(MonomialArg{1, Rat(0)}, MonomialArg{1, Rat(0)}, 5),
                  DomainError);
}

TEST_CASE("theta method agreement on random arguments") {
  std::mt19937 rng(909090u);
  std::uniform_int_distribution<int> exp_dist(1, 9);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialArg a{sign_dist(rng) ? 1 : -1, Rat(exp_dist(rng))};
    MonomialArg b{sign_dist(rng) ? 1 : -1, Rat(exp_dist(rng))};
    QSeries<Rat> tp = theta_f(a, b, 25, ThetaMethod::triple_product);
    QSeries<Rat> bs = theta_f(a, b, 25, ThetaMethod::bilateral_sum);
    INFO("a = " << a.sign << " q^" << rat_str(a.exp) << ", b = " << b.sign
                << " q^" << rat_str(b.exp));
    auto cmp = s_equal_to_order(tp, bs, Rat(25));
    CHECK(cmp.equal);
  }
}

TEST_CASE("psi product form") {
  /* psi(q) = (q^2; q^2)_inf / (q; q^2)_inf. */
  QSeries<Rat> lhs = theta_f(mono_pos(1), mono_pos(3), 40);
  QSeries<Rat> rhs = s_mul(pochhammer(mono_pos(2), 2, 40),
                           s_unit_inv(pochhammer(mono_pos(1), 2, 40)));
  CHECK(s_equal_to_order(lhs, rhs, Rat(40)).equal);
}

TEST_CASE("eta quotients") {
  /* Single eta to the third power: q^(1/8) sum (-1)^n (2n+1) q^(n(n+1)/2). */
  QSeries<Rat> e3 = eta_quotient({{1, 3}}, 11);
  CHECK(e3.e0 == Rat(1, 8));
  CHECK(s_coeff(e3, Rat(1, 8)) == 1);
  CHECK(s_coeff(e3, Rat(1, 8) + 1) == -3);
  CHECK(s_coeff(e3, Rat(1, 8) + 3) == 5);
  CHECK(s_coeff(e3, Rat(1, 8) + 6) == -7);
  CHECK(s_coeff(e3, Rat(1, 8) + 10) == 9);

  /* Eighth root of eta(tau)/eta(5tau): offset (1 - 5)/(24*8) = -1/48 and
   * a unit part frozen from an independent exact root computation.        */
  QSeries<Rat> r = eta_quotient({{1, Rat(1, 8)}, {5, Rat(-1, 8)}}, 12);
  CHECK(r.e0 == Rat(-1, 48));
  std::vector<Rat> unit = {Rat(1),
                           Rat(-1, 8),
                           Rat(-23, 128),
                           Rat(-147, 1024),
                           Rat(-5957, 32768),
                           Rat(7905, 262144),
                           Rat(-832547, 4194304),
                           Rat(-2684491, 33554432),
                           Rat(Int("-331275373"), Int("2147483648")),
                           Rat(Int("-1623947131"), Int("17179869184")),
                           Rat(Int("23663224919"), Int("274877906944")),
                           Rat(Int("-111705255733"), Int("2199023255552"))};
  check_prefix(r, unit, Rat(-1, 48), Rat(1));

  /* The same root agrees with s_nth_root applied to the plain quotient. */
  QSeries<Rat> quot = s_mul(pochhammer(mono_pos(1), 1, 12),
                            s_unit_inv(pochhammer(mono_pos(5), 5, 12)));
  QSeries<Rat> direct = s_nth_root(quot, 8);
  QSeries<Rat> shifted = s_shift(direct, Rat(1), Rat(-1, 48));
  CHECK(s_equal_to_order(r, shifted, Rat(10)).equal);

  /* Truncation below the offset yields an empty series, not nonsense. */
  QSeries<Rat> tiny = eta_quotient({{24, 1}}, Rat(1, 2));
  CHECK(tiny.coeffs.empty());

  CHECK_THROWS_AS(eta_quotient({{0, 1}}, 5), DomainError);
}

TEST_CASE("quadratic factor products") {
  /* omega_k(x) = prod (1 + alpha_k x^n + x^(2n)): hand expansion gives
   * 1 + a x + (1+a) x^2 + (a^2+a) x^3 + ... with a = alpha(k).            */
  for (int k : {1, 3, 7, 9}) {
    KElem a = alpha_coeff(k);
    QSeries<KElem> om = omega(k, 1, 4);
    CHECK(s_coeff(om, Rat(0)) == KElem(1));
    CHECK(s_coeff(om, Rat(1)) == a);
    CHECK(s_coeff(om, Rat(2)) == k_add(KElem(1), a));
    CHECK(s_coeff(om, Rat(3)) == k_add(k_mul(a, a), a));
  }

  /* omega_5 has alpha = 0: the product collapses to prod (1 + x^(2n)). */
  QSeries<KElem> om5 = omega(5, 1, 9);
  CHECK(s_coeff(om5, Rat(1)) == KElem(0));
  CHECK(s_coeff(om5, Rat(2)) == KElem(1));
  CHECK(s_coeff(om5, Rat(6)) == KElem(2));

  /* Scale moves the whole product to the q^(1/5) lattice. */
  QSeries<KElem> oms = omega(9, Rat(1, 5), 2);
  CHECK(oms.step == Rat(1, 5));
  CHECK(s_coeff(oms, Rat(1, 5)) == KElem::beta());

  /* Identity linking the products to theta-like bilateral sums:
   * sum_{n>=0} (-1)^n s_k(n) q^(n(n+1)/2) = (q; q)_inf * omega_k(q),
   * where s_k is the exact sine-ratio sequence.  This pins every
   * coefficient of omega against independent field arithmetic.            */
  const Rat order = 22;
  QSeries<Rat> euler = pochhammer(mono_pos(1), 1, order);
  for (int k = 1; k <= 9; ++k) {
    std::vector<KElem> s = sine_ratio_table(k, 8);
    QSeries<KElem> lhs = s_zero<KElem>(order);
    for (int n = 0; Rat(n) * (n + 1) / 2 < order; ++n) {
      KElem c = (n % 2 == 0) ? s[static_cast<std::size_t>(n)]
                             : k_neg(s[static_cast<std::size_t>(n)]);
      lhs = s_add(lhs, s_monomial(c, Rat(n) * (n + 1) / 2, order));
    }
    QSeries<KElem> rhs = s_mul(series_cast<KElem>(euler), omega(k, 1, order));
    INFO("k = " << k);
    CHECK(s_equal_to_order(lhs, rhs, order).equal);
  }
}

TEST_CASE("sine ratio table") {
  /* s_k repeats with period 20 and satisfies s_k(19 - n) = -s_k(n), so
   * the first ten values determine the rest.                              */
  for (int k : {1, 2, 9}) {
    std::vector<KElem> s = sine_ratio_table(k, 45);
    for (int n = 0; n + 20 < 45; ++n) {
      CHECK(s[static_cast<std::size_t>(n + 20)] == s[static_cast<std::size_t>(n)]);
    }
    for (int n = 0; n < 19; ++n) {
      CHECK(s[static_cast<std::size_t>(19 - n)] ==
            k_neg(s[static_cast<std::size_t>(n)]));
    }
    CHECK(s[0] == KElem(1));
  }
}
