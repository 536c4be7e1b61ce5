#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <qident/cfractions.hpp>

using namespace qident;

namespace {

struct FrozenCF {
  CFName name;
  Rat e0;
  std::vector<int> unit;
};

/* Unit-part prefixes of the five theta quotients, frozen from an exact
 * independent computation (series division done coefficient by
 * coefficient over the rationals).                                         */
const std::vector<FrozenCF>& frozen_cfs() {
  static const std::vector<FrozenCF> table = {
      {CFName::R, Rat(1, 5), {1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 2, -3, 2}},
      {CFName::S1, Rat(3, 4), {1, -1, 0, 0, 1, -1, 1, -1, 1, -2, 2, -2, 3}},
      {CFName::S2, Rat(1, 4), {1, 0, -1, 1, 0, -1, 1, 1, -2, 0, 2, -2, -1}},
      {CFName::T1, Rat(1), {1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0}},
      {CFName::T2, Rat(2), {1, -1, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1}},
  };
  return table;
}

}  // namespace

TEST_CASE("theta quotient expansions") {
  for (const auto& fc : frozen_cfs()) {
    QSeries<Rat> f = cf_series(fc.name, 1, fc.e0 + 13);
    INFO(cf_name_str(fc.name));
    CHECK(f.e0 == fc.e0);
    for (std::size_t i = 0; i < fc.unit.size(); ++i) {
      INFO("unit index " << i);
      CHECK(s_coeff(f, fc.e0 + Rat(i)) == Rat(fc.unit[i]));
    }
  }
}

TEST_CASE("substitution scaling") {
  QSeries<Rat> base = cf_series(CFName::R, 1, 6);
  QSeries<Rat> fifth = cf_series(CFName::R, Rat(1, 5), Rat(6, 5));
  CHECK(fifth.e0 == Rat(1, 25));
  CHECK(s_equal_to_order(s_substitute(base, Rat(1, 5)), fifth, Rat(6, 5)).equal);

  QSeries<Rat> doubled = cf_series(CFName::T1, 2, 12);
  CHECK(doubled.e0 == 2);
  CHECK(s_coeff(doubled, Rat(8)) == -1);
  CHECK_THROWS_AS(cf_series(CFName::R, Rat(0), 5), DomainError);
}

TEST_CASE("roots of continued fractions") {
  for (int n : {1, 2, 4, 8}) {
    QSeries<Rat> root = cf_root(CFName::S2, n, 1, 6);
    CHECK(root.e0 == Rat(1, 4 * n));
    QSeries<Rat> back = s_pow_int(root, n);
    QSeries<Rat> base = cf_series(CFName::S2, 1, 6);
    Rat bound = back.order < base.order ? back.order : base.order;
    CHECK(s_equal_to_order(back, base, bound).equal);
  }
  QSeries<Rat> r8 = cf_root(CFName::R, 8, Rat(1, 5), 2);
  CHECK(r8.e0 == Rat(1, 200));
  CHECK_THROWS_AS(cf_root(CFName::R, 3, 1, 5), DomainError);
  CHECK_THROWS_AS(cf_root(CFName::R, 16, 1, 5), DomainError);
}

TEST_CASE("display recurrence matches theta quotient numerically") {
  /* The two routes are independent: partial quotients against the exact
   * series expansion of the closed form.  Tight tolerance is justified:
   * at q <= 0.2 and depth 60 both routes are converged far below 1e-30.   */
  const Real tol("1e-30");
  for (const auto& fc : frozen_cfs()) {
    QSeries<Rat> f = cf_series(fc.name, 1, 50);
    for (double qd : {0.05, 0.1, 0.2}) {
      Real q(qd);
      Real via_series = series_numeric(f, q);
      Real via_display = cf_numeric(fc.name, q, 60);
      INFO(cf_name_str(fc.name) << " at q = " << qd);
      CHECK(abs(via_series - via_display) < tol);
    }
  }
}

TEST_CASE("numeric domain checks") {
  CHECK_THROWS_AS(cf_numeric(CFName::R, Real(0), 10), DomainError);
  CHECK_THROWS_AS(cf_numeric(CFName::R, Real(1), 10), DomainError);
  CHECK_THROWS_AS(cf_numeric(CFName::R, Real("-0.3"), 10), DomainError);
  CHECK_THROWS_AS(cf_numeric(CFName::R, Real("0.5"), 0), DomainError);
  CHECK_THROWS_AS(series_numeric(cf_series(CFName::R, 1, 5), Real(2)),
                  DomainError);

  /* series_numeric handles fractional lattices and field coefficients. */
  QSeries<KElem> m = s_monomial(KElem::beta(), Rat(1, 2), Rat(2));
  Real v = series_numeric(m, Real("0.25"));
  Real expect = k_to_real<Real>(KElem::beta()) / 2;
  CHECK(abs(v - expect) < Real("1e-55"));
}
