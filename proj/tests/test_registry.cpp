#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <qident/registry.hpp>

using namespace qident;

namespace {

const Registry& reg() {
  static Registry r;
  return r;
}

std::vector<std::string> manifest_ids() {
  std::ifstream in(QIDENT_MANIFEST_PATH);
  REQUIRE(in.good());
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

KElem delta_of(const Report& r) {
  REQUIRE(r.first_mismatch.has_value());
  return r.first_mismatch->delta;
}

}  // namespace

TEST_CASE("registry census matches the checked-in manifest") {
  std::vector<std::string> expected = manifest_ids();
  const auto& es = reg().entries();
  REQUIRE(es.size() == expected.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    CHECK(es[i].id == expected[i]);
  }
  std::set<std::string> uniq;
  for (const auto& e : es) {
    CHECK(uniq.insert(e.id).second);
    if (e.mode == CheckMode::exact) {
      CHECK(e.full_order >= e.quick_order);
      bool has_builders = (e.ring == RingKind::field)
                              ? (e.lhs_field && e.rhs_field)
                              : (e.lhs_rat && e.rhs_rat);
      CHECK(has_builders);
    } else {
      CHECK(static_cast<bool>(e.numeric_run));
    }
  }
  for (std::size_t i = 1; i < es.size(); ++i) {
    CHECK(es[i - 1].id < es[i].id);
  }
}

TEST_CASE("lookup and unknown ids") {
  REQUIRE(reg().find("pentagonal") != nullptr);
  REQUIRE(reg().find("no-such-entry") == nullptr);
  REQUIRE_THROWS_AS(verify(reg(), "no-such-entry"), UnknownIdError);
}

TEST_CASE("classical entries verify at modest orders") {
  for (const char* id : {"pentagonal", "psi-product", "jtp-spot", "eta-def"}) {
    Report r = verify(reg(), id, Rat(20));
    INFO(report_line(r));
    CHECK(r.status == "pass");
    CHECK(r.mode == CheckMode::exact);
    CHECK(r.order == 20);
    CHECK_FALSE(r.first_mismatch.has_value());
  }
  Report lem = verify(reg(), "lemma2-f1-a=q-b=q2", Rat(25));
  CHECK(lem.status == "pass");
  Report prodk = verify(reg(), "eq-prodK", Rat(12));
  CHECK(prodk.status == "pass");
}

TEST_CASE("dissection catalog rows fail with pinned first mismatches") {
  Report z = verify(reg(), "thm3-zero", Rat(2));
  CHECK(z.status == "fail");
  REQUIRE(z.first_mismatch.has_value());
  CHECK(z.first_mismatch->exponent == 0);
  CHECK(delta_of(z) == KElem(Rat(0), Rat(2), Rat(0), Rat(0)));

  Report d = verify(reg(), "thm3-o1-o9", Rat(2));
  CHECK(d.status == "fail");
  REQUIRE(d.first_mismatch.has_value());
  CHECK(d.first_mismatch->exponent == Rat(1, 5));
  CHECK(delta_of(d) == KElem(Rat(0), Rat(-4), Rat(0), Rat(0)));

  Report c = verify(reg(), "thm3-o3-o7", Rat(2));
  CHECK(c.status == "fail");
  REQUIRE(c.first_mismatch.has_value());
  CHECK(c.first_mismatch->exponent == Rat(3, 2));

  Report m = verify(reg(), "thm3-o99-minus-o11", Rat(2));
  CHECK(m.status == "fail");
  REQUIRE(m.first_mismatch.has_value());
  CHECK(m.first_mismatch->exponent == Rat(11, 8));
}

TEST_CASE("corrected right sides verify; catalog rows do not") {
  const char* bases[] = {
      "thm3-o1-o9",         "thm3-o3-o7",         "thm3-1o1-plus-9o9",
      "thm3-zero",          "thm3-7o7-plus-3o3",  "thm3-7o7-minus-3o3",
      "thm3-o99-plus-o11",  "thm3-o99-minus-o11", "thm3-o77-plus-o33",
      "thm3-o77-minus-o33"};
  for (const char* base : bases) {
    Report printed = verify(reg(), base, Rat(2));
    INFO(report_line(printed));
    CHECK(printed.status == "fail");
    CHECK(printed.first_mismatch.has_value());
    Report corrected = verify(reg(), std::string(base) + "-derived", Rat(2));
    INFO(report_line(corrected));
    CHECK(corrected.status == "pass");
  }
}

TEST_CASE("variant readings are recorded as documents") {
  Report single = verify(reg(), "thm3-o1-o9-var-single", Rat(2));
  CHECK(single.status == "fail");
  REQUIRE(single.first_mismatch.has_value());
  CHECK(single.first_mismatch->exponent == Rat(1, 5));
  CHECK(delta_of(single) == KElem(Rat(0), Rat(-2), Rat(0), Rat(0)));

  Report minus = verify(reg(), "thm3-7o7-plus-3o3-var-minus", Rat(2));
  CHECK(minus.status == "fail");
  REQUIRE(minus.first_mismatch.has_value());
  CHECK(minus.first_mismatch->exponent == Rat(1, 5));

  Report s1 = verify(reg(), "thm3-o99-minus-o11-var-s1root", Rat(2));
  CHECK(s1.status == "fail");
  REQUIRE(s1.first_mismatch.has_value());
  CHECK(s1.first_mismatch->exponent == Rat(3, 2));

  for (const char* id : {"thm3-o1-o9-var-single", "thm3-7o7-plus-3o3-var-minus",
                         "thm3-o99-minus-o11-var-s1root"}) {
    REQUIRE(reg().find(id)->expected == Expectation::document);
  }
}

TEST_CASE("ring hints") {
  Report widened = verify(reg(), "pentagonal", Rat(12), RingHint::field);
  CHECK(widened.status == "pass");
  Report narrowed = verify(reg(), "thm3-zero", Rat(1), RingHint::rational);
  CHECK(narrowed.status == "error");
  CHECK_FALSE(narrowed.message.empty());
}

TEST_CASE("numeric entries report samples") {
  Report r = verify(reg(), "prodsine");
  CHECK(r.status == "pass");
  CHECK(r.mode == CheckMode::numeric);
  CHECK_FALSE(r.samples.empty());
  auto j = report_json(r, true);
  CHECK(j.contains("samples"));
  CHECK_FALSE(j.contains("order"));
}

TEST_CASE("an injected perturbation is pinpointed at its exponent") {
  IdentitySpec spec;
  spec.id = "local-perturbation";
  spec.ring = RingKind::rational;
  spec.full_order = 12;
  spec.quick_order = 12;
  spec.lhs_rat = [](const Rat& o) { return pochhammer(mono_neg(1), 1, o); };
  spec.rhs_rat = [](const Rat& o) {
    return s_add(pochhammer(mono_neg(1), 1, o), s_monomial(Rat(3), Rat(7), o));
  };
  Report r = verify_entry(spec, Rat(12));
  CHECK(r.status == "fail");
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->exponent == 7);
  CHECK(delta_of(r) == KElem(Rat(-3)));
}

TEST_CASE("report JSON has the fixed field order and is deterministic") {
  Report pass = verify(reg(), "pentagonal", Rat(10));
  auto j = report_json(pass, true);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys == std::vector<std::string>{"id", "status", "mode", "order",
                                           "first_mismatch", "wall_ms"});
  CHECK(j["order"] == "10");
  CHECK(j["wall_ms"] == 0);
  CHECK(j["first_mismatch"].is_null());

  Report fail1 = verify(reg(), "thm3-zero", Rat(2));
  Report fail2 = verify(reg(), "thm3-zero", Rat(2));
  CHECK(report_json(fail1, true).dump() == report_json(fail2, true).dump());
  auto jf = report_json(fail1, true);
  REQUIRE_FALSE(jf["first_mismatch"].is_null());
  CHECK(jf["first_mismatch"]["exponent"] == "0");
  REQUIRE(jf["first_mismatch"]["delta_exact"].size() == 4);
  CHECK(jf["first_mismatch"]["delta_exact"][1] == "2");
  std::vector<std::string> mkeys;
  for (auto it = jf["first_mismatch"].begin(); it != jf["first_mismatch"].end();
       ++it) {
    mkeys.push_back(it.key());
  }
  REQUIRE(mkeys == std::vector<std::string>{"exponent", "delta_exact",
                                            "delta_numeric"});

  Report num = verify(reg(), "prodsine");
  auto jn = report_json(num, true);
  std::vector<std::string> nkeys;
  for (auto it = jn.begin(); it != jn.end(); ++it) nkeys.push_back(it.key());
  REQUIRE(nkeys == std::vector<std::string>{"id", "status", "mode", "samples",
                                            "first_mismatch", "wall_ms"});
}

TEST_CASE("verify_all quick profile: census, outcomes, exit code") {
  std::vector<Report> reports = verify_all(reg(), Profile::quick);
  REQUIRE(reports.size() == reg().entries().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == reg().entries()[i].id);
  }
  int printed_failures = 0;
  for (const auto& r : reports) {
    const IdentitySpec* sp = reg().find(r.id);
    REQUIRE(sp != nullptr);
    INFO(report_line(r));
    if (sp->expected == Expectation::pass) {
      if (r.id.rfind("thm3-", 0) == 0) {
        CHECK(r.status == "fail");
        CHECK(r.first_mismatch.has_value());
        ++printed_failures;
      } else {
        CHECK(r.status == "pass");
      }
    } else {
      bool corrected = r.id.find("-derived") != std::string::npos;
      CHECK(r.status == (corrected ? "pass" : "fail"));
    }
  }
  CHECK(printed_failures == 10);
  CHECK(aggregate_exit(reg(), reports) == 1);

  std::vector<Report> threaded = verify_all(reg(), Profile::quick, 2);
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  nlohmann::ordered_json b = nlohmann::ordered_json::array();
  for (const auto& r : reports) a.push_back(report_json(r, true));
  for (const auto& r : threaded) b.push_back(report_json(r, true));
  CHECK(a.dump() == b.dump());
}
