/* Command-line surface over the identity registry and the series engine.
 *
 *   verify     one registry entry, text or JSON report
 *   verify-all every entry at a profile's default orders
 *   list       registry census
 *   expand     evaluate an expression of the small series language
 *   cf-eval    continued-fraction convergent at a numeric point
 *   numeric    floating oracle suites
 *
 * Exit codes: verify returns 0/1/2 for pass/fail/error; verify-all
 * returns nonzero iff an entry expected to pass did not pass; numeric
 * returns 0 iff the suite passed; parse or usage problems return 2.        */

#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qident/expr.hpp>
#include <qident/registry.hpp>

namespace {

using namespace qident;

int run_verify(const std::string& id, const std::string& order_text,
               const std::string& ring_text, bool json, bool stable) {
  Registry reg;
  std::optional<Rat> order;
  if (!order_text.empty()) order = rat_parse(order_text);
  RingHint hint = RingHint::automatic;
  if (ring_text == "rational") hint = RingHint::rational;
  if (ring_text == "field") hint = RingHint::field;
  Report rep = verify(reg, id, order, hint);
  if (json) {
    std::cout << report_json(rep, stable).dump(2) << "\n";
  } else {
    std::cout << report_line(rep) << "\n";
  }
  if (rep.status == "pass") return 0;
  return rep.status == "fail" ? 1 : 2;
}

int run_verify_all(const std::string& profile_text, int jobs, bool json,
                   bool stable) {
  Registry reg;
  Profile profile = profile_text == "quick" ? Profile::quick : Profile::full;
  std::vector<Report> reports = verify_all(reg, profile, jobs);
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, stable));
    std::cout << arr.dump(2) << "\n";
  } else {
    int pass = 0, fail = 0, error = 0;
    for (const auto& r : reports) {
      std::cout << report_line(r) << "\n";
      if (r.status == "pass") {
        ++pass;
      } else if (r.status == "fail") {
        ++fail;
      } else {
        ++error;
      }
    }
    std::cout << reports.size() << " entries: " << pass << " pass, " << fail
              << " fail, " << error << " error\n";
  }
  return aggregate_exit(reg, reports);
}

int run_list() {
  Registry reg;
  for (const auto& e : reg.entries()) {
    std::cout << e.id << "\t"
              << (e.mode == CheckMode::exact ? "exact" : "numeric") << "\t"
              << (e.expected == Expectation::pass ? "pass" : "document")
              << "\t" << e.description << "\n";
  }
  return 0;
}

int run_expand(const std::string& expr_text, const std::string& order_text) {
  Rat order = rat_parse(order_text);
  QSeries<KElem> series = expand_expr(expr_text, order);
  std::cout << s_to_text(series, 40) << "\n";
  return 0;
}

int run_cf_eval(const std::string& name_text, const std::string& q_text,
                int depth) {
  static const std::map<std::string, CFName> names = {
      {"R", CFName::R},
      {"S1", CFName::S1},
      {"S2", CFName::S2},
      {"T1", CFName::T1},
      {"T2", CFName::T2}};
  auto it = names.find(name_text);
  if (it == names.end()) {
    std::cerr << "unknown continued fraction '" << name_text
              << "' (expected R, S1, S2, T1, or T2)\n";
    return 2;
  }
  Real q(q_text);
  Real value = cf_numeric(it->second, q, depth);
  std::cout << cf_name_str(it->second) << "(" << q_text << ") = "
            << real_str(value, 30) << "  (depth " << depth << ")\n";
  return 0;
}

int run_numeric(const std::string& check, int digits) {
  std::vector<std::pair<std::string, CheckResult>> results;
  if (check == "prodsine") {
    results.emplace_back(check, sine_product_check(Real(1e-25)));
  } else if (check == "tm") {
    results.emplace_back(check, theta_sine_product_check(Real(1e-20)));
  } else if (check == "es1") {
    results.emplace_back(
        check, es_lemma_check(EsLemma::first, es_default_samples(), Real(1e-20)));
  } else if (check == "es2") {
    results.emplace_back(check, es_lemma_check(EsLemma::second,
                                               es_default_samples(),
                                               Real(1e-20)));
  } else if (check == "atables") {
    for (int which : {1, 2, 3}) {
      results.emplace_back("atable-" + std::to_string(which),
                           a_table_check(which, 0, 120, Real(1e-25)));
    }
  } else {
    std::cerr << "unknown check '" << check
              << "' (expected prodsine, tm, es1, es2, or atables)\n";
    return 2;
  }
  bool all_pass = true;
  for (const auto& [label, res] : results) {
    for (const auto& line : res.samples) std::cout << "  " << line << "\n";
    std::cout << label << ": " << (res.pass ? "PASS" : "FAIL")
              << " (worst error " << real_str(res.worst, unsigned(digits))
              << ")\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series identity verifier"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string id, order_text, ring_text = "auto";
  bool json = false, stable = false;
  auto* verify_cmd = app.add_subcommand("verify", "verify one registry entry");
  verify_cmd->add_option("--id", id, "registry entry id")->required();
  verify_cmd->add_option("--order", order_text,
                         "comparison bound as a rational, e.g. 25 or 11/8");
  verify_cmd->add_option("--ring", ring_text, "coefficient ring hint")
      ->check(CLI::IsMember({"auto", "rational", "field"}));
  verify_cmd->add_flag("--json", json, "emit a JSON report");
  verify_cmd->add_flag("--stable", stable,
                       "zero out wall times for byte-stable output");

  std::string profile = "full";
  int jobs = 1;
  auto* all_cmd = app.add_subcommand("verify-all", "verify every entry");
  all_cmd->add_option("--profile", profile, "order profile")
      ->check(CLI::IsMember({"quick", "full"}));
  all_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  all_cmd->add_flag("--json", json, "emit a JSON report array");
  all_cmd->add_flag("--stable", stable,
                    "zero out wall times for byte-stable output");

  auto* list_cmd = app.add_subcommand("list", "list registry entries");

  std::string expr_text, expand_order;
  auto* expand_cmd =
      app.add_subcommand("expand", "evaluate a series expression");
  expand_cmd->add_option("--expr", expr_text, "expression text")->required();
  expand_cmd->add_option("--order", expand_order, "truncation order")
      ->required();

  std::string cf_name, cf_q = "0.1";
  int cf_depth = 40;
  auto* cf_cmd =
      app.add_subcommand("cf-eval", "evaluate a continued fraction");
  cf_cmd->add_option("--name", cf_name, "one of R, S1, S2, T1, T2")
      ->required();
  cf_cmd->add_option("--q", cf_q, "evaluation point in (0, 1)");
  cf_cmd->add_option("--depth", cf_depth, "convergent depth")
      ->check(CLI::PositiveNumber);

  std::string check;
  int digits = 30;
  auto* num_cmd = app.add_subcommand("numeric", "floating oracle suites");
  num_cmd->add_option("--check", check,
                      "prodsine, tm, es1, es2, or atables")
      ->required();
  num_cmd->add_option("--digits", digits, "printed precision")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) {
      return run_verify(id, order_text, ring_text, json, stable);
    }
    if (all_cmd->parsed()) {
      return run_verify_all(profile, jobs, json, stable);
    }
    if (list_cmd->parsed()) {
      return run_list();
    }
    if (expand_cmd->parsed()) {
      return run_expand(expr_text, expand_order);
    }
    if (cf_cmd->parsed()) {
      return run_cf_eval(cf_name, cf_q, cf_depth);
    }
    if (num_cmd->parsed()) {
      return run_numeric(check, digits);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
