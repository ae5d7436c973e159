#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

std::string failures(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass) out += c.id + ": " + c.witness + "; ";
  return out;
}

}  // namespace

TEST_CASE("every registered suite passes at small parameters") {
  for (const std::string& name : suite_names()) {
    SuiteParams p;
    p.m = 2;
    p.n = 2;
    p.max_deg = 2;
    if (name == "thmC-generation" || name == "gamma-homomorphism") {
      p.k = 2;
      p.l = 2;
    }
    SuiteReport rep = run_suite(name, p);
    INFO(name << ": " << failures(rep));
    CHECK(rep.allPass());
    CHECK_FALSE(rep.checks.empty());
  }
}

TEST_CASE("reports are deterministic for fixed parameters and seed") {
  SuiteParams p;
  p.m = 2;
  p.n = 2;
  p.seed = 9;
  SuiteReport a = run_suite("action-laws", p);
  SuiteReport b = run_suite("action-laws", p);
  a.elapsed_ms = b.elapsed_ms = 0;
  CHECK(report_json(a) == report_json(b));
}

TEST_CASE("unknown suites and bad parameters are usage errors") {
  SuiteParams p;
  CHECK_THROWS_AS(run_suite("no-such-suite", p), UsageError);
  p.m = 0;
  CHECK_THROWS_AS(run_suite("pbw-dimension", p), UsageError);
  p.m = 2;
  p.n = 2;
  p.k = 3;  // exceeds n
  CHECK_THROWS_AS(run_suite("thmC-generation", p), UsageError);
}

TEST_CASE("exit codes reflect check status") {
  SuiteReport r;
  r.suite = "synthetic";
  r.checks.push_back({"ok", true, ""});
  CHECK(exit_code_for(r) == 0);
  r.checks.push_back({"bad", false, "witness"});
  CHECK(exit_code_for(r) == 1);
}
