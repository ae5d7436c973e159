#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qweyl/expr.hpp"
#include "qweyl/paction.hpp"
#include "qweyl/suites.hpp"

namespace {

using namespace qweyl;

int cmdReduce(int m, int n, bool gradedAlg, const std::string& src) {
  AlgebraSpec spec{m, n, gradedAlg ? Variant::Graded : Variant::Filtered};
  WeylElement x = evaluate(*parse(src), spec);
  std::cout << x.str() << "\n";
  return 0;
}

int cmdAct(int m, int n, const std::string& dsrc, const std::string& fsrc) {
  AlgebraSpec spec = filtered(m, n);
  WeylElement D = evaluate(*parse(dsrc), spec);
  WeylElement f = evaluate(*parse(fsrc), spec);
  for (const auto& [mono, c] : f.terms())
    if (mono.dDegree() != 0) throw UsageError("second operand must be free of d generators");
  std::cout << act(D, f).str() << "\n";
  return 0;
}

int cmdVerify(const std::string& suite, const SuiteParams& params, bool json) {
  SuiteReport report = run_suite(suite, params);
  std::cout << (json ? report_json(report) : report_text(report));
  return exit_code_for(report);
}

int cmdSuites() {
  for (const std::string& name : suite_names())
    std::cout << name << "  -  " << suite_description(name) << "\n";
  std::cout << "\nparameters: 1 <= m,n <= 4 and 0 <= max-deg <= 8 for every suite;\n"
               "k and l (when given) must satisfy 1 <= k,l <= n;\n"
               "capelli-annihilator requires m = n = 2.\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification tool for a quantized Weyl algebra"};
  app.require_subcommand(1);

  int m = 2, n = 2;
  bool gradedAlg = false, json = false;
  std::string expr, dexpr, fexpr, suiteName;
  qweyl::SuiteParams params;
  int kOpt = -1, lOpt = -1;

  CLI::App* reduce = app.add_subcommand("reduce", "print the PBW normal form of an expression");
  reduce->add_option("--m", m, "row count")->required();
  reduce->add_option("--n", n, "column count")->required();
  reduce->add_flag("--graded", gradedAlg, "use the graded algebra");
  reduce->add_option("expr", expr, "expression")->required();

  CLI::App* actCmd = app.add_subcommand("act", "apply an operator to a polynomial");
  actCmd->add_option("--m", m, "row count")->required();
  actCmd->add_option("--n", n, "column count")->required();
  actCmd->add_option("dexpr", dexpr, "operator expression")->required();
  actCmd->add_option("fexpr", fexpr, "polynomial expression")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suiteName, "suite name")->required();
  verify->add_option("--m", params.m, "row count");
  verify->add_option("--n", params.n, "column count");
  verify->add_option("--k", kOpt, "corner row count");
  verify->add_option("--l", lOpt, "corner derivative row count");
  verify->add_option("--max-deg", params.max_deg, "degree bound for sampled checks");
  verify->add_option("--seed", params.seed, "pseudo-random seed");
  verify->add_flag("--json", json, "emit a JSON report");

  CLI::App* suites = app.add_subcommand("suites", "list the verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (reduce->parsed()) return cmdReduce(m, n, gradedAlg, expr);
    if (actCmd->parsed()) return cmdAct(m, n, dexpr, fexpr);
    if (verify->parsed()) {
      if (kOpt >= 0) params.k = kOpt;
      if (lOpt >= 0) params.l = lOpt;
      return cmdVerify(suiteName, params, json);
    }
    if (suites->parsed()) return cmdSuites();
  } catch (const qweyl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qweyl::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
