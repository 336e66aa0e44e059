// One pass/fail line per acceptance criterion.  Runs with the wall-clock checks enabled.
//   acceptance                 all twelve
//   acceptance --criterion 5   just one (what ctest runs)

#include "affgeo/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace affgeo;

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  VerifyOptions opt;
  opt.timing = true;
  app.add_option("--criterion", only, "criterion number, 0 for all")->check(CLI::Range(0, kCriteria));
  app.add_option("--seed", opt.seed)->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (int n = 1; n <= kCriteria; ++n) {
    if (only && n != only) continue;
    RunReport r;
    run_criterion(n, opt, r);
    int errata = 0;
    for (const Check& c : r.checks) errata += c.status == CheckStatus::ErratumConfirmed;
    std::cout << "criterion " << n << ": " << (r.ok() ? "PASS" : "FAIL") << "  (" << r.checks.size() << " checks";
    if (errata) std::cout << ", " << errata << " erratum-confirmed";
    std::cout << ")\n";
    for (const Check& c : r.checks)
      if (verbose || c.status == CheckStatus::Fail)
        std::cout << "    " << to_string(c.status) << "  " << c.name << "  residual " << c.residual << " tol " << c.tol
                  << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}
