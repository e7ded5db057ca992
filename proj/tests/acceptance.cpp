// Acceptance gate: twelve exact-identity / property criteria, one line each.
// Every criterion has a wall-clock budget (seconds); a blown budget fails the
// criterion even when the mathematics passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "csanyon/verify.hpp"

using namespace csanyon;

namespace {

struct Criterion {
  const char* name;
  double budget_s;  // 0 = untimed
  std::function<Check()> run;
};

bool run_one(int idx, const Criterion& cr) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    c = cr.run();
  } catch (const std::exception& e) {
    c = Check{"internal", false, e.what()};
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool pass = c.pass;
  std::string detail = c.detail;
  if (cr.budget_s > 0 && dt > cr.budget_s) {
    pass = false;
    detail += " [budget " + std::to_string(cr.budget_s) + "s exceeded]";
  }
  std::printf("criterion %2d %-22s %s  (%.1fs)  %s\n", idx, cr.name,
              pass ? "pass" : "FAIL", dt, detail.c_str());
  std::fflush(stdout);
  return pass;
}

Check determinism() {
  const auto names = suite_names();
  const std::string a = render_report(run_suites(names));
  const std::string b = render_report(run_suites(names));
  if (a != b) return Check{"determinism", false, "reports differ between runs"};
  if (a.find("  FAIL ") != std::string::npos)
    return Check{"determinism", false, "suite failures present"};
  return Check{"determinism", true,
               "two full runs byte-identical (" + std::to_string(a.size()) +
                   " bytes)"};
}

}  // namespace

int main() {
  const Criterion table[] = {
      {"mode-commutators", 5, check_commutator_grid},
      {"vertex-zero-mode", 5, check_vertex_zero_mode},
      {"filter-vanishing", 30, check_filter_vanishing},
      {"quadratic-eigen", 60, check_h2_grid},
      {"cubic-ladder", 120, check_h3_grid},
      {"eigenvector-certify", 120, check_eigenvector_grid},
      {"two-route-poly", 0, check_two_route_grid},
      {"jack-match", 120, check_jack_grid},
      {"pde-residual", 60, check_pde_grid},
      {"duality", 60, check_duality_grid},
      {"corr-identities", 30, check_corr_identities},
      {"determinism", 0, determinism},
  };
  int failures = 0;
  int idx = 0;
  for (const Criterion& cr : table)
    if (!run_one(++idx, cr)) ++failures;
  if (failures) {
    std::printf("acceptance: %d of 12 criteria FAILED\n", failures);
    return 1;
  }
  std::printf("acceptance: all 12 criteria pass\n");
  return 0;
}
