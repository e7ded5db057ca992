#pragma once

#include <string>
#include <vector>

namespace csanyon {

// One verification case. `detail` is a single deterministic line: either a
// case count or the first offending configuration.
struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  bool all_pass() const;
};

// Available suites: fock, vertex, wcharges, solver, sympoly, corr.
std::vector<std::string> suite_names();

// Runs the named suites. Checks are dispatched to a worker pool sized by the
// CSANYON_WORKERS environment variable (default: hardware concurrency) and
// collected in declaration order, so the report is scheduling-independent.
// Throws std::invalid_argument on an unknown suite name.
std::vector<Suite> run_suites(const std::vector<std::string>& names);
Suite run_suite(const std::string& name);

// Fixed-layout text report; byte-identical across runs on the same build.
std::string render_report(const std::vector<Suite>& suites);

// Grid checks shared between the suites and the acceptance harness. Each is
// pure, deterministic, and self-contained.
Check check_commutator_grid();   // [b_m,b_n] = m delta on level <= 8, |m|,|n| <= 6
Check check_vertex_zero_mode();  // phi(0) R^l = R^{l+1}, l in [-3,3]
Check check_filter_vanishing();  // eta(n) = 0 off the support filter, |n_j| <= 4, N <= 3
Check check_h2_grid();           // quadratic charge eigenvalue sum P_j, full grid
Check check_h3_grid();           // cubic charge ladder identity + N=1 anchors
Check check_eigenvector_grid();  // certified eigenvectors, sum n <= 6, N <= 3
Check check_two_route_grid();    // mode-sum polynomial == Fock-side polynomial
Check check_jack_grid();         // proportionality to the oracle Jack basis
Check check_pde_grid();          // differential-operator residuals at sample points
Check check_duality_grid();      // dual-coupling eigenvectors, closed form surfaced
Check check_corr_identities();   // b dual form, exchange residuals, braid relations

}  // namespace csanyon
