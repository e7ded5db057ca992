#pragma once

#include <complex>
#include <vector>

#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"

namespace csanyon {

// Position-space eigenfunction data on the circle of circumference L:
//   psi(x) = e^{i kappa sum(x)} Delta^{nu^2}(x) P(z),
//   kappa = (2*pi/L) mu_g - (pi/L) nu^2 N,   z_k = e^{-2*pi*i x_k / L},
//   Delta = prod_{j<k} (-2i) sin(pi (x_j - x_k)/L),
// i.e. the mu_g = 0 member carries the e^{-i pi nu^2 N sum(x)/L} prefactor
// and has energy (2pi/L)^2 sum P_j^2; gauging by the periodic phase
// e^{2*pi*i*mu_g*sum(x)/L} shifts every momentum by -mu_g * 2pi/L.
struct WaveFunctionSpec {
  Scalar nu;
  int N = 0;
  std::vector<int> n;
  long mu_g = 0;
  double L = 0.0;
  SymPoly P;
};

// Builds the spec from a certified eigenvector; computes the polynomial by
// both independent routes and throws std::runtime_error if they disagree.
WaveFunctionSpec assemble_eigenfunction(const EigenResult& res, long mu_g,
                                        double L);

struct PointEval {
  std::complex<double> psi;
  double pde_residual = 0.0;       // relative, against (2pi/L)^2 sum (P_j - mu_g)^2
  double momentum_residual = 0.0;  // relative, against (2pi/L) sum (P_j - mu_g)
};

// Evaluates psi and the two analytic residuals at one configuration.
// Derivatives of Delta enter through log-derivatives (cot / 1/sin^2), the
// polynomial part is differentiated exactly; the Delta^{nu^2} prefactor
// cancels in the relative residuals. Requires pairwise separation
// |x_j - x_k| >= L/20 and |x_j| <= 0.45 L; throws otherwise.
PointEval wf_point(const WaveFunctionSpec& spec, const std::vector<double>& x);

std::complex<double> wf_eval(const WaveFunctionSpec& spec,
                             const std::vector<double>& x);

struct AnalyticChecks {
  double pde_residual = 0.0;       // max over points
  double momentum_residual = 0.0;  // max over points
};

AnalyticChecks analytic_checks(const WaveFunctionSpec& spec,
                               const std::vector<std::vector<double>>& points);

// Deterministic admissible configurations: coordinates uniform in
// (-0.35 L, 0.35 L), pairwise separation >= L/20, fixed-seed mt19937_64.
std::vector<std::vector<double>> random_admissible_points(
    int N, double L, int count, unsigned long long seed);

}  // namespace csanyon
