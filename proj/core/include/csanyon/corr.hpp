#pragma once

#include <complex>
#include <vector>

namespace csanyon {

// Regularized two-point factor
//   b(x; eps) = e^{-i pi x/L} - e^{-2 pi eps/L} e^{i pi x/L}.
// At eps = 0 and x = 0 (mod L) the factor vanishes exactly.
std::complex<double> b_factor(double x, double eps, double L);

// log of b_factor with the branch fixed by continuity from large eps, where
// b is close to e^{-i pi x/L}: principal log of 1 - e^{2 pi (ix - eps)/L}.
// That factor has nonnegative real part, so no cut is ever crossed and the
// determination is continuous down to eps = 0 away from coincident points.
// Requires eps > 0, or eps = 0 with x not a multiple of L.
std::complex<double> log_b_factor(double x, double eps, double L);

// Smoothed sign function
//   (1/pi) [ 2 pi x/L - 2 arg(1 - e^{-2 pi eps/L} e^{2 pi i x/L}) ],
// odd in x; -> sgn(x) pointwise on 0 < |x| < L as eps -> 0.
double sgn_reg(double x, double eps, double L);

// Partial sum of the equivalent representation
//   2x/L + (2/pi) sum_{n=1..terms} (1/n) e^{-2 pi eps n/L} sin(2 pi n x/L).
double sgn_reg_series(double x, double eps, double L, int terms);

// Pair product prod_{j<k} b(x_j - x_k; 0)^{nu2} with the per-factor branch
// of log_b_factor. Points must be pairwise distinct mod L.
std::complex<double> delta_power(double nu2, const std::vector<double>& x,
                                 double L);

// One correlation configuration: N field insertions with statistics
// nu_j = charges[j] * nu0, flanked by charge-shift windings w1, w2.
struct CorrSpec {
  double L = 0;
  double nu0 = 0;
  std::vector<long> charges;
  std::vector<double> x;
  std::vector<double> eps;  // all > 0
  long w1 = 0;
  long w2 = 0;

  int size() const { return static_cast<int>(charges.size()); }
};

// delta_{w1 + w2 + sum_j mu_j, 0}
//   * e^{i pi (w1 - w2) nu0 sum_j nu_j x_j / L}
//   * prod_{j<k} b(x_j - x_k; eps_j + eps_k)^{nu_j nu_k},
// fractional powers taken through log_b_factor.
std::complex<double> corr_eval(const CorrSpec& spec);

// Exchange relation for neighbours j, j+1 (1-based, 1 <= j < N): swapping
// the two insertions multiplies the correlation by
//   e^{i pi nu_j nu_{j+1} sgn_reg(x_j - x_{j+1}; eps_j + eps_{j+1})}.
// Returns |C(swapped) - phase * C(original)|; exact identity for the branch
// above, so the residual is at rounding level for any regulators.
double exchange_residual(const CorrSpec& spec, int j);

// Point configuration with an accumulated exchange phase.
struct BraidState {
  std::vector<double> x;
  std::complex<double> phase{1.0, 0.0};
};

// sigma_i (1-based): swap x_i, x_{i+1} and multiply the phase by
// e^{-i pi nu2 sgn_reg(x_i - x_{i+1}; eps)/2}.
BraidState braid_sigma(const BraidState& s, int i, double nu2, double eps,
                       double L);

// Checks sigma_i^2 = id, sigma_i sigma_j = sigma_j sigma_i for |i-j| > 1,
// and sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1} on
// `trials` random configurations (fixed seed), each slot and phase to 1e-12.
bool braid_check(int N, double nu2, double eps, int trials);

}  // namespace csanyon
