#include "csanyon/wavefunction.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace csanyon {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_admissible(const std::vector<double>& x, double L) {
  for (double xi : x)
    if (std::abs(xi) > 0.45 * L)
      throw std::invalid_argument("coordinate too close to the boundary");
  for (size_t j = 0; j < x.size(); ++j)
    for (size_t k = j + 1; k < x.size(); ++k)
      if (std::abs(x[j] - x[k]) < L / 20.0)
        throw std::invalid_argument("coordinates too close together");
}

}  // namespace

WaveFunctionSpec assemble_eigenfunction(const EigenResult& res, long mu_g,
                                        double L) {
  if (!res.certified) throw std::invalid_argument("uncertified eigenvector");
  if (mu_g < 0) throw std::invalid_argument("gauge index must be >= 0");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  const int N = static_cast<int>(res.n.size());
  SymPoly fock_route = poly_from_fock(res.nu, res.psi, N);
  SymPoly eta_route = sym_zero(N, fock_route.degree);
  bool have = false;
  for (const AlphaEntry& ae : res.alpha) {
    SymPoly t = poly_from_eta(res.nu, shift_momenta(res.n, ae.mu)) *
                ae.value.conj();
    eta_route = have ? eta_route + t : t;
    have = true;
  }
  if (!(fock_route == eta_route))
    throw std::runtime_error("polynomial route mismatch");
  WaveFunctionSpec spec;
  spec.nu = res.nu;
  spec.N = N;
  spec.n = res.n;
  spec.mu_g = mu_g;
  spec.L = L;
  spec.P = fock_route;
  return spec;
}

PointEval wf_point(const WaveFunctionSpec& spec, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != spec.N)
    throw std::invalid_argument("configuration size mismatch");
  require_admissible(x, spec.L);

  const double L = spec.L;
  const double u = 2.0 * kPi / L;
  const double nu2 = (spec.nu * spec.nu).to_complex().real();
  const int N = spec.N;
  const std::complex<double> I(0.0, 1.0);
  const double kappa = u * static_cast<double>(spec.mu_g) - kPi * nu2 * N / L;

  // Polynomial data: value and first/second z-degree derivatives per slot.
  std::vector<std::complex<double>> z(N);
  for (int k = 0; k < N; ++k) z[k] = std::exp(-I * u * x[k]);
  std::complex<double> q(0.0);
  std::vector<std::complex<double>> dq(N, 0.0), d2q(N, 0.0);
  for (const auto& [e, c] : sym_monomials(spec.P)) {
    std::complex<double> mono = c.to_complex();
    for (int k = 0; k < N; ++k) mono *= std::pow(z[k], e[k]);
    q += mono;
    for (int k = 0; k < N; ++k) {
      dq[k] += static_cast<double>(e[k]) * mono;
      d2q[k] += static_cast<double>(e[k]) * static_cast<double>(e[k]) * mono;
    }
  }

  // Log-derivatives of the prefactor exp(i kappa sum x) Delta^{nu^2}.
  std::vector<std::complex<double>> g1(N);
  std::vector<double> g2(N, 0.0);
  double pot = 0.0;
  double logabs = 0.0, argsum = 0.0;
  for (int j = 0; j < N; ++j) {
    std::complex<double> gj(0.0, 0.0);
    for (int k = 0; k < N; ++k) {
      if (k == j) continue;
      const double th = kPi * (x[j] - x[k]) / L;
      const double s = std::sin(th);
      gj += nu2 * (kPi / L) * (std::cos(th) / s);
      g2[j] -= nu2 * (kPi / L) * (kPi / L) / (s * s);
      pot += (kPi / L) * (kPi / L) * nu2 * (nu2 - 1.0) / (s * s);
    }
    g1[j] = gj + I * kappa;
  }
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) {
      const double s = 2.0 * std::sin(kPi * (x[j] - x[k]) / L);
      // b = -2i sin(pi dx / L): modulus |s|, phase -pi/2 for s > 0.
      logabs += nu2 * std::log(std::abs(s));
      argsum += nu2 * (s > 0 ? -kPi / 2 : kPi / 2);
    }

  // H psi = e^G [ -sum_j ((g1_j^2 + g2_j) q + 2 g1_j q_j + q_jj) + V q ]
  // with q_j = -i u (D_j P), q_jj = -u^2 (D_j^2 P).
  std::complex<double> hq(0.0);
  for (int j = 0; j < N; ++j)
    hq -= (g1[j] * g1[j] + g2[j]) * q + 2.0 * g1[j] * (-I * u) * dq[j] -
          u * u * d2q[j];
  hq += pot * q;

  double e = 0.0, psum = 0.0;
  for (const Scalar& p : anyon_momenta(spec.nu, spec.n)) {
    const double pj = p.to_complex().real() - static_cast<double>(spec.mu_g);
    e += u * u * pj * pj;
    psum += u * pj;
  }

  std::complex<double> mom(0.0);
  for (int j = 0; j < N; ++j) mom += I * (g1[j] * q + (-I * u) * dq[j]);

  PointEval out;
  out.psi = std::exp(std::complex<double>(logabs, argsum) +
                     I * kappa * std::accumulate(x.begin(), x.end(), 0.0)) *
            q;
  const double scale = std::abs(e) * std::abs(q) + std::abs(hq) + 1e-300;
  out.pde_residual = std::abs(hq - e * q) / scale;
  const double mscale = std::abs(psum) * std::abs(q) + std::abs(mom) + 1e-300;
  out.momentum_residual = std::abs(mom - psum * q) / mscale;
  return out;
}

std::complex<double> wf_eval(const WaveFunctionSpec& spec,
                             const std::vector<double>& x) {
  return wf_point(spec, x).psi;
}

AnalyticChecks analytic_checks(const WaveFunctionSpec& spec,
                               const std::vector<std::vector<double>>& points) {
  AnalyticChecks out;
  for (const auto& x : points) {
    PointEval pe = wf_point(spec, x);
    out.pde_residual = std::max(out.pde_residual, pe.pde_residual);
    out.momentum_residual =
        std::max(out.momentum_residual, pe.momentum_residual);
  }
  return out;
}

std::vector<std::vector<double>> random_admissible_points(
    int N, double L, int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.35 * L, 0.35 * L);
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    std::vector<double> x(N);
    for (double& v : x) v = dist(rng);
    bool ok = true;
    for (int j = 0; ok && j < N; ++j)
      for (int k = j + 1; ok && k < N; ++k)
        if (std::abs(x[j] - x[k]) < L / 20.0) ok = false;
    if (ok) pts.push_back(std::move(x));
  }
  return pts;
}

}  // namespace csanyon
