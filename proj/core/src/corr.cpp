#include "csanyon/corr.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace csanyon {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_region(double eps, double L, const char* who) {
  if (!(L > 0)) throw std::invalid_argument(std::string(who) + ": L must be positive");
  if (!(eps >= 0)) throw std::invalid_argument(std::string(who) + ": negative regulator");
}

}  // namespace

std::complex<double> b_factor(double x, double eps, double L) {
  check_region(eps, L, "b_factor");
  if (eps == 0.0 && std::remainder(x, L) == 0.0) return {0.0, 0.0};
  return std::polar(1.0, -kPi * x / L) -
         std::polar(std::exp(-2.0 * kPi * eps / L), kPi * x / L);
}

std::complex<double> log_b_factor(double x, double eps, double L) {
  check_region(eps, L, "log_b_factor");
  if (eps == 0.0 && std::remainder(x, L) == 0.0)
    throw std::domain_error("log_b_factor: factor vanishes at coincident points");
  const std::complex<double> w =
      std::polar(std::exp(-2.0 * kPi * eps / L), 2.0 * kPi * x / L);
  return std::complex<double>(0.0, -kPi * x / L) + std::log(1.0 - w);
}

double sgn_reg(double x, double eps, double L) {
  check_region(eps, L, "sgn_reg");
  const std::complex<double> w =
      std::polar(std::exp(-2.0 * kPi * eps / L), 2.0 * kPi * x / L);
  return 2.0 * x / L - (2.0 / kPi) * std::arg(1.0 - w);
}

double sgn_reg_series(double x, double eps, double L, int terms) {
  check_region(eps, L, "sgn_reg_series");
  double s = 0.0;
  for (int n = terms; n >= 1; --n)  // ascending magnitude
    s += std::exp(-2.0 * kPi * eps * n / L) * std::sin(2.0 * kPi * n * x / L) / n;
  return 2.0 * x / L + (2.0 / kPi) * s;
}

std::complex<double> delta_power(double nu2, const std::vector<double>& x,
                                 double L) {
  std::complex<double> acc(0.0, 0.0);
  const int N = static_cast<int>(x.size());
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) acc += log_b_factor(x[j] - x[k], 0.0, L);
  return std::exp(nu2 * acc);
}

namespace {

void validate(const CorrSpec& spec) {
  if (!(spec.L > 0)) throw std::invalid_argument("corr: L must be positive");
  if (!(spec.nu0 > 0)) throw std::invalid_argument("corr: nu0 must be positive");
  const std::size_t n = spec.charges.size();
  if (spec.x.size() != n || spec.eps.size() != n)
    throw std::invalid_argument("corr: field lists must have equal length");
  for (double e : spec.eps)
    if (!(e > 0)) throw std::invalid_argument("corr: regulators must be positive");
}

}  // namespace

std::complex<double> corr_eval(const CorrSpec& spec) {
  validate(spec);
  long total = spec.w1 + spec.w2;
  for (long m : spec.charges) total += m;
  if (total != 0) return {0.0, 0.0};

  const int N = spec.size();
  const double nu0sq = spec.nu0 * spec.nu0;
  double weighted = 0.0;
  for (int j = 0; j < N; ++j)
    weighted += static_cast<double>(spec.charges[j]) * spec.x[j];
  std::complex<double> expo(
      0.0, kPi * static_cast<double>(spec.w1 - spec.w2) * nu0sq * weighted / spec.L);
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k)
      expo += static_cast<double>(spec.charges[j] * spec.charges[k]) * nu0sq *
              log_b_factor(spec.x[j] - spec.x[k], spec.eps[j] + spec.eps[k], spec.L);
  return std::exp(expo);
}

double exchange_residual(const CorrSpec& spec, int j) {
  validate(spec);
  const int N = spec.size();
  if (j < 1 || j >= N)
    throw std::invalid_argument("exchange_residual: index out of range");
  CorrSpec sw = spec;
  std::swap(sw.x[j - 1], sw.x[j]);
  std::swap(sw.eps[j - 1], sw.eps[j]);
  std::swap(sw.charges[j - 1], sw.charges[j]);
  const double nn = static_cast<double>(spec.charges[j - 1] * spec.charges[j]) *
                    spec.nu0 * spec.nu0;
  const double s =
      sgn_reg(spec.x[j - 1] - spec.x[j], spec.eps[j - 1] + spec.eps[j], spec.L);
  const std::complex<double> phase(std::cos(kPi * nn * s), std::sin(kPi * nn * s));
  return std::abs(corr_eval(sw) - phase * corr_eval(spec));
}

BraidState braid_sigma(const BraidState& s, int i, double nu2, double eps,
                       double L) {
  const int N = static_cast<int>(s.x.size());
  if (i < 1 || i >= N)
    throw std::invalid_argument("braid_sigma: index out of range");
  BraidState out = s;
  const double angle = -0.5 * kPi * nu2 * sgn_reg(out.x[i - 1] - out.x[i], eps, L);
  out.phase *= std::complex<double>(std::cos(angle), std::sin(angle));
  std::swap(out.x[i - 1], out.x[i]);
  return out;
}

bool braid_check(int N, double nu2, double eps, int trials) {
  if (N < 2 || trials < 1)
    throw std::invalid_argument("braid_check: need N >= 2 and trials >= 1");
  const double L = 2.0 * kPi;
  const double tol = 1e-12;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> pos(-0.5 * L, 0.5 * L);
  auto sig = [&](const BraidState& st, int i) {
    return braid_sigma(st, i, nu2, eps, L);
  };
  auto close = [&](const BraidState& a, const BraidState& b) {
    if (std::abs(a.phase - b.phase) > tol) return false;
    for (std::size_t k = 0; k < a.x.size(); ++k)
      if (std::abs(a.x[k] - b.x[k]) > tol) return false;
    return true;
  };
  for (int t = 0; t < trials; ++t) {
    BraidState st;
    st.x.resize(N);
    for (double& v : st.x) v = pos(rng);
    for (int i = 1; i < N; ++i)
      if (!close(sig(sig(st, i), i), st)) return false;
    for (int i = 1; i < N; ++i)
      for (int j = i + 2; j < N; ++j)
        if (!close(sig(sig(st, i), j), sig(sig(st, j), i))) return false;
    for (int i = 1; i + 1 < N; ++i)
      if (!close(sig(sig(sig(st, i), i + 1), i), sig(sig(sig(st, i + 1), i), i + 1)))
        return false;
  }
  return true;
}

}  // namespace csanyon
