#include "csanyon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "csanyon/corr.hpp"
#include "csanyon/fock.hpp"
#include "csanyon/partition.hpp"
#include "csanyon/serialize.hpp"
#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/vertex.hpp"
#include "csanyon/wavefunction.hpp"
#include "csanyon/wcharges.hpp"

namespace csanyon {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string vec_str(const std::vector<int>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n[i]);
  }
  return s + ")";
}

std::string num_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Check ok_count(const char* id, long cases) {
  return Check{id, true, "ok (" + std::to_string(cases) + " cases)"};
}

Check failed(const char* id, const std::string& what) {
  return Check{id, false, what};
}

// Coupling grid used by every exact-identity scan.
const std::vector<Scalar>& nu_grid() {
  static const std::vector<Scalar> g = {
      Scalar(1),
      Scalar(2),
      Scalar(Rat(1, 2)),
      Scalar(Rat(3, 2)),
      Scalar::sqrt_rational(Rat(2)),
      Scalar::sqrt_rational(Rat(3)),
  };
  return g;
}

std::string nu_label(const Scalar& nu) {
  return "nu2=" + rat_to_string((nu * nu).rational());
}

// All weakly decreasing nonnegative momentum vectors, padded to length N.
std::vector<std::vector<int>> ccc_grid(int max_N, int max_sum) {
  std::vector<std::vector<int>> out;
  for (int N = 1; N <= max_N; ++N)
    for (int d = 0; d <= max_sum; ++d)
      for (const Partition& lam : partitions_of_max_len(d, N)) {
        std::vector<int> n(lam.begin(), lam.end());
        n.resize(N, 0);
        out.push_back(std::move(n));
      }
  return out;
}

// Deterministic test vector spanning a whole (charge, level) sector.
FockVector sector_vector(int charge, int level, std::mt19937_64& rng) {
  FockVector v;
  for (const Partition& lam : partitions_of(level)) {
    long c = static_cast<long>(rng() % 9) - 4;
    if (c == 0) c = 2;
    v.add(FockState{charge, lam}, Scalar(c));
  }
  return v;
}

}  // namespace

bool Suite::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

Check check_commutator_grid() {
  const char* id = "commutators";
  std::mt19937_64 rng(0xc0117);
  long cases = 0;
  for (int level = 0; level <= 8; ++level) {
    const int charge = (level % 3) - 1;
    const FockVector v = sector_vector(charge, level, rng);
    for (int m = -6; m <= 6; ++m)
      for (int n = -6; n <= 6; ++n) {
        if (m == 0 || n == 0) continue;  // the zero mode is the charge
        const FockVector lhs =
            apply_mode(m, apply_mode(n, v)) - apply_mode(n, apply_mode(m, v));
        const FockVector rhs =
            (m + n == 0) ? v * Scalar(static_cast<long>(m)) : FockVector();
        ++cases;
        if (!(lhs == rhs))
          return failed(id, "mismatch at level=" + std::to_string(level) +
                                " m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
      }
  }
  return ok_count(id, cases);
}

Check check_vertex_zero_mode() {
  const char* id = "vertex-zero-mode";
  long cases = 0;
  for (const Scalar& nu : nu_grid())
    for (int l = -3; l <= 3; ++l) {
      const FockVector in = FockVector::vacuum(l);
      const FockVector out = vertex_mode(nu, 0, in);
      ++cases;
      if (!(out == FockVector::vacuum(l + 1)))
        return failed(id, nu_label(nu) + " l=" + std::to_string(l));
    }
  return ok_count(id, cases);
}

Check check_filter_vanishing() {
  const char* id = "filter-vanishing";
  const std::vector<Scalar> nus = {Scalar::sqrt_rational(Rat(2)), Scalar(Rat(1, 2))};
  long cases = 0;
  for (int N = 1; N <= 3; ++N) {
    std::vector<int> n(N, -4);
    while (true) {
      if (!support_filter(n)) {
        for (const Scalar& nu : nus) {
          ++cases;
          if (!build_eta(nu, n).vec.is_zero())
            return failed(id, nu_label(nu) + " n=" + vec_str(n));
        }
      }
      int i = N - 1;
      while (i >= 0 && n[i] == 4) n[i--] = -4;
      if (i < 0) break;
      ++n[i];
    }
  }
  return ok_count(id, cases);
}

Check check_h2_grid() {
  const char* id = "h2-eigen";
  static const std::vector<std::vector<int>> extras = {
      {0, 1}, {1, 0, 2}, {2, -1}, {-1, 3, 0}};
  long cases = 0;
  for (const Scalar& nu : nu_grid()) {
    auto grid = ccc_grid(3, 6);
    grid.insert(grid.end(), extras.begin(), extras.end());
    for (const auto& n : grid) {
      ++cases;
      if (!check_h2_eigen(nu, n))
        return failed(id, nu_label(nu) + " n=" + vec_str(n));
    }
  }
  return ok_count(id, cases);
}

Check check_h3_grid() {
  const char* id = "h3-ladder";
  static const std::vector<std::vector<int>> extras = {
      {0, 1}, {1, 0, 2}, {2, -1}, {-1, 3, 0}};
  long cases = 0;
  for (const Scalar& nu : nu_grid()) {
    auto grid = ccc_grid(3, 6);
    grid.insert(grid.end(), extras.begin(), extras.end());
    for (const auto& n : grid) {
      ++cases;
      if (!check_h3_ladder(nu, n))
        return failed(id, nu_label(nu) + " n=" + vec_str(n));
    }
    // N=1 closed-form eigenvalues (k + nu^2/2)^2.
    for (int k = 1; k <= 3; ++k) {
      const FockVector eta = build_eta(nu, {k}).vec;
      const NormalOrderedOp h3 = make_operator(ChargeKind::H3, nu, k);
      ++cases;
      if (!(apply_op(h3, eta) == eta * eigenvalue(nu, {k})))
        return failed(id, nu_label(nu) + " single-mode k=" + std::to_string(k));
    }
    // Charge-1 level-2 matrix [[2+2v+v^2/4, 2nu],[2nu, 4+v^2/4]], v = nu^2.
    const Scalar v = nu * nu;
    const NormalOrderedOp h3 = make_operator(ChargeKind::H3, nu, 2);
    const auto M = sector_matrix(h3, 1, 2);
    const Scalar m00 = Scalar(2) + Scalar(2) * v + v * v * Scalar(Rat(1, 4));
    const Scalar m11 = Scalar(4) + v * v * Scalar(Rat(1, 4));
    ++cases;
    if (!(M.size() == 2 && M[0][0] == m00 && M[1][1] == m11 &&
          M[0][1] == Scalar(2) * nu && M[1][0] == Scalar(2) * nu))
      return failed(id, nu_label(nu) + " level-2 matrix");
  }
  return ok_count(id, cases);
}

Check check_eigenvector_grid() {
  const char* id = "eigenvectors";
  long cases = 0;
  for (const Scalar& nu : nu_grid())
    for (const auto& n : ccc_grid(3, 6)) {
      ++cases;
      try {
        build_eigenvector(nu, n);
      } catch (const std::exception& e) {
        return failed(id, nu_label(nu) + " n=" + vec_str(n) + ": " + e.what());
      }
    }
  // Pinned small case: nu^2 = 2, n = (1,1).
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const EigenResult r = build_eigenvector(nu, {1, 1});
  if (!(r.energy == Scalar(20)) || !r.certified)
    return failed(id, "pinned case energy/certification");
  const MuOffset step = {{{0, 1}, 1}};
  bool found = false;
  for (const AlphaEntry& e : r.alpha)
    if (e.mu == step) {
      found = true;
      if (!(e.value == Scalar(Rat(2, 3))))
        return failed(id, "pinned case raising coefficient != 2/3");
    }
  if (!found) return failed(id, "pinned case missing raising coefficient");
  const FockVector want =
      build_eta(nu, {1, 1}).vec + build_eta(nu, {2, 0}).vec * Scalar(Rat(2, 3));
  if (!(r.psi == want)) return failed(id, "pinned case vector");
  return ok_count(id, cases + 1);
}

Check check_two_route_grid() {
  const char* id = "two-route-poly";
  long cases = 0;
  for (const Scalar& nu : nu_grid())
    for (const auto& n : ccc_grid(3, 6)) {
      const int N = static_cast<int>(n.size());
      const SymPoly a = poly_from_eta(nu, n);
      const SymPoly b = poly_from_fock(nu, build_eta(nu, n).vec, N);
      ++cases;
      if (!(a == b)) return failed(id, nu_label(nu) + " n=" + vec_str(n));
    }
  // n = (1,0) must give nu^2 m_(1).
  for (const Scalar& nu : nu_grid()) {
    SymPoly want = sym_zero(2, 1);
    sym_add(want, {1}, nu * nu);
    ++cases;
    if (!(poly_from_eta(nu, {1, 0}) == want))
      return failed(id, nu_label(nu) + " anchor (1,0)");
  }
  return ok_count(id, cases);
}

Check check_jack_grid() {
  const char* id = "jack-match";
  long cases = 0;
  for (const Scalar& nu : nu_grid())
    for (const auto& n : ccc_grid(4, 6)) {
      ++cases;
      try {
        if (!jack_compare(nu, n).match)
          return failed(id, nu_label(nu) + " n=" + vec_str(n));
      } catch (const std::exception& e) {
        return failed(id, nu_label(nu) + " n=" + vec_str(n) + ": " + e.what());
      }
    }
  // Closed-form small cases.
  for (const Scalar& nu : {Scalar(Rat(3, 2)), Scalar::sqrt_rational(Rat(2))}) {
    const Scalar v = nu * nu;
    SymPoly m11 = sym_zero(2, 2);
    sym_add(m11, {1, 1}, Scalar(1));
    SymPoly j2 = sym_zero(2, 2);
    sym_add(j2, {2}, Scalar(1));
    sym_add(j2, {1, 1}, Scalar(2) * v / (v + Scalar(1)));
    ++cases;
    if (!(jack_polynomial(nu, {1, 1}, 2) == m11 && jack_polynomial(nu, {2}, 2) == j2))
      return failed(id, nu_label(nu) + " closed-form degree-2");
  }
  SymPoly schur = sym_zero(3, 3);
  sym_add(schur, {2, 1}, Scalar(1));
  sym_add(schur, {1, 1, 1}, Scalar(2));
  ++cases;
  if (!(jack_polynomial(Scalar(1), {2, 1}, 3) == schur))
    return failed(id, "Schur case (2,1)");
  return ok_count(id, cases);
}

Check check_pde_grid() {
  const char* id = "pde-residual";
  const double L = 2.0 * kPi;
  const double tol = 1e-8;
  long cases = 0;
  double worst = 0.0;
  for (const Scalar& nu : nu_grid())
    for (const auto& n : ccc_grid(3, 6)) {
      const int N = static_cast<int>(n.size());
      const EigenResult r = build_eigenvector(nu, n);
      const WaveFunctionSpec ws = assemble_eigenfunction(r, 0, L);
      for (const auto& x : random_admissible_points(N, L, 20, 0x5eedULL)) {
        const PointEval ev = wf_point(ws, x);
        worst = std::max({worst, ev.pde_residual, ev.momentum_residual});
        ++cases;
        if (ev.pde_residual > tol || ev.momentum_residual > tol)
          return failed(id, nu_label(nu) + " n=" + vec_str(n) +
                                " residual=" + num_str(std::max(
                                                   ev.pde_residual,
                                                   ev.momentum_residual)));
      }
    }
  Check c = ok_count(id, cases);
  c.detail += " worst=" + num_str(worst);
  return c;
}

Check check_duality_grid() {
  const char* id = "duality";
  long cases = 0;
  long mismatches = 0;
  for (const Scalar& nu : {Scalar(2), Scalar(3), Scalar(Rat(1, 2))})
    for (const auto& n : ccc_grid(2, 4)) {
      ++cases;
      DualityResult d;
      try {
        d = duality_check(nu, n);
      } catch (const std::exception& e) {
        return failed(id, nu_label(nu) + " n=" + vec_str(n) + ": " + e.what());
      }
      if (!d.is_eigen)
        return failed(id, nu_label(nu) + " n=" + vec_str(n) + " not an eigenvector");
      if (!d.match) ++mismatches;
    }
  Check c = ok_count(id, cases);
  c.detail += " closed-form mismatches surfaced: " + std::to_string(mismatches);
  return c;
}

Check check_corr_identities() {
  const char* id = "corr-identities";
  const double L = 7.3;
  // Two printed forms of the pair factor.
  double worstb = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = -0.49 * L + 0.98 * L * i / 99.0;
    for (double eps : {0.0, 1e-6, 0.03, 0.7}) {
      const std::complex<double> direct = b_factor(x, eps, L);
      const std::complex<double> closed = std::complex<double>(0, -2.0) *
                                          std::exp(-kPi * eps / L) *
                                          std::sin(kPi * std::complex<double>(x, eps) / L);
      worstb = std::max(worstb, std::abs(direct - closed));
    }
  }
  if (worstb > 1e-14) return failed(id, "pair-factor forms differ " + num_str(worstb));
  if (std::abs(b_factor(L / 2, 0, L) - std::complex<double>(0, -2)) > 1e-15 ||
      std::abs(b_factor(0, 0, L)) != 0.0)
    return failed(id, "pair-factor anchors");
  // Exchange relation, 50 configurations per coupling.
  double worstx = 0.0;
  for (double nu2 : {1.0, 0.5, 1.0 / 3.0}) {
    std::mt19937_64 rng(0xabcdef12);
    std::uniform_real_distribution<double> ux(-0.45 * L, 0.45 * L), ue(0.01, 0.2);
    for (int t = 0; t < 50; ++t) {
      CorrSpec s;
      s.L = L;
      s.nu0 = std::sqrt(nu2);
      s.charges = {1, 1, -2};
      s.x = {ux(rng), ux(rng), ux(rng)};
      s.eps = {ue(rng), ue(rng), ue(rng)};
      for (int j = 1; j <= 2; ++j) worstx = std::max(worstx, exchange_residual(s, j));
    }
  }
  if (worstx > 1e-10) return failed(id, "exchange residual " + num_str(worstx));
  // Braid relations.
  for (double nu2 : {1.0, 0.5, 1.0 / 3.0})
    if (!braid_check(4, nu2, 0.1, 25) || !braid_check(3, nu2, 0.05, 25))
      return failed(id, "braid relations at nu2=" + num_str(nu2));
  Check c = ok_count(id, 100 * 4 + 3 * 50 * 2 + 6);
  c.detail += " worst b=" + num_str(worstb) + " exch=" + num_str(worstx);
  return c;
}

namespace {

// ---- suite-only checks ----

Check check_adjointness() {
  const char* id = "adjointness";
  std::mt19937_64 rng(0xad01);
  long cases = 0;
  for (int m = 1; m <= 6; ++m)
    for (int level = 0; level <= 5; ++level) {
      const FockVector v = sector_vector(1, level, rng);
      const FockVector w = sector_vector(1, level + m, rng);
      ++cases;
      if (!(inner(apply_mode(-m, v), w) == inner(v, apply_mode(m, w))))
        return failed(id, "m=" + std::to_string(m) +
                              " level=" + std::to_string(level));
    }
  return ok_count(id, cases);
}

Check check_grading() {
  const char* id = "sector-grading";
  const Scalar nu(Rat(3, 2));
  long cases = 0;
  for (const auto& [charge, level] :
       std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {0, 4}, {-1, 2}}) {
    for (ChargeKind kind : {ChargeKind::W2, ChargeKind::C, ChargeKind::H3}) {
      const NormalOrderedOp op = make_operator(kind, nu, level);
      for (const Partition& lam : partitions_of(level)) {
        const FockVector img =
            apply_op(op, FockVector::basis(FockState{charge, lam}));
        ++cases;
        if (img.is_zero()) continue;
        if (img.homogeneous_charge() != charge || img.homogeneous_level() != level)
          return failed(id, "charge=" + std::to_string(charge) +
                                " level=" + std::to_string(level));
      }
    }
  }
  return ok_count(id, cases);
}

Check check_sector_symmetry() {
  const char* id = "sector-symmetry";
  long cases = 0;
  for (const auto& [charge, level] :
       std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {0, 5}}) {
    const auto w2 = sector_matrix(make_operator(ChargeKind::W2, Scalar(1), level),
                                  charge, level);
    const auto cm = sector_matrix(make_operator(ChargeKind::C, Scalar(1), level),
                                  charge, level);
    const std::size_t d = w2.size();
    const auto basis = partitions_of(level);
    const Scalar diag_w2 =
        Scalar(Rat(static_cast<long>(charge) * charge, 2)) + Scalar(level);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        ++cases;
        if (!(w2[i][j] == w2[j][i]) || !(cm[i][j] == cm[j][i]))
          return failed(id, "asymmetric entry");
        long sq = 0;  // C is diagonal with sum of squared parts
        for (int part : basis[i]) sq += static_cast<long>(part) * part;
        const Scalar w_want = (i == j) ? diag_w2 : Scalar(0);
        const Scalar c_want = (i == j) ? Scalar(sq) : Scalar(0);
        if (!(w2[i][j] == w_want) || !(cm[i][j] == c_want))
          return failed(id, "unexpected diagonal value");
      }
  }
  return ok_count(id, cases);
}

Check check_norm_anchors() {
  const char* id = "norms";
  struct Case {
    Partition lam;
    long want;
  };
  const std::vector<Case> table = {
      {{}, 1}, {{1}, 1}, {{2}, 2}, {{1, 1}, 2}, {{2, 2, 3}, 24}, {{3, 1, 1}, 6}};
  for (const Case& c : table)
    if (!(state_norm2(FockState{0, c.lam}) == Scalar(c.want)))
      return failed(id, "norm^2 mismatch");
  for (int w = -2; w <= 2; ++w) {
    const Scalar got = inner(FockVector::vacuum(0), FockVector::vacuum(w));
    if (!(got == Scalar(w == 0 ? 1 : 0))) return failed(id, "vacuum overlap");
  }
  return ok_count(id, static_cast<long>(table.size()) + 5);
}

Check check_w3_anchors() {
  const char* id = "w3-sectors";
  const NormalOrderedOp w3 = make_operator(ChargeKind::W3, Scalar(1), 2);
  const auto m12 = sector_matrix(w3, 1, 2);
  const Scalar q = Scalar(Rat(17, 4));
  if (!(m12.size() == 2 && m12[0][0] == q && m12[1][1] == q &&
        m12[0][1] == Scalar(2) && m12[1][0] == Scalar(2)))
    return failed(id, "charge-1 level-2 matrix");
  const auto m10 = sector_matrix(w3, 1, 0);
  if (!(m10.size() == 1 && m10[0][0] == Scalar(Rat(1, 4))))
    return failed(id, "charge-1 level-0 value");
  const auto m00 = sector_matrix(w3, 0, 0);
  if (!(m00.size() == 1 && m00[0][0] == Scalar(0)))
    return failed(id, "vacuum value");
  return ok_count(id, 3);
}

Check check_eta_grading() {
  const char* id = "eta-grading";
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  long cases = 0;
  for (const auto& n : ccc_grid(3, 4)) {
    const EtaState eta = build_eta(nu, n);
    if (eta.vec.is_zero()) continue;
    int total = 0;
    for (int x : n) total += x;
    ++cases;
    if (eta.vec.homogeneous_charge() != static_cast<int>(n.size()) ||
        eta.vec.homogeneous_level() != total)
      return failed(id, "n=" + vec_str(n));
  }
  return ok_count(id, cases);
}

Check check_mode_coefficients() {
  const char* id = "mode-coefficients";
  long cases = 0;
  for (const Scalar& nu : {Scalar::sqrt_rational(Rat(2)), Scalar(Rat(3, 2))})
    for (int k = 1; k <= 5; ++k) {
      const FockVector v = vertex_mode(nu, k, FockVector::vacuum(0));
      for (const Partition& lam : partitions_of(k)) {
        Scalar want(1);
        for (const auto& [part, mult] : part_multiplicities(lam)) {
          long fact = 1, powj = 1;
          for (int t = 2; t <= mult; ++t) fact *= t;
          for (int t = 0; t < mult; ++t) powj *= part;
          want *= nu.pow(mult) / Scalar(fact * powj);
        }
        ++cases;
        if (!(v.coefficient(FockState{1, lam}) == want))
          return failed(id, "k=" + std::to_string(k));
      }
    }
  return ok_count(id, cases);
}

Check check_momenta_anchors() {
  const char* id = "momenta";
  const auto p1 = anyon_momenta(Scalar::sqrt_rational(Rat(2)), {1, 0});
  if (!(p1.size() == 2 && p1[0] == Scalar(4) && p1[1] == Scalar(1)))
    return failed(id, "nu2=2 n=(1,0)");
  const auto p2 = anyon_momenta(Scalar::sqrt_rational(Rat(3)), {0});
  if (!(p2.size() == 1 && p2[0] == Scalar(Rat(3, 2))))
    return failed(id, "nu2=3 n=(0)");
  const auto p3 = anyon_momenta(Scalar(1), {0, 0});
  if (!(p3.size() == 2 && p3[0] == Scalar(Rat(3, 2)) && p3[1] == Scalar(Rat(1, 2))))
    return failed(id, "nu2=1 n=(0,0)");
  return ok_count(id, 3);
}

Check check_w3_reduction() {
  const char* id = "nu1-reduction";
  long cases = 0;
  for (const auto& [charge, level] :
       std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {0, 2}, {-1, 1}}) {
    const auto a = sector_matrix(make_operator(ChargeKind::Wnu3, Scalar(1), level),
                                 charge, level);
    const auto b = sector_matrix(make_operator(ChargeKind::W3, Scalar(1), level),
                                 charge, level);
    ++cases;
    if (!(a == b)) return failed(id, "charge=" + std::to_string(charge) +
                                         " level=" + std::to_string(level));
  }
  return ok_count(id, cases);
}

Check check_h3_structure() {
  const char* id = "h3-structure";
  long cases = 0;
  for (const Scalar& nu : {Scalar(Rat(3, 2)), Scalar::sqrt_rational(Rat(2))})
    for (const auto& [charge, level] :
         std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
      const auto h3 = sector_matrix(make_operator(ChargeKind::H3, nu, level),
                                    charge, level);
      const auto w3 = sector_matrix(make_operator(ChargeKind::Wnu3, nu, level),
                                    charge, level);
      const auto cm = sector_matrix(make_operator(ChargeKind::C, nu, level),
                                    charge, level);
      const Scalar one_minus = Scalar(1) - nu * nu;
      for (std::size_t i = 0; i < h3.size(); ++i)
        for (std::size_t j = 0; j < h3.size(); ++j) {
          ++cases;
          if (!(h3[i][j] == nu * w3[i][j] + one_minus * cm[i][j]))
            return failed(id, nu_label(nu));
        }
    }
  return ok_count(id, cases);
}

Check check_gap_anchors() {
  const char* id = "gap-values";
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const MuOffset step = {{{0, 1}, 1}};
  if (!(gap(nu, {1, 1}, step) == Scalar(6))) return failed(id, "(1,1) step");
  if (!(gap(nu, {1, 0}, step) == Scalar(8))) return failed(id, "(1,0) step");
  // gap must equal the eigenvalue difference for shifted vectors.
  long cases = 2;
  for (const Scalar& g : nu_grid())
    for (int k = 1; k <= 3; ++k) {
      MuOffset mu = {{{0, 1}, k}};
      const std::vector<int> n = {3, 2, 1};
      MuOffset mu2 = {{{0, 2}, k}, {{1, 2}, 1}};
      for (const MuOffset& m : {mu, mu2}) {
        ++cases;
        if (!(gap(g, n, m) ==
              eigenvalue(g, shift_momenta(n, m)) - eigenvalue(g, n)))
          return failed(id, nu_label(g) + " shift identity");
      }
    }
  return ok_count(id, cases);
}

Check check_gauged_spectrum() {
  const char* id = "gauged-spectrum";
  if (!(eigenvalue_gauged(Scalar(1), {0, 0}, 0) == Scalar(Rat(1, 2))))
    return failed(id, "free-fermion ground value");
  if (!(eigenvalue(Scalar(1), {0, 0}) == Scalar(Rat(5, 2))))
    return failed(id, "ungauged ground value");
  if (!(eigenvalue(Scalar::sqrt_rational(Rat(2)), {1, 1}) == Scalar(20)))
    return failed(id, "pinned level-2 value");
  long cases = 3;
  // Gauged value = sum (P_j - mu_g)^2 with half-integer offset absorbed.
  for (const Scalar& nu : nu_grid())
    for (long mu_g : {0L, 1L, 3L}) {
      const std::vector<int> n = {2, 1, 0};
      Scalar direct(0);
      const int N = static_cast<int>(n.size());
      for (int j = 1; j <= N; ++j) {
        Scalar term = Scalar(n[j - 1] - static_cast<int>(mu_g)) +
                      nu * nu * Scalar(Rat(N + 1 - 2 * j, 2));
        direct += term * term;
      }
      ++cases;
      if (!(eigenvalue_gauged(nu, n, mu_g) == direct))
        return failed(id, nu_label(nu) + " mu_g=" + std::to_string(mu_g));
    }
  return ok_count(id, cases);
}

Check check_json_round_trip() {
  const char* id = "json-round-trip";
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const EigenResult r = build_eigenvector(nu, {2, 1});
  const std::string ej = eigen_to_json(r);
  const EigenResult r2 = eigen_from_json(ej);
  if (!(eigen_to_json(r2) == ej && r2.psi == r.psi && r2.energy == r.energy))
    return failed(id, "eigen document");
  const std::string fj = fock_to_json(r.psi);
  if (!(fock_from_json(fj) == r.psi)) return failed(id, "vector document");
  const NormalOrderedOp op = make_operator(ChargeKind::H3, Scalar(Rat(3, 2)), 4);
  const std::string oj = op_to_json(op);
  if (!(op_to_json(op_from_json(oj)) == oj)) return failed(id, "operator document");
  const SymPoly p = jack_polynomial(Scalar(1), {2, 1}, 3);
  const std::string sj = sympoly_to_json(p);
  if (!(sympoly_from_json(sj) == p)) return failed(id, "polynomial document");
  return ok_count(id, 4);
}

Check check_cs_anchors() {
  const char* id = "cs-oracle";
  long cases = 0;
  for (const Scalar& nu : {Scalar(Rat(3, 2)), Scalar::sqrt_rational(Rat(2))}) {
    SymPoly m11 = sym_zero(2, 2);
    sym_add(m11, {1, 1}, Scalar(1));
    ++cases;
    if (!(cs_apply(nu, m11) == m11 * Scalar(2)))
      return failed(id, nu_label(nu) + " m11 eigenvalue");
    // Oracle eigen-equation on a nontrivial case.
    const SymPoly j = jack_polynomial(nu, {2, 1}, 3);
    ++cases;
    if (!(cs_apply(nu, j) == j * cs_eigenvalue(nu, {2, 1}, 3)))
      return failed(id, nu_label(nu) + " (2,1) eigen-equation");
  }
  // Dominance triangularity of the image.
  const Scalar nu(Rat(3, 2));
  for (const Partition& lam : partitions_of_max_len(4, 3)) {
    SymPoly m = sym_zero(3, 4);
    sym_add(m, lam, Scalar(1));
    const SymPoly img = cs_apply(nu, m);
    for (const auto& [key, c] : img.coeffs) {
      ++cases;
      if (!dominates(lam, key)) return failed(id, "dominance violated");
    }
    if (!(img.coefficient(lam) == cs_eigenvalue(nu, lam, 3)))
      return failed(id, "diagonal value");
  }
  return ok_count(id, cases);
}

Check check_basis_round_trip() {
  const char* id = "monomial-expansion";
  const SymPoly p = jack_polynomial(Scalar::sqrt_rational(Rat(2)), {2, 1}, 3);
  if (!(sym_collect(3, 3, sym_monomials(p)) == p)) return failed(id, "oracle poly");
  const SymPoly q = poly_from_eta(Scalar(Rat(3, 2)), {2, 1, 0});
  if (!(sym_collect(3, 3, sym_monomials(q)) == q)) return failed(id, "mode-sum poly");
  return ok_count(id, 2);
}

Check check_sgn_properties() {
  const char* id = "sgn-regularized";
  const double L = 7.3;
  if (sgn_reg(0, 0.05, L) != 0.0) return failed(id, "origin value");
  if (std::abs(sgn_reg(L / 4, 1e-6, L) - 1.0) > 1e-4)
    return failed(id, "quarter-period limit");
  double odd = 0.0, series = 0.0;
  for (int i = 1; i < 40; ++i) {
    const double x = -0.45 * L + 0.9 * L * i / 39.0;
    odd = std::max(odd, std::abs(sgn_reg(x, 0.01, L) + sgn_reg(-x, 0.01, L)));
    series = std::max(series, std::abs(sgn_reg(x, 0.05 * L, L) -
                                       sgn_reg_series(x, 0.05 * L, L, 400)));
  }
  if (odd > 1e-14) return failed(id, "antisymmetry " + num_str(odd));
  if (series > 1e-12) return failed(id, "series form " + num_str(series));
  return ok_count(id, 80);
}

Check check_neutrality_translation() {
  const char* id = "charge-selector";
  const double L = 7.3;
  CorrSpec vac;
  vac.L = L;
  vac.nu0 = 0.7;
  vac.w1 = 3;
  vac.w2 = -3;
  if (std::abs(corr_eval(vac) - std::complex<double>(1, 0)) != 0.0)
    return failed(id, "empty product");
  vac.w2 = 2;
  if (std::abs(corr_eval(vac)) != 0.0) return failed(id, "selector");
  CorrSpec like;
  like.L = L;
  like.nu0 = 0.8;
  like.charges = {1, 1};
  like.x = {0.3, -0.8};
  like.eps = {0.01, 0.02};
  if (std::abs(corr_eval(like)) != 0.0) return failed(id, "like charges");
  CorrSpec tr;
  tr.L = L;
  tr.nu0 = 0.6;
  tr.charges = {2, -1, -1};
  tr.x = {0.4, -1.2, 2.0};
  tr.eps = {0.03, 0.04, 0.06};
  tr.w1 = tr.w2 = 1;
  const std::complex<double> base = corr_eval(tr);
  for (double& v : tr.x) v += 0.37;
  if (std::abs(corr_eval(tr) - base) > 1e-14)
    return failed(id, "translation covariance");
  return ok_count(id, 4);
}

Check check_ground_link() {
  const char* id = "pair-ground-link";
  const double L = 7.3;
  long cases = 0;
  for (double nu2 : {0.5, 2.0}) {
    CorrSpec g;
    g.L = L;
    g.nu0 = std::sqrt(nu2);
    g.charges = {1, -1};
    g.x = {1.7, -0.9};
    g.eps = {1e-9, 1e-9};
    const double prod = std::abs(corr_eval(g)) * std::abs(delta_power(nu2, g.x, L));
    ++cases;
    if (std::abs(prod - 1.0) > 1e-8)
      return failed(id, "|C||Delta| = " + num_str(prod));
  }
  return ok_count(id, cases);
}

Check check_f_functional() {
  const char* id = "f-functional";
  const double L = 7.3;
  const Scalar nu = Scalar::sqrt_rational(Rat(2));
  const double nud = std::sqrt(2.0);
  const int N = 2;
  FockVector v = FockVector::vacuum(N);
  v = apply_mode(-2, v);
  v = apply_mode(-1, v);
  const auto raw = sym_monomials(poly_from_fock(nu, v, N));
  const std::vector<std::vector<double>> samples = {{1.9, -1.3}, {0.6, 3.0}};
  const double eps = 1e-10;
  for (const auto& xs : samples) {
    const std::complex<double> phase =
        std::exp(std::complex<double>(0, -kPi * nud * nud * (xs[0] + xs[1]) * N / L));
    std::complex<double> modes(1, 0);
    for (int q : {1, 2}) {
      std::complex<double> s(0, 0);
      for (double xk : xs) s += std::exp(std::complex<double>(0, -2.0 * kPi * q * xk / L));
      modes *= nud * s;
    }
    const std::complex<double> routeA =
        phase * modes *
        std::exp(nud * nud * log_b_factor(xs[0] - xs[1], 2 * eps, L));
    std::complex<double> pval(0, 0);
    const std::complex<double> z1 = std::exp(std::complex<double>(0, -2.0 * kPi * xs[0] / L));
    const std::complex<double> z2 = std::exp(std::complex<double>(0, -2.0 * kPi * xs[1] / L));
    for (const auto& [e, c] : raw)
      pval += c.to_complex() * std::pow(z1, e[0]) * std::pow(z2, e[1]);
    const std::complex<double> routeB = phase * delta_power(nud * nud, xs, L) * pval;
    if (std::abs(routeA - routeB) > 1e-8 * std::abs(routeA))
      return failed(id, "route gap " + num_str(std::abs(routeA - routeB)));
  }
  return ok_count(id, static_cast<long>(samples.size()));
}

// ---- suite assembly ----

using CheckFn = Check (*)();

struct SuiteDef {
  const char* name;
  std::vector<CheckFn> fns;
};

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {"fock",
       {&check_commutator_grid, &check_adjointness, &check_grading,
        &check_sector_symmetry, &check_norm_anchors, &check_w3_anchors}},
      {"vertex",
       {&check_vertex_zero_mode, &check_filter_vanishing, &check_eta_grading,
        &check_mode_coefficients, &check_momenta_anchors}},
      {"wcharges", {&check_h2_grid, &check_h3_grid, &check_w3_reduction,
                    &check_h3_structure}},
      {"solver",
       {&check_gap_anchors, &check_eigenvector_grid, &check_pde_grid,
        &check_duality_grid, &check_gauged_spectrum, &check_json_round_trip}},
      {"sympoly", {&check_two_route_grid, &check_jack_grid, &check_cs_anchors,
                   &check_basis_round_trip}},
      {"corr",
       {&check_corr_identities, &check_sgn_properties,
        &check_neutrality_translation, &check_ground_link, &check_f_functional}},
  };
  return table;
}

int worker_count() {
  if (const char* env = std::getenv("CSANYON_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

Check run_guarded(CheckFn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return Check{"internal", false, std::string("unhandled exception: ") + e.what()};
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteDef& s : suite_table()) out.emplace_back(s.name);
  return out;
}

std::vector<Suite> run_suites(const std::vector<std::string>& names) {
  std::vector<Suite> suites;
  std::vector<CheckFn> tasks;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // suite, position
  for (const std::string& name : names) {
    const auto& table = suite_table();
    const auto it =
        std::find_if(table.begin(), table.end(),
                     [&](const SuiteDef& d) { return name == d.name; });
    if (it == table.end())
      throw std::invalid_argument("unknown verification suite: " + name);
    Suite s;
    s.name = it->name;
    s.checks.resize(it->fns.size());
    for (std::size_t k = 0; k < it->fns.size(); ++k) {
      tasks.push_back(it->fns[k]);
      slots.emplace_back(suites.size(), k);
    }
    suites.push_back(std::move(s));
  }
  const int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      suites[slots[i].first].checks[slots[i].second] = run_guarded(tasks[i]);
    return suites;
  }
  std::vector<Check> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        results[i] = run_guarded(tasks[i]);
    });
  for (std::thread& t : pool) t.join();
  for (std::size_t i = 0; i < tasks.size(); ++i)
    suites[slots[i].first].checks[slots[i].second] = std::move(results[i]);
  return suites;
}

Suite run_suite(const std::string& name) { return run_suites({name}).front(); }

std::string render_report(const std::vector<Suite>& suites) {
  std::string out;
  int total = 0, failures = 0;
  for (const Suite& s : suites) {
    out += "suite " + s.name + "\n";
    for (const Check& c : s.checks) {
      ++total;
      if (!c.pass) ++failures;
      std::string id = c.id;
      if (id.size() < 20) id.resize(20, ' ');
      out += std::string(c.pass ? "  ok   " : "  FAIL ") + id + " " + c.detail + "\n";
    }
  }
  out += "total: " + std::to_string(total) + " checks, " +
         std::to_string(failures) + " failures\n";
  return out;
}

}  // namespace csanyon
