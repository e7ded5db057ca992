#include "csanyon/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace csanyon {
namespace {

void require_sorted(const std::vector<int>& n) {
  if (n.empty()) throw std::invalid_argument("empty momentum vector");
  for (size_t i = 0; i + 1 < n.size(); ++i)
    if (n[i] < n[i + 1])
      throw std::invalid_argument("momenta must be non-increasing");
  if (n.back() < 0) throw std::invalid_argument("momenta must be >= 0");
}

// Per-row caps on how much momentum can leave row l: cap[N-1] = n[N-1],
// cap[l] = n[l] + sum_{k>l} 2^{k-l-1} (n[k] + cap[k]). Loose but sound; the
// eigenvector residual check certifies sufficiency after the fact.
std::vector<long> column_caps(const std::vector<int>& n) {
  const int N = static_cast<int>(n.size());
  std::vector<long> cap(N, 0);
  cap[N - 1] = n[N - 1];
  for (int l = N - 2; l >= 0; --l) {
    long c = n[l];
    for (int k = l + 1; k < N; ++k)
      c += (1L << (k - l - 1)) * (n[k] + cap[k]);
    cap[l] = c;
  }
  return cap;
}

// All length-`len` vectors of non-negative ints with sum <= cap.
void fills_rec(int len, long cap, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (long v = 0; v <= cap; ++v) {
    cur.push_back(static_cast<int>(v));
    fills_rec(len - 1, cap - v, cur, out);
    cur.pop_back();
  }
}

std::vector<MuOffset> enumerate_mu(const std::vector<int>& n) {
  const int N = static_cast<int>(n.size());
  std::vector<long> cap = column_caps(n);
  std::vector<MuOffset> all{MuOffset{}};
  for (int l = 1; l < N; ++l) {
    std::vector<std::vector<int>> fills;
    std::vector<int> cur;
    fills_rec(l, std::max(0L, cap[l]), cur, fills);
    std::vector<MuOffset> next;
    next.reserve(all.size() * fills.size());
    for (const MuOffset& base : all)
      for (const std::vector<int>& f : fills) {
        MuOffset m = base;
        for (int j = 0; j < l; ++j)
          if (f[j] > 0) m[{j, l}] = f[j];
        next.push_back(std::move(m));
      }
    all = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const MuOffset& a, const MuOffset& b) {
    int ta = mu_total(a), tb = mu_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return all;
}

}  // namespace

std::vector<int> shift_momenta(const std::vector<int>& n, const MuOffset& mu) {
  std::vector<int> m = n;
  for (const auto& [jl, k] : mu) {
    m[jl.first] += k;
    m[jl.second] -= k;
  }
  return m;
}

int mu_total(const MuOffset& mu) {
  int t = 0;
  for (const auto& [jl, k] : mu) t += k;
  return t;
}

Scalar gap(const Scalar& nu, const std::vector<int>& n, const MuOffset& mu) {
  const int N = static_cast<int>(n.size());
  const Scalar nu2 = nu * nu;
  Scalar out(0);
  for (int j = 0; j < N; ++j) {
    long delta = 0;
    for (const auto& [jl, k] : mu) {
      if (jl.first == j) {
        out += Scalar(2L * k) * (Scalar(n[j] - n[jl.second]) +
                                 Scalar(static_cast<long>(jl.second - j)) * nu2);
        delta -= k;
      }
      if (jl.second == j) delta += k;
    }
    out += Scalar(delta * delta);
  }
  return out;
}

Scalar eigenvalue(const Scalar& nu, const std::vector<int>& n) {
  Scalar e(0);
  for (const Scalar& p : anyon_momenta(nu, n)) e += p * p;
  return e;
}

Scalar eigenvalue_gauged(const Scalar& nu, const std::vector<int>& n,
                         long mu_g) {
  const long N = static_cast<long>(n.size());
  const Scalar nu2 = nu * nu;
  Scalar e(0);
  for (long j = 1; j <= N; ++j) {
    Scalar p = Scalar(n[j - 1] - mu_g) + nu2 * Scalar(Rat(N + 1 - 2 * j, 2));
    e += p * p;
  }
  return e;
}

std::vector<AlphaEntry> solve_coefficients(const Scalar& nu,
                                           const std::vector<int>& n) {
  if (!nu.is_exact()) throw std::invalid_argument("exact coupling required");
  require_sorted(n);
  const Scalar g = gamma_factor(nu);
  std::map<MuOffset, Scalar> memo;
  std::vector<AlphaEntry> out;
  for (const MuOffset& mu : enumerate_mu(n)) {
    Scalar a(0);
    if (mu.empty()) {
      a = Scalar(1);
    } else if (!(g == Scalar(0)) &&
               !build_eta(nu, shift_momenta(n, mu)).vec.is_zero()) {
      Scalar num(0);
      for (const auto& [jl, kmax] : mu)
        for (int k = 1; k <= kmax; ++k) {
          MuOffset src = mu;
          if (k == kmax)
            src.erase(jl);
          else
            src[jl] = kmax - k;
          auto it = memo.find(src);
          if (it == memo.end())
            throw std::logic_error("recursion source not enumerated");
          num += Scalar(k) * it->second;
        }
      if (!(num == Scalar(0))) {
        Scalar d = gap(nu, n, mu);
        if (d == Scalar(0)) throw std::logic_error("zero gap in recursion");
        a = g * num / d;
      }
    }
    memo.emplace(mu, a);
    if (!(a == Scalar(0))) out.push_back(AlphaEntry{mu, a});
  }
  return out;
}

EigenResult build_eigenvector(const Scalar& nu, const std::vector<int>& n) {
  EigenResult res;
  res.nu = nu;
  res.n = n;
  res.energy = eigenvalue(nu, n);
  res.alpha = solve_coefficients(nu, n);
  for (const AlphaEntry& ae : res.alpha)
    res.psi += build_eta(nu, shift_momenta(n, ae.mu)).vec * ae.value;
  int lvl = 0;
  for (int v : n) lvl += v;
  NormalOrderedOp h3 = make_operator(ChargeKind::H3, nu, std::max(0, lvl));
  if (!(apply_op(h3, res.psi) == res.psi * res.energy))
    throw std::runtime_error("eigenvector certification failed");
  res.certified = true;
  return res;
}

DualityResult duality_check(const Scalar& nu, const std::vector<int>& n) {
  const Scalar dual = -nu.inverse();
  EigenResult base = build_eigenvector(dual, n);
  const long N = static_cast<long>(n.size());
  int lvl = 0;
  for (int v : n) lvl += v;
  NormalOrderedOp h3 = make_operator(ChargeKind::H3, nu, std::max(0, lvl));
  FockVector y = apply_op(h3, base.psi);

  DualityResult out;
  if (base.psi.is_zero())
    throw std::runtime_error("dual eigenvector is the zero vector");
  const auto& [s0, c0] = *base.psi.entries().begin();
  out.e_found = y.coefficient(s0) / c0;
  out.is_eigen = (y == base.psi * out.e_found);

  Scalar sp(0), sp2(0);
  for (const Scalar& p : anyon_momenta(dual, n)) {
    sp += p;
    sp2 += p * p;
  }
  const Scalar nu2 = nu * nu, nu3 = nu.pow(3), nu4 = nu.pow(4);
  const Scalar q = Scalar(N);
  Scalar e0 = (nu2 + Scalar(1)) / (Scalar(6) * nu2) *
              (Scalar(4) *
                   (Scalar(4) * nu4 - Scalar(3) * nu3 - Scalar(4) * nu2 -
                    Scalar(9) * nu - Scalar(5)) *
                   q * q -
               Scalar(3) * nu4 + Scalar(2) * nu3 + Scalar(5) * nu2 -
               Scalar(2) * nu - Scalar(3)) *
              q;
  out.e_closed =
      -nu2 * sp2 - Scalar(2) * (nu2 + Scalar(1)) * q * sp + e0;
  out.match = (out.e_found == out.e_closed);
  return out;
}

}  // namespace csanyon
