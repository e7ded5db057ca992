#include "csanyon/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "csanyon/solver.hpp"

namespace csanyon {

Scalar SymPoly::coefficient(const Partition& lam) const {
  auto it = coeffs.find(lam);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

bool SymPoly::operator==(const SymPoly& o) const {
  // Zero polynomials compare equal whatever their nominal degree.
  return N == o.N && coeffs == o.coeffs &&
         (coeffs.empty() || degree == o.degree);
}

SymPoly sym_zero(int N, int degree) {
  SymPoly p;
  p.N = N;
  p.degree = degree;
  return p;
}

void sym_add(SymPoly& p, const Partition& lam, const Scalar& c) {
  if (!is_partition(lam) || static_cast<int>(lam.size()) > p.N ||
      partition_weight(lam) != p.degree)
    throw std::logic_error("monomial key outside the polynomial's grading");
  auto it = p.coeffs.find(lam);
  if (it == p.coeffs.end()) {
    if (!(c == Scalar(0))) p.coeffs.emplace(lam, c);
    return;
  }
  it->second += c;
  if (it->second == Scalar(0)) p.coeffs.erase(it);
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.N != b.N) throw std::logic_error("variable count mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree != b.degree) throw std::logic_error("degree mismatch");
  SymPoly out = a;
  for (const auto& [lam, c] : b.coeffs) sym_add(out, lam, c);
  return out;
}

SymPoly operator*(const SymPoly& p, const Scalar& c) {
  SymPoly out = sym_zero(p.N, p.degree);
  if (c == Scalar(0)) return out;
  for (const auto& [lam, v] : p.coeffs) out.coeffs.emplace(lam, v * c);
  return out;
}

std::map<std::vector<int>, Scalar> sym_monomials(const SymPoly& p) {
  std::map<std::vector<int>, Scalar> raw;
  for (const auto& [lam, c] : p.coeffs) {
    std::vector<int> e(p.N, 0);
    std::copy(lam.begin(), lam.end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
      raw.emplace(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return raw;
}

SymPoly sym_collect(int N, int degree,
                    const std::map<std::vector<int>, Scalar>& raw) {
  std::map<std::vector<int>, Scalar> pruned;
  for (const auto& [e, c] : raw)
    if (!(c == Scalar(0))) pruned.emplace(e, c);
  SymPoly out = sym_zero(N, degree);
  for (const auto& [e, c] : pruned) {
    Partition lam = e;
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (out.coeffs.find(lam) == out.coeffs.end()) sym_add(out, lam, c);
  }
  if (sym_monomials(out) != pruned)
    throw std::logic_error("raw monomial map is not symmetric");
  return out;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
  if (a.N != b.N) throw std::logic_error("variable count mismatch");
  std::map<std::vector<int>, Scalar> raw;
  for (const auto& [ea, ca] : sym_monomials(a))
    for (const auto& [eb, cb] : sym_monomials(b)) {
      std::vector<int> e(a.N);
      for (int i = 0; i < a.N; ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = raw.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  return sym_collect(a.N, a.degree + b.degree, raw);
}

SymPoly power_sum_poly(int k, int N) {
  if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
  SymPoly p = sym_zero(N, k);
  sym_add(p, Partition{k}, Scalar(1));
  return p;
}

Scalar gen_binom(const Scalar& t, int k) {
  Scalar num(1);
  Rat fact(1);
  for (int i = 0; i < k; ++i) {
    num *= t - Scalar(i);
    fact *= Rat(i + 1);
  }
  return num / Scalar(fact);
}

SymPoly poly_from_eta(const Scalar& nu, const std::vector<int>& n) {
  const int N = static_cast<int>(n.size());
  const Scalar nu2 = nu * nu;
  const int deg = std::accumulate(n.begin(), n.end(), 0);
  if (deg < 0) return sym_zero(N, 0);

  // Signed binomial weights (-1)^k binom(+-nu^2, k), memoized.
  std::vector<Scalar> wpair{Scalar(1)}, wcloud{Scalar(1)};
  auto weight = [&](std::vector<Scalar>& w, const Scalar& t, int k) {
    while (static_cast<int>(w.size()) <= k) {
      int i = static_cast<int>(w.size());
      w.push_back(gen_binom(t, i) * Scalar(i % 2 ? -1 : 1));
    }
    return w[k];
  };

  std::map<std::vector<int>, Scalar> raw;
  std::vector<int> inc(N, 0);   // mu received from later rows
  std::vector<int> expo(N, 0);  // accumulated z-exponents

  // Rows are processed j = N-1 .. 0; each row splits its budget
  // T = n_j + inc_j exactly into mu_{j,j'} (j' < j) and m_{j,l}. Slots
  // 0..j-1 are mu-targets, slots j..j+N-1 are cloud exponents; the last
  // slot absorbs the remainder.
  std::function<void(int, const Scalar&)> row = [&](int j, const Scalar& co) {
    if (j < 0) {
      auto [it, fresh] = raw.emplace(expo, co);
      if (!fresh) it->second += co;
      return;
    }
    const int T = n[j] + inc[j];
    if (T < 0) return;
    std::function<void(int, int, const Scalar&)> slot = [&](int s, int rem,
                                                            const Scalar& c) {
      if (s == j + N - 1) {
        Scalar cv = c * weight(wcloud, -nu2, rem);
        if (cv == Scalar(0)) return;
        expo[s - j] += rem;
        row(j - 1, cv);
        expo[s - j] -= rem;
        return;
      }
      for (int v = 0; v <= rem; ++v) {
        Scalar cv = c * (s < j ? weight(wpair, nu2, v)
                               : weight(wcloud, -nu2, v));
        if (cv == Scalar(0)) continue;
        if (s < j)
          inc[s] += v;
        else
          expo[s - j] += v;
        slot(s + 1, rem - v, cv);
        if (s < j)
          inc[s] -= v;
        else
          expo[s - j] -= v;
      }
    };
    slot(0, T, co);
  };
  row(N - 1, Scalar(1));
  return sym_collect(N, deg, raw);
}

SymPoly poly_from_fock(const Scalar& nu, const FockVector& v, int N) {
  bool have = false;
  SymPoly out = sym_zero(N, 0);
  for (const auto& [s, c] : v.entries()) {
    if (s.charge != N) continue;
    SymPoly term = sym_zero(N, 0);
    sym_add(term, Partition{}, Scalar(1));
    for (int p : s.parts) term = sym_mul(term, power_sum_poly(p, N));
    term = term * (c.conj() * nu.pow(static_cast<long>(s.parts.size())));
    out = have ? out + term : term;
    have = true;
  }
  return out;
}

SymPoly cs_apply(const Scalar& nu, const SymPoly& p) {
  const Scalar nu2 = nu * nu;
  std::map<std::vector<int>, Scalar> out;
  auto bump = [&out](const std::vector<int>& e, const Scalar& c) {
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh) it->second += c;
  };
  for (const auto& [e, c] : sym_monomials(p)) {
    Rat diag(0);
    for (int a : e) diag += Rat(a) * Rat(a);
    bump(e, c * Scalar(diag));
    for (int j = 0; j < p.N; ++j)
      for (int k = j + 1; k < p.N; ++k) {
        const int s = std::abs(e[j] - e[k]);
        if (s == 0) continue;
        const Scalar w = nu2 * Scalar(s) * c;
        bump(e, w);
        const int hi = e[j] > e[k] ? j : k, lo = hi == j ? k : j;
        std::vector<int> e2 = e;
        for (int i = 1; i < s; ++i) {
          --e2[hi];
          ++e2[lo];
          bump(e2, w);
        }
      }
  }
  return sym_collect(p.N, p.degree, out);
}

Scalar cs_eigenvalue(const Scalar& nu, const Partition& lam, int N) {
  Scalar e(0);
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    const long li = lam[i - 1];
    e += Scalar(li * li) + nu * nu * Scalar(li * (N + 1 - 2 * i));
  }
  return e;
}

SymPoly jack_polynomial(const Scalar& nu, const Partition& lam, int N) {
  if (static_cast<int>(lam.size()) > N)
    throw std::invalid_argument("partition longer than variable count");
  const int d = partition_weight(lam);
  std::vector<Partition> basis = partitions_of_max_len(d, N);
  // Descending lexicographic refines dominance at fixed weight, so the
  // operator is triangular along this order.
  std::sort(basis.begin(), basis.end(),
            [](const Partition& a, const Partition& b) { return a > b; });

  const Scalar elam = cs_eigenvalue(nu, lam, N);
  SymPoly out = sym_zero(N, d);
  std::vector<std::pair<Scalar, SymPoly>> images;  // (c_rho, cs_apply(m_rho))
  auto image_of = [&](const Partition& mu) {
    SymPoly m = sym_zero(N, d);
    sym_add(m, mu, Scalar(1));
    return cs_apply(nu, m);
  };
  for (const Partition& mu : basis) {
    Scalar c(0);
    if (mu == lam) {
      c = Scalar(1);
    } else {
      Scalar rhs(0);
      for (const auto& [crho, img] : images) rhs += crho * img.coefficient(mu);
      if (rhs == Scalar(0)) continue;
      Scalar den = elam - cs_eigenvalue(nu, mu, N);
      if (den == Scalar(0))
        throw std::runtime_error("oracle eigenvalue collision");
      c = rhs / den;
    }
    sym_add(out, mu, c);
    images.emplace_back(c, image_of(mu));
  }
  return out;
}

JackCompare jack_compare(const Scalar& nu, const std::vector<int>& n) {
  const int N = static_cast<int>(n.size());
  EigenResult res = build_eigenvector(nu, n);
  SymPoly p = poly_from_fock(nu, res.psi, N);
  Partition lam = n;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  SymPoly j = jack_polynomial(nu, lam, N);
  JackCompare out;
  out.ratio = p.coefficient(lam);
  out.match = (p == j * out.ratio);
  return out;
}

}  // namespace csanyon
