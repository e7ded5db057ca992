#include "csanyon/vertex.hpp"

#include <functional>

namespace csanyon {

namespace {

// nu^{sum m_j} / prod_j (m_j! j^{m_j}) b_{-j}^{m_j} summed over all boson
// clouds of total weight t, appended to base parts. Clouds are enumerated as
// partitions of t (m_j = multiplicity of j).
void add_clouds(const Scalar& nu, int t, const Scalar& coeff,
                const FockState& base, FockVector& out) {
  for (const auto& cloud : partitions_of(t)) {
    Rat denom(1);
    for (const auto& [j, mj] : part_multiplicities(cloud)) {
      for (int i = 1; i <= mj; ++i) denom *= Rat(i);   // m_j!
      for (int i = 0; i < mj; ++i) denom *= Rat(j);    // j^{m_j}
    }
    Scalar c = coeff * nu.pow(static_cast<long>(cloud.size())) *
               Scalar(Rat(1) / denom);
    FockState s = base;
    s.parts.insert(s.parts.end(), cloud.begin(), cloud.end());
    std::sort(s.parts.begin(), s.parts.end(), std::greater<int>());
    out.add(s, c);
  }
}

// Binomial count of ways to mark c of k identical parts for removal.
Rat choose(int k, int c) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k),
               static_cast<unsigned long>(c));
  return Rat(b);
}

}  // namespace

FockVector vertex_mode(const Scalar& nu, int p, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.entries()) {
    auto mults = part_multiplicities(s.parts);
    std::vector<std::pair<int, int>> distinct(mults.begin(), mults.end());
    // Removal counts per distinct part value, weighted by binomials: marking
    // which copies carry delta = 1 yields identical terms.
    std::function<void(size_t, int, const Scalar&, Partition&)> rec =
        [&](size_t idx, int removed, const Scalar& acc, Partition& kept) {
          if (idx == distinct.size()) {
            int t = p + removed;
            if (t < 0) return;
            FockState base{s.charge + 1, kept};
            add_clouds(nu, t, acc, base, out);
            return;
          }
          auto [q, k] = distinct[idx];
          for (int r = 0; r <= k; ++r) {
            Scalar w = acc * Scalar(choose(k, r)) * (-nu).pow(r);
            size_t old = kept.size();
            for (int i = 0; i < k - r; ++i) kept.push_back(q);
            rec(idx + 1, removed + r * q, w, kept);
            kept.resize(old);
          }
        };
    Partition kept;
    rec(0, 0, c, kept);
  }
  return out;
}

EtaState build_eta(const Scalar& nu, const std::vector<int>& n) {
  FockVector v = FockVector::vacuum(0);
  for (auto it = n.rbegin(); it != n.rend(); ++it)
    v = vertex_mode(nu, *it, v);
  return EtaState{nu, n, v};
}

bool support_filter(const std::vector<int>& n) {
  int N = static_cast<int>(n.size());
  long total = 0;
  for (int x : n) total += x;
  if (total < 0) return false;
  for (int l = 0; l < N; ++l) {
    long acc = n[l];
    long w = 1;
    for (int j = l + 1; j < N; ++j) {
      acc += w * n[j];
      w *= 2;
    }
    if (acc < 0) return false;
  }
  return true;
}

std::vector<Scalar> anyon_momenta(const Scalar& nu, const std::vector<int>& n) {
  int N = static_cast<int>(n.size());
  Scalar nu2 = nu * nu;
  std::vector<Scalar> out;
  out.reserve(n.size());
  for (int j = 1; j <= N; ++j)
    out.push_back(Scalar(Rat(n[j - 1])) +
                  nu2 * Scalar(Rat(2 * (N - j) + 1, 2)));
  return out;
}

}  // namespace csanyon
