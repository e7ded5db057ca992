#include "csanyon/wcharges.hpp"

#include <algorithm>
#include <utility>

namespace csanyon {
namespace {

void add_term(std::vector<OpTerm>& ts, Scalar c, std::vector<int> cr, int q,
              std::vector<int> an) {
  if (c == Scalar(0)) return;
  ts.push_back(OpTerm{std::move(c), std::move(cr), q, std::move(an)});
}

void append_w2(std::vector<OpTerm>& ts, const Scalar& pref, int M) {
  add_term(ts, pref * Scalar(Rat(1, 2)), {}, 2, {});
  for (int m = 1; m <= M; ++m) add_term(ts, pref, {m}, 0, {m});
}

void append_c(std::vector<OpTerm>& ts, const Scalar& pref, int M) {
  for (int m = 1; m <= M; ++m) add_term(ts, pref * Scalar(m), {m}, 0, {m});
}

// Shared cubic-in-b part of the third charge; the remaining pieces are pure
// powers of Q and b_{-m} Q b_m bilinears whose coefficients depend on nu.
void append_cubics(std::vector<OpTerm>& ts, const Scalar& pref, int M) {
  for (int p = 1; p <= M; ++p)
    for (int q = p; p + q <= M; ++q) {
      Scalar c = pref * Scalar(p == q ? 1 : 2);
      add_term(ts, c, {p + q}, 0, {p, q});
      add_term(ts, c, {p, q}, 0, {p + q});
    }
}

// nu-deformed third charge, coefficients already collapsed:
//   Wnu3 = (nu^3/3) Q^3 + 2 nu sum_m b_{-m} Q b_m + cubics - (nu^3/12) Q.
// At nu = 1 this is W3.
void append_wnu3(std::vector<OpTerm>& ts, const Scalar& pref, const Scalar& nu,
                 int M) {
  const Scalar nu3 = nu.pow(3);
  add_term(ts, pref * nu3 * Scalar(Rat(1, 3)), {}, 3, {});
  for (int m = 1; m <= M; ++m)
    add_term(ts, pref * Scalar(2) * nu, {m}, 1, {m});
  append_cubics(ts, pref, M);
  add_term(ts, pref * nu3 * Scalar(Rat(-1, 12)), {}, 1, {});
}

}  // namespace

NormalOrderedOp make_operator(ChargeKind kind, const Scalar& nu,
                              int max_level) {
  const int M = max_level;
  const Scalar one(1);
  std::vector<OpTerm> ts;
  switch (kind) {
    case ChargeKind::W1:
      add_term(ts, one, {}, 1, {});
      break;
    case ChargeKind::W2:
      append_w2(ts, one, M);
      break;
    case ChargeKind::W3:
      append_wnu3(ts, one, one, M);
      break;
    case ChargeKind::C:
      append_c(ts, one, M);
      break;
    case ChargeKind::Wnu1:
      add_term(ts, nu, {}, 1, {});
      break;
    case ChargeKind::Wnu2:
    case ChargeKind::H2:
      append_w2(ts, one, M);
      add_term(ts, (nu * nu - one) * Scalar(Rat(1, 2)), {}, 2, {});
      break;
    case ChargeKind::Wnu3:
      append_wnu3(ts, one, nu, M);
      break;
    case ChargeKind::H3:
      append_wnu3(ts, nu, nu, M);
      append_c(ts, one - nu * nu, M);
      break;
  }
  return NormalOrderedOp{std::move(ts)};
}

Scalar gamma_factor(const Scalar& nu) {
  const Scalar nu2 = nu * nu;
  return Scalar(2) * nu2 * (nu2 - Scalar(1));
}

namespace {

int eta_level(const std::vector<int>& n) {
  int s = 0;
  for (int v : n) s += v;
  return std::max(0, s);
}

}  // namespace

bool check_h2_eigen(const Scalar& nu, const std::vector<int>& n) {
  FockVector eta = build_eta(nu, n).vec;
  NormalOrderedOp h2 = make_operator(ChargeKind::H2, nu, eta_level(n));
  Scalar e(0);
  for (const Scalar& p : anyon_momenta(nu, n)) e = e + p;
  return apply_op(h2, eta) == eta * e;
}

FockVector h3_ladder_rhs(const Scalar& nu, const std::vector<int>& n) {
  const int N = static_cast<int>(n.size());
  Scalar e(0);
  {
    std::vector<Scalar> mom = anyon_momenta(nu, n);
    for (const Scalar& p : mom) e = e + p * p;
  }
  FockVector rhs = build_eta(nu, n).vec * e;
  const Scalar g = gamma_factor(nu);
  for (int j = 0; j < N; ++j)
    for (int l = j + 1; l < N; ++l)
      for (int k = 1;; ++k) {
        std::vector<int> m = n;
        m[j] += k;
        m[l] -= k;
        // The support conditions are affine non-increasing in k, so the
        // first failure is a valid cutoff for the whole tail.
        if (!support_filter(m)) break;
        rhs -= build_eta(nu, m).vec * (g * Scalar(k));
      }
  return rhs;
}

bool check_h3_ladder(const Scalar& nu, const std::vector<int>& n) {
  FockVector eta = build_eta(nu, n).vec;
  NormalOrderedOp h3 = make_operator(ChargeKind::H3, nu, eta_level(n));
  return apply_op(h3, eta) == h3_ladder_rhs(nu, n);
}

}  // namespace csanyon
