#pragma once

#include <map>
#include <utility>
#include <vector>

#include "csanyon/vertex.hpp"
#include "csanyon/wcharges.hpp"

namespace csanyon {

// Raising offset: mu[{j,l}] = k > 0 moves k units of momentum from row l to
// row j (0-based, j < l). Zero entries are never stored.
using MuOffset = std::map<std::pair<int, int>, int>;

std::vector<int> shift_momenta(const std::vector<int>& n, const MuOffset& mu);
int mu_total(const MuOffset& mu);

// Exact spectral gap E(n + mu) - E(n), closed form
//   sum_j ( 2 sum_{l>j} mu_{jl} [n_j - n_l + (l-j) nu^2]
//           + [sum_{l<j} mu_{lj} - sum_{l>j} mu_{jl}]^2 ).
Scalar gap(const Scalar& nu, const std::vector<int>& n, const MuOffset& mu);

// E(n) = sum_j P_j^2 in units of (2*pi/L)^2.
Scalar eigenvalue(const Scalar& nu, const std::vector<int>& n);

// Gauged spectrum: sum_j [n_j - mu_g + (nu^2/2)(N+1-2j)]^2.
Scalar eigenvalue_gauged(const Scalar& nu, const std::vector<int>& n,
                         long mu_g);

struct AlphaEntry {
  MuOffset mu;
  Scalar value;
};

// Coefficients of the eigenvector ansatz Psi = sum_mu alpha(mu) eta(n+mu):
//   alpha(0) = 1,
//   alpha(mu) = (gamma / gap(mu)) sum_{j<l} sum_{k=1..mu_jl} k alpha(mu - k E_jl),
// evaluated in increasing |mu| order, with alpha forced to 0 whenever
// eta(n+mu) vanishes exactly. Requires exact nu and n1 >= ... >= nN >= 0.
// Enumeration is bounded by per-column caps (see gap positivity); the bound
// is certified a posteriori by build_eigenvector's zero-residual check.
// Returns the nonzero entries in traversal order.
std::vector<AlphaEntry> solve_coefficients(const Scalar& nu,
                                           const std::vector<int>& n);

struct EigenResult {
  Scalar nu;
  std::vector<int> n;
  Scalar energy;
  std::vector<AlphaEntry> alpha;
  FockVector psi;
  bool certified = false;
};

// Assembles Psi and certifies apply_op(H3, Psi) == E(n) Psi exactly; throws
// std::runtime_error on certification failure (which would mean the cap or
// the recursion is unsound, never a rounding artifact).
EigenResult build_eigenvector(const Scalar& nu, const std::vector<int>& n);

struct DualityResult {
  bool is_eigen = false;
  Scalar e_found;   // eigenvalue extracted by exact proportionality
  Scalar e_closed;  // closed-form prediction, reported for comparison
  bool match = false;
};

// Builds Psi at the dual coupling -1/nu and applies the nu-coupling H3 to
// it. is_eigen is an exact statement; e_found is trusted, e_closed is the
// closed-form value
//   -nu^2 sum Pt_j^2 - 2(nu^2+1) N sum Pt_j + E0(N)
//   E0(Q) = ((nu^2+1)/(6 nu^2))
//           (4(4nu^4-3nu^3-4nu^2-9nu-5)Q^2 - 3nu^4+2nu^3+5nu^2-2nu-3) Q
// (Pt = momenta at coupling -1/nu) whose disagreement is surfaced via
// `match`, never asserted.
DualityResult duality_check(const Scalar& nu, const std::vector<int>& n);

}  // namespace csanyon
