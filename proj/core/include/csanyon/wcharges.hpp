#pragma once

#include "csanyon/fock.hpp"
#include "csanyon/vertex.hpp"

namespace csanyon {

// Conserved charges in units u = 2*pi/L = 1. Infinite mode sums are
// materialized up to max_level: omitted terms annihilate every state of
// level <= max_level, so the truncation is exact on those sectors.
//
//   W1   = Q
//   W2   = Q^2/2 + sum_{m>0} b_{-m} b_m
//   W3   = (1/3) Q^3 + 2 sum_{m>0} b_{-m} Q b_m
//          + sum_{0<p<=q} c_{pq} (b_{-p-q} b_p b_q + b_{-p} b_{-q} b_{p+q})
//          - Q/12,   c_{pq} = 2 - delta_{pq}
//   C    = sum_{m>0} m b_{-m} b_m
//   Wnu1 = nu Q
//   Wnu2 = W2 + ((nu^2-1)/2) Q^2
//   Wnu3 = W3 + 2(nu-1) Q W2 + (1/3)(nu-1)^2(nu+2) Q^3 + ((1-nu^3)/12) Q
//   H2   = Wnu2
//   H3   = nu Wnu3 + (1-nu^2) C
enum class ChargeKind { W1, W2, W3, C, Wnu1, Wnu2, Wnu3, H2, H3 };

NormalOrderedOp make_operator(ChargeKind kind, const Scalar& nu, int max_level);

// gamma = 2 nu^2 (nu^2 - 1) in u^2.
Scalar gamma_factor(const Scalar& nu);

// H2 eta(n) = (sum_j P_j) eta(n), exactly.
bool check_h2_eigen(const Scalar& nu, const std::vector<int>& n);

// The H3 ladder identity, exactly:
//   H3 eta(n) = E(n) eta(n) - gamma sum_{j<l} sum_{k>=1} k eta(n + k(e_j-e_l))
// where E(n) = sum_j P_j^2. The k-sum terminates because the support filter
// is monotone in k.
FockVector h3_ladder_rhs(const Scalar& nu, const std::vector<int>& n);
bool check_h3_ladder(const Scalar& nu, const std::vector<int>& n);

}  // namespace csanyon
