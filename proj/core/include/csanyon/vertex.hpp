#pragma once

#include <vector>

#include "csanyon/fock.hpp"

namespace csanyon {

// One Fourier mode of the anyon vertex operator at coupling nu: raises the
// charge by 1 and the level by exactly p. On a basis state with parts
// (q_1..q_n) the image sums over part removals (delta_i) and boson clouds
// (m_j) with sum_j j*m_j = p + sum_i delta_i q_i:
//   (-nu)^{sum delta} prod_i b_{-q_i}^{1-delta_i}
//                     prod_j (nu^{m_j} / (m_j! j^{m_j})) b_{-j}^{m_j}.
// Negative effective momentum contributes nothing; modes with p < -level
// annihilate the vector.
FockVector vertex_mode(const Scalar& nu, int p, const FockVector& v);

struct EtaState {
  Scalar nu;
  std::vector<int> n;  // mode labels, leftmost applied last
  FockVector vec;
};

// eta(n) = phi(n_1) ... phi(n_N) |0>, rightmost mode applied first. Lives in
// charge N at level sum(n); the zero vector when the modes annihilate.
EtaState build_eta(const Scalar& nu, const std::vector<int>& n);

// Necessary support condition: sum n_j >= 0 and, for every l,
// n_l + sum_{j>l} 2^{j-1-l} n_j >= 0. False guarantees eta(n) = 0; true does
// not guarantee eta(n) != 0.
bool support_filter(const std::vector<int>& n);

// Exact anyon momenta P_j = n_j + nu^2 (N - j + 1/2), j = 1..N, in units of
// 2*pi/L.
std::vector<Scalar> anyon_momenta(const Scalar& nu, const std::vector<int>& n);

}  // namespace csanyon
