#pragma once

#include <map>
#include <vector>

#include "csanyon/fock.hpp"
#include "csanyon/partition.hpp"
#include "csanyon/scalar.hpp"

namespace csanyon {

// Homogeneous symmetric polynomial in N variables, monomial-symmetric basis:
// coeffs[lambda] multiplies m_lambda. Keys carry no zero parts and at most N
// parts; every key has weight == degree.
struct SymPoly {
  int N = 0;
  int degree = 0;
  std::map<Partition, Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Scalar coefficient(const Partition& lam) const;
  bool operator==(const SymPoly& o) const;
};

SymPoly sym_zero(int N, int degree);
void sym_add(SymPoly& p, const Partition& lam, const Scalar& c);
SymPoly operator+(const SymPoly& a, const SymPoly& b);
SymPoly operator*(const SymPoly& p, const Scalar& c);

// Full orbit expansion: exponent vectors of length N (all distinct
// permutations of each padded key).
std::map<std::vector<int>, Scalar> sym_monomials(const SymPoly& p);

// Inverse of sym_monomials; throws std::logic_error if the raw map is not
// symmetric (verified by exact re-expansion).
SymPoly sym_collect(int N, int degree,
                    const std::map<std::vector<int>, Scalar>& raw);

SymPoly sym_mul(const SymPoly& a, const SymPoly& b);

// Power sum p_k = m_(k); products of these give p_lambda.
SymPoly power_sum_poly(int k, int N);

// Generalized binomial t(t-1)...(t-k+1)/k!.
Scalar gen_binom(const Scalar& t, int k);

// Eigen-polynomial of eta(n) by direct mode-sum enumeration:
//   P = sum' prod binom(nu^2, mu_{jj'}) (-1)^mu
//            prod binom(-nu^2, m_{jl}) (-1)^m z_l^{m_{jl}}
// over all mu_{jj'} (j' < j), m_{jl} >= 0 with, for every row j,
//   sum_{j'<j} mu_{jj'} - sum_{j'>j} mu_{j'j} + sum_l m_{jl} = n_j.
// Homogeneous of degree sum(n); finite by row-wise budget descent.
SymPoly poly_from_eta(const Scalar& nu, const std::vector<int>& n);

// Independent route: basis state (charge, lambda) contributes
// delta_{charge,N} nu^{len(lambda)} p_lambda with the vector coefficient
// conjugated. Exact mode only.
SymPoly poly_from_fock(const Scalar& nu, const FockVector& v, int N);

// Trigonometric many-body operator in z-variables,
//   sum_j D_j^2 + nu^2 sum_{j<k} ((z_j+z_k)/(z_j-z_k))(D_j - D_k),
// D_j = z_j d/dz_j, realized exactly on monomial orbits. Acts within the
// homogeneous degree; this is the independent oracle (no Fock machinery).
SymPoly cs_apply(const Scalar& nu, const SymPoly& p);

// Diagonal value on the dominant monomial:
// sum_i lambda_i^2 + nu^2 lambda_i (N+1-2i).
Scalar cs_eigenvalue(const Scalar& nu, const Partition& lam, int N);

// Monic-in-m_lambda eigenpolynomial of cs_apply by dominance-triangular
// back-substitution (Jack polynomial at parameter 1/nu^2). Throws on an
// eigenvalue collision with a nonzero coupling (does not occur for the
// tested rational nu^2).
SymPoly jack_polynomial(const Scalar& nu, const Partition& lam, int N);

struct JackCompare {
  Scalar ratio;        // P_{n;nu} = ratio * Jack, exact
  bool match = false;  // proportionality holds exactly
};

// Compares the assembled eigen-polynomial of build_eigenvector(nu, n)
// against the oracle Jack polynomial for the partition n.
JackCompare jack_compare(const Scalar& nu, const std::vector<int>& n);

}  // namespace csanyon
