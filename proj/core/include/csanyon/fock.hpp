#pragma once

#include <map>
#include <optional>
#include <vector>

#include "csanyon/partition.hpp"
#include "csanyon/scalar.hpp"

namespace csanyon {

// Basis vector b_{-p1} ... b_{-pk} R^charge |0>, parts = (p1 >= ... >= pk).
// Mode commutators: [b_m, b_n] = m delta_{m+n,0}; b_m |0> = 0 for m >= 0.
struct FockState {
  int charge = 0;
  Partition parts;

  int level() const { return partition_weight(parts); }
  bool operator<(const FockState& o) const {
    if (charge != o.charge) return charge < o.charge;
    return partition_less(parts, o.parts);
  }
  bool operator==(const FockState& o) const {
    return charge == o.charge && parts == o.parts;
  }
};

// Finite linear combination of basis states with exact (or numeric)
// coefficients. Zero coefficients are pruned eagerly, so is_zero() and
// operator== are exact statements.
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const FockState& s, const Scalar& c = Scalar(1));
  static FockVector vacuum(int charge = 0);

  const std::map<FockState, Scalar>& entries() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }
  size_t size() const { return coef_.size(); }

  Scalar coefficient(const FockState& s) const;
  void add(const FockState& s, const Scalar& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& c);
  friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
  friend FockVector operator-(FockVector x, const FockVector& y) { return x -= y; }
  friend FockVector operator*(const Scalar& c, FockVector v) { return v *= c; }
  friend FockVector operator*(FockVector v, const Scalar& c) { return v *= c; }

  bool operator==(const FockVector& o) const { return coef_ == o.coef_; }

  // Charge/level when every entry agrees; nullopt for the zero vector or a
  // mixed-sector vector.
  std::optional<int> homogeneous_charge() const;
  std::optional<int> homogeneous_level() const;

 private:
  std::map<FockState, Scalar> coef_;
};

// Apply the mode b_m (m != 0): m < 0 prepends a part, m > 0 removes one and
// multiplies by m * multiplicity. m = 0 is rejected; the zero mode acts as
// the charge eigenvalue and is handled by operator terms.
FockVector apply_mode(int m, const FockVector& v);

// Squared norm of a basis state: prod_m m^{k_m} k_m! over multiplicities.
Scalar state_norm2(const FockState& s);

// Hermitian inner product, antilinear in the left slot. Distinct basis
// states (including distinct charges) are orthogonal.
Scalar inner(const FockVector& u, const FockVector& v);

// Normal-ordered operator term
//   coeff * b_{-c1} ... b_{-ck} Q^qPower b_{a1} ... b_{al}
// (annihilators act first, then the charge factor, then creators).
struct OpTerm {
  Scalar coeff;
  Partition creations;
  int q_power = 0;
  Partition annihilations;
};

struct NormalOrderedOp {
  std::vector<OpTerm> terms;
  // Every term here conserves level; ops built elsewhere may not.
  bool conserves_level() const;
};

FockVector apply_op(const NormalOrderedOp& op, const FockVector& v);

// Matrix of a level-conserving operator on the (charge, level) sector in the
// canonical partition basis: column j holds the image of basis state j.
// Throws if the operator moves weight out of the sector.
std::vector<std::vector<Scalar>> sector_matrix(const NormalOrderedOp& op,
                                               int charge, int level);

// Gram matrix of the sector basis (diagonal, exact).
std::vector<std::vector<Scalar>> sector_gram(int charge, int level);

}  // namespace csanyon
