#include "csanyon/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace csanyon {

FockVector FockVector::basis(const FockState& s, const Scalar& c) {
  FockVector v;
  v.add(s, c);
  return v;
}

FockVector FockVector::vacuum(int charge) {
  return basis(FockState{charge, {}});
}

Scalar FockVector::coefficient(const FockState& s) const {
  auto it = coef_.find(s);
  return it == coef_.end() ? Scalar(0) : it->second;
}

void FockVector::add(const FockState& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coef_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coef_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.coef_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.coef_) add(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coef_.clear();
    return *this;
  }
  for (auto& [s, v] : coef_) v *= c;
  return *this;
}

std::optional<int> FockVector::homogeneous_charge() const {
  if (coef_.empty()) return std::nullopt;
  int ch = coef_.begin()->first.charge;
  for (const auto& [s, c] : coef_)
    if (s.charge != ch) return std::nullopt;
  return ch;
}

std::optional<int> FockVector::homogeneous_level() const {
  if (coef_.empty()) return std::nullopt;
  int lv = coef_.begin()->first.level();
  for (const auto& [s, c] : coef_)
    if (s.level() != lv) return std::nullopt;
  return lv;
}

FockVector apply_mode(int m, const FockVector& v) {
  if (m == 0)
    throw std::invalid_argument("b_0 is the charge; use an operator term");
  FockVector out;
  for (const auto& [s, c] : v.entries()) {
    if (m < 0) {
      FockState t{s.charge, s.parts};
      t.parts.push_back(-m);
      std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
      out.add(t, c);
    } else {
      auto it = std::find(s.parts.begin(), s.parts.end(), m);
      if (it == s.parts.end()) continue;
      int mult = static_cast<int>(std::count(s.parts.begin(), s.parts.end(), m));
      FockState t{s.charge, s.parts};
      t.parts.erase(std::find(t.parts.begin(), t.parts.end(), m));
      out.add(t, c * Scalar(static_cast<long>(m) * mult));
    }
  }
  return out;
}

Scalar state_norm2(const FockState& s) {
  Rat n2(1);
  for (const auto& [part, mult] : part_multiplicities(s.parts)) {
    for (int i = 1; i <= mult; ++i) n2 *= Rat(part) * Rat(i);
  }
  return Scalar(n2);
}

Scalar inner(const FockVector& u, const FockVector& v) {
  // Basis states are orthogonal; walk the sparser map.
  Scalar acc(0);
  bool numeric = false;
  for (const auto& [s, cu] : u.entries()) {
    if (!cu.is_exact()) numeric = true;
    Scalar cv = v.coefficient(s);
    if (cv.is_zero()) continue;
    if (!numeric && !cv.is_exact()) numeric = true;
    acc += cu.conj() * cv * state_norm2(s);
  }
  (void)numeric;
  return acc;
}

bool NormalOrderedOp::conserves_level() const {
  for (const auto& t : terms)
    if (partition_weight(t.creations) != partition_weight(t.annihilations))
      return false;
  return true;
}

namespace {

// One term applied to one basis state; accumulates into out.
void apply_term(const OpTerm& term, const FockState& s, const Scalar& c,
                FockVector& out) {
  Scalar coeff = c * term.coeff;
  if (coeff.is_zero()) return;
  FockState cur = s;
  for (int a : term.annihilations) {
    auto it = std::find(cur.parts.begin(), cur.parts.end(), a);
    if (it == cur.parts.end()) return;
    int mult = static_cast<int>(std::count(cur.parts.begin(), cur.parts.end(), a));
    coeff *= Scalar(static_cast<long>(a) * mult);
    cur.parts.erase(it);
  }
  if (term.q_power > 0) {
    if (cur.charge == 0) return;
    coeff *= Scalar(static_cast<long>(cur.charge)).pow(term.q_power);
  }
  for (int p : term.creations) cur.parts.push_back(p);
  std::sort(cur.parts.begin(), cur.parts.end(), std::greater<int>());
  out.add(cur, coeff);
}

}  // namespace

FockVector apply_op(const NormalOrderedOp& op, const FockVector& v) {
  FockVector out;
  for (const auto& term : op.terms)
    for (const auto& [s, c] : v.entries()) apply_term(term, s, c, out);
  return out;
}

std::vector<std::vector<Scalar>> sector_matrix(const NormalOrderedOp& op,
                                               int charge, int level) {
  if (!op.conserves_level())
    throw std::invalid_argument("operator does not conserve level");
  auto basis = partitions_of(level);
  size_t n = basis.size();
  std::map<Partition, size_t, bool (*)(const Partition&, const Partition&)>
      index(partition_less);
  for (size_t i = 0; i < n; ++i) index[basis[i]] = i;

  std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t j = 0; j < n; ++j) {
    FockVector img = apply_op(op, FockVector::basis({charge, basis[j]}));
    for (const auto& [s, c] : img.entries()) {
      auto it = index.find(s.parts);
      if (s.charge != charge || it == index.end())
        throw std::logic_error("image left the sector");
      mat[it->second][j] = c;
    }
  }
  return mat;
}

std::vector<std::vector<Scalar>> sector_gram(int charge, int level) {
  auto basis = partitions_of(level);
  size_t n = basis.size();
  std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) g[i][i] = state_norm2({charge, basis[i]});
  return g;
}

}  // namespace csanyon
