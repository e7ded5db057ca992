#pragma once

#include <string>
#include <vector>

#include "csanyon/corr.hpp"
#include "csanyon/fock.hpp"
#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/wavefunction.hpp"

namespace csanyon {

// JSON documents: fixed key order, 2-space indent, canonical "p/q" rational
// strings, quadratic scalars as {"a","b","r"} meaning a + b*sqrt(r). Exact
// coefficients only; numeric-mode payloads are rejected. Every *_from_json
// inverts its writer bit for bit.

// {"a","b","r"} object for one exact scalar.
std::string scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const std::string& text);

// {"charge","level","basis" (full sector, ascending partition order),
//  "entries" ([{"state","re","nu_coeff"}], nonzero only), "radicand"}.
// Requires a nonzero homogeneous vector.
std::string fock_to_json(const FockVector& v);
FockVector fock_from_json(const std::string& text);

// Top-level array of {"coeff","creations","qPower","annihilations"}.
std::string op_to_json(const NormalOrderedOp& op);
NormalOrderedOp op_from_json(const std::string& text);

// {"nu2","nu","n","E","alpha" ([{"mu" as 1-based [j,l,k] triples,"value"}]),
//  "psi","certified"}.
std::string eigen_to_json(const EigenResult& r);
EigenResult eigen_from_json(const std::string& text);

// {"N","degree","terms" ([{"partition","coeff"}], ascending partition order)}.
std::string sympoly_to_json(const SymPoly& p);
SymPoly sympoly_from_json(const std::string& text);

// CSV tables, "%.17g" floats, one header row.

// Columns x1..xN, re_psi, im_psi, residual (relative PDE residual).
std::string wf_eval_csv(const WaveFunctionSpec& spec,
                        const std::vector<std::vector<double>>& points);

// Columns x1..xN, eps1..epsN, re_c, im_c; one row per configuration. All
// rows must share the same N.
std::string corr_csv(const std::vector<CorrSpec>& rows);

}  // namespace csanyon
