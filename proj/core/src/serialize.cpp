#include "csanyon/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace csanyon {

namespace {

using json = nlohmann::ordered_json;

json scalar_to_obj(const Scalar& c) {
  if (!c.is_exact())
    throw std::invalid_argument("serialize: numeric coefficients not supported");
  json o;
  o["a"] = rat_to_string(c.a());
  o["b"] = rat_to_string(c.b());
  o["r"] = rat_to_string(c.r());
  return o;
}

Scalar scalar_from_obj(const json& o) {
  const Rat a = rat_from_string(o.at("a").get<std::string>());
  const Rat b = rat_from_string(o.at("b").get<std::string>());
  const Rat r = rat_from_string(o.at("r").get<std::string>());
  if (b == 0) return Scalar(a);
  return Scalar(a, b, r);
}

json partition_to_arr(const Partition& p) {
  json a = json::array();
  for (int x : p) a.push_back(x);
  return a;
}

Partition partition_from_arr(const json& a) {
  Partition p;
  for (const auto& x : a) p.push_back(x.get<int>());
  return p;
}

// Common radicand of all coefficients (0 if everything is rational).
Rat common_radicand(const FockVector& v) {
  Rat r = 0;
  for (const auto& [s, c] : v.entries()) {
    if (!c.is_exact())
      throw std::invalid_argument("serialize: numeric coefficients not supported");
    if (c.r() != 0) {
      if (r != 0 && r != c.r())
        throw std::invalid_argument("serialize: mixed radicands in one vector");
      r = c.r();
    }
  }
  return r;
}

json fock_to_obj(const FockVector& v) {
  const auto charge = v.homogeneous_charge();
  const auto level = v.homogeneous_level();
  if (v.is_zero() || !charge || !level)
    throw std::invalid_argument("serialize: need a nonzero homogeneous vector");
  json o;
  o["charge"] = *charge;
  o["level"] = *level;
  json basis = json::array();
  for (const Partition& lam : partitions_of(*level)) basis.push_back(partition_to_arr(lam));
  o["basis"] = std::move(basis);
  json entries = json::array();
  for (const Partition& lam : partitions_of(*level)) {
    const Scalar c = v.coefficient(FockState{*charge, lam});
    if (c.is_zero()) continue;
    json e;
    e["state"] = partition_to_arr(lam);
    e["re"] = rat_to_string(c.a());
    e["nu_coeff"] = rat_to_string(c.b());
    entries.push_back(std::move(e));
  }
  o["entries"] = std::move(entries);
  o["radicand"] = rat_to_string(common_radicand(v));
  return o;
}

FockVector fock_from_obj(const json& o) {
  const int charge = o.at("charge").get<int>();
  const Rat r = rat_from_string(o.at("radicand").get<std::string>());
  FockVector v;
  for (const auto& e : o.at("entries")) {
    const Partition lam = partition_from_arr(e.at("state"));
    const Rat a = rat_from_string(e.at("re").get<std::string>());
    const Rat b = rat_from_string(e.at("nu_coeff").get<std::string>());
    const Scalar c = (b == 0) ? Scalar(a) : Scalar(a, b, r);
    v.add(FockState{charge, lam}, c);
  }
  if (v.is_zero()) throw std::invalid_argument("serialize: empty vector document");
  return v;
}

std::string dump(const json& o) { return o.dump(2) + "\n"; }

void append_g17(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

std::string scalar_to_json(const Scalar& c) { return dump(scalar_to_obj(c)); }

Scalar scalar_from_json(const std::string& text) {
  return scalar_from_obj(json::parse(text));
}

std::string fock_to_json(const FockVector& v) { return dump(fock_to_obj(v)); }

FockVector fock_from_json(const std::string& text) {
  return fock_from_obj(json::parse(text));
}

std::string op_to_json(const NormalOrderedOp& op) {
  json arr = json::array();
  for (const OpTerm& t : op.terms) {
    json o;
    o["coeff"] = scalar_to_obj(t.coeff);
    o["creations"] = partition_to_arr(t.creations);
    o["qPower"] = t.q_power;
    o["annihilations"] = partition_to_arr(t.annihilations);
    arr.push_back(std::move(o));
  }
  return dump(arr);
}

NormalOrderedOp op_from_json(const std::string& text) {
  NormalOrderedOp op;
  for (const auto& o : json::parse(text)) {
    OpTerm t;
    t.coeff = scalar_from_obj(o.at("coeff"));
    t.creations = partition_from_arr(o.at("creations"));
    t.q_power = o.at("qPower").get<int>();
    t.annihilations = partition_from_arr(o.at("annihilations"));
    op.terms.push_back(std::move(t));
  }
  return op;
}

std::string eigen_to_json(const EigenResult& r) {
  json o;
  o["nu2"] = rat_to_string((r.nu * r.nu).rational());
  o["nu"] = scalar_to_obj(r.nu);
  json n = json::array();
  for (int x : r.n) n.push_back(x);
  o["n"] = std::move(n);
  o["E"] = scalar_to_obj(r.energy);
  json alpha = json::array();
  for (const AlphaEntry& e : r.alpha) {
    json a;
    json mu = json::array();
    for (const auto& [jl, k] : e.mu)
      mu.push_back(json::array({jl.first + 1, jl.second + 1, k}));
    a["mu"] = std::move(mu);
    a["value"] = scalar_to_obj(e.value);
    alpha.push_back(std::move(a));
  }
  o["alpha"] = std::move(alpha);
  o["psi"] = fock_to_obj(r.psi);
  o["certified"] = r.certified;
  return dump(o);
}

EigenResult eigen_from_json(const std::string& text) {
  const json o = json::parse(text);
  EigenResult r;
  r.nu = scalar_from_obj(o.at("nu"));
  for (const auto& x : o.at("n")) r.n.push_back(x.get<int>());
  r.energy = scalar_from_obj(o.at("E"));
  for (const auto& a : o.at("alpha")) {
    AlphaEntry e;
    for (const auto& t : a.at("mu"))
      e.mu[{t.at(0).get<int>() - 1, t.at(1).get<int>() - 1}] = t.at(2).get<int>();
    e.value = scalar_from_obj(a.at("value"));
    r.alpha.push_back(std::move(e));
  }
  r.psi = fock_from_obj(o.at("psi"));
  r.certified = o.at("certified").get<bool>();
  return r;
}

std::string sympoly_to_json(const SymPoly& p) {
  json o;
  o["N"] = p.N;
  o["degree"] = p.degree;
  json terms = json::array();
  for (const auto& [lam, c] : p.coeffs) {
    json t;
    t["partition"] = partition_to_arr(lam);
    t["coeff"] = scalar_to_obj(c);
    terms.push_back(std::move(t));
  }
  o["terms"] = std::move(terms);
  return dump(o);
}

SymPoly sympoly_from_json(const std::string& text) {
  const json o = json::parse(text);
  SymPoly p = sym_zero(o.at("N").get<int>(), o.at("degree").get<int>());
  for (const auto& t : o.at("terms"))
    sym_add(p, partition_from_arr(t.at("partition")), scalar_from_obj(t.at("coeff")));
  return p;
}

std::string wf_eval_csv(const WaveFunctionSpec& spec,
                        const std::vector<std::vector<double>>& points) {
  std::string out;
  for (int j = 1; j <= spec.N; ++j) out += "x" + std::to_string(j) + ",";
  out += "re_psi,im_psi,residual\n";
  for (const auto& x : points) {
    const PointEval ev = wf_point(spec, x);
    for (double v : x) {
      append_g17(out, v);
      out += ',';
    }
    append_g17(out, ev.psi.real());
    out += ',';
    append_g17(out, ev.psi.imag());
    out += ',';
    append_g17(out, ev.pde_residual);
    out += '\n';
  }
  return out;
}

std::string corr_csv(const std::vector<CorrSpec>& rows) {
  if (rows.empty()) throw std::invalid_argument("corr_csv: no rows");
  const int N = rows.front().size();
  std::string out;
  for (int j = 1; j <= N; ++j) out += "x" + std::to_string(j) + ",";
  for (int j = 1; j <= N; ++j) out += "eps" + std::to_string(j) + ",";
  out += "re_c,im_c\n";
  for (const CorrSpec& s : rows) {
    if (s.size() != N) throw std::invalid_argument("corr_csv: ragged rows");
    const std::complex<double> c = corr_eval(s);
    for (double v : s.x) {
      append_g17(out, v);
      out += ',';
    }
    for (double v : s.eps) {
      append_g17(out, v);
      out += ',';
    }
    append_g17(out, c.real());
    out += ',';
    append_g17(out, c.imag());
    out += '\n';
  }
  return out;
}

}  // namespace csanyon
