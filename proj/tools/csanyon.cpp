// csanyon: exact Calogero-Sutherland / anyon toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csanyon/corr.hpp"
#include "csanyon/serialize.hpp"
#include "csanyon/solver.hpp"
#include "csanyon/sympoly.hpp"
#include "csanyon/verify.hpp"
#include "csanyon/vertex.hpp"
#include "csanyon/wavefunction.hpp"
#include "csanyon/wcharges.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace csanyon;

constexpr double kTwoPi = 6.283185307179586476925287;

// --output target; empty path means stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << text;
}

Scalar parse_nu(const std::string& nu2) {
  Rat v = rat_from_string(nu2);
  if (v <= 0) throw std::invalid_argument("nu^2 must be positive");
  return Scalar::sqrt_rational(v);
}

// "p/q" or a decimal literal.
double parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return rat_from_string(s).get_d();
  std::size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return d;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& tok : split_commas(s)) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + s);
    }
    if (pos != tok.size()) throw std::invalid_argument("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (int v : parse_int_list(s)) out.push_back(v);
  return out;
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& tok : split_commas(s)) out.push_back(parse_real(tok));
  return out;
}

// The solver wants n1 >= ... >= nN >= 0.
std::vector<int> parse_ccc(const std::string& s) {
  std::vector<int> n = parse_int_list(s);
  if (n.empty()) throw std::invalid_argument("empty momentum list");
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0 || (i + 1 < n.size() && n[i] < n[i + 1]))
      throw std::invalid_argument(
          "n must be weakly decreasing nonnegative integers");
  }
  return n;
}

json scalar_obj(const Scalar& c) { return json::parse(scalar_to_json(c)); }

struct SpectrumOpts {
  std::string nu2, output;
  int N = 1;
  int max_degree = 0;
  long mu_g = 0;
  std::string L = "";
};

int run_spectrum(const SpectrumOpts& o) {
  Scalar nu = parse_nu(o.nu2);
  if (o.N < 1) throw std::invalid_argument("N must be >= 1");
  if (o.max_degree < 0) throw std::invalid_argument("max-degree must be >= 0");
  double L = o.L.empty() ? kTwoPi : parse_real(o.L);
  if (L <= 0) throw std::invalid_argument("L must be positive");
  double u = kTwoPi / L;

  json doc;
  doc["nu2"] = rat_to_string((nu * nu).rational());
  doc["N"] = o.N;
  doc["mu_g"] = o.mu_g;
  doc["L"] = L;
  json levels = json::array();
  for (int d = 0; d <= o.max_degree; ++d) {
    for (const Partition& lam : partitions_of_max_len(d, o.N)) {
      std::vector<int> n(lam);
      n.resize(o.N, 0);
      Scalar e = eigenvalue(nu, n);
      Scalar eg = eigenvalue_gauged(nu, n, o.mu_g);
      json row;
      row["degree"] = d;
      row["n"] = n;
      json ps = json::array();
      json psf = json::array();
      for (const Scalar& p : anyon_momenta(nu, n)) {
        ps.push_back(rat_to_string(p.rational()));
        psf.push_back(p.to_complex().real() * u);
      }
      row["P"] = ps;
      row["E"] = rat_to_string(e.rational());
      row["E_gauged"] = rat_to_string(eg.rational());
      row["P_scaled"] = psf;
      row["E_scaled"] = e.to_complex().real() * u * u;
      row["E_gauged_scaled"] = eg.to_complex().real() * u * u;
      levels.push_back(row);
    }
  }
  doc["levels"] = levels;
  emit(o.output, doc.dump(2) + "\n");
  return 0;
}

struct EigenOpts {
  std::string nu2, n, output, eval_csv;
  long mu_g = 0;
  std::string L = "";
  int points = 20;
};

int run_eigen(const EigenOpts& o) {
  Scalar nu = parse_nu(o.nu2);
  std::vector<int> n = parse_ccc(o.n);
  EigenResult res = build_eigenvector(nu, n);
  emit(o.output, eigen_to_json(res));
  if (!o.eval_csv.empty()) {
    if (o.points < 1) throw std::invalid_argument("points must be >= 1");
    double L = o.L.empty() ? kTwoPi : parse_real(o.L);
    if (L <= 0) throw std::invalid_argument("L must be positive");
    WaveFunctionSpec spec = assemble_eigenfunction(res, o.mu_g, L);
    auto pts = random_admissible_points(static_cast<int>(n.size()), L,
                                        o.points, 0x5eedULL);
    emit(o.eval_csv, wf_eval_csv(spec, pts));
  }
  return res.certified ? 0 : 1;
}

struct JackOpts {
  std::string nu2, n, output;
};

int run_jack(const JackOpts& o) {
  Scalar nu = parse_nu(o.nu2);
  std::vector<int> n = parse_ccc(o.n);
  int N = static_cast<int>(n.size());
  EigenResult res = build_eigenvector(nu, n);
  SymPoly assembled = poly_from_fock(nu, res.psi, N);
  Partition lam(n);
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  SymPoly jack = jack_polynomial(nu, lam, N);
  JackCompare cmp = jack_compare(nu, n);

  json doc;
  doc["nu2"] = rat_to_string((nu * nu).rational());
  doc["n"] = n;
  doc["match"] = cmp.match;
  doc["ratio"] = scalar_obj(cmp.ratio);
  doc["eigen_poly"] = json::parse(sympoly_to_json(assembled));
  doc["jack_poly"] = json::parse(sympoly_to_json(jack));
  emit(o.output, doc.dump(2) + "\n");
  return cmp.match ? 0 : 1;
}

struct DualityOpts {
  std::string nu2, n, output;
};

int run_duality(const DualityOpts& o) {
  Scalar nu = parse_nu(o.nu2);
  std::vector<int> n = parse_ccc(o.n);
  DualityResult d = duality_check(nu, n);
  json doc;
  doc["nu2"] = rat_to_string((nu * nu).rational());
  doc["n"] = n;
  doc["is_eigen"] = d.is_eigen;
  doc["e_found"] = scalar_obj(d.e_found);
  doc["e_closed"] = scalar_obj(d.e_closed);
  doc["match"] = d.match;
  emit(o.output, doc.dump(2) + "\n");
  return d.is_eigen ? 0 : 1;
}

struct CorrOpts {
  std::string nu0, charges, x, eps, output;
  long w1 = 0, w2 = 0;
  std::string L = "";
  int sweep = 0;
};

int run_corr(const CorrOpts& o) {
  CorrSpec base;
  base.L = o.L.empty() ? kTwoPi : parse_real(o.L);
  base.nu0 = parse_real(o.nu0);
  base.charges = parse_long_list(o.charges);
  base.x = parse_real_list(o.x);
  base.eps = parse_real_list(o.eps);
  base.w1 = o.w1;
  base.w2 = o.w2;
  if (base.eps.size() == 1 && base.x.size() > 1)
    base.eps.assign(base.x.size(), base.eps[0]);
  if (base.x.size() != base.charges.size() ||
      base.eps.size() != base.charges.size())
    throw std::invalid_argument("charges, x, eps must have equal lengths");

  std::vector<CorrSpec> rows;
  if (o.sweep <= 1) {
    rows.push_back(base);
  } else {
    // Sweep the first insertion point across (-0.45 L, 0.45 L).
    double lo = -0.45 * base.L, hi = 0.45 * base.L;
    for (int i = 0; i < o.sweep; ++i) {
      CorrSpec s = base;
      s.x[0] = lo + (hi - lo) * i / (o.sweep - 1);
      rows.push_back(s);
    }
  }
  emit(o.output, corr_csv(rows));
  return 0;
}

struct VerifyOpts {
  std::string suite = "all";
  std::string output;
};

int run_verify(const VerifyOpts& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  std::vector<Suite> suites = run_suites(names);
  emit(o.output, render_report(suites));
  for (const Suite& s : suites)
    for (const Check& c : s.checks)
      if (!c.pass) return 1;
  return 0;
}

struct OpOpts {
  std::string kind, nu2 = "1", output;
  int max_level = 6;
};

int run_op(const OpOpts& o) {
  static const std::map<std::string, ChargeKind> kinds = {
      {"w1", ChargeKind::W1},     {"w2", ChargeKind::W2},
      {"w3", ChargeKind::W3},     {"c", ChargeKind::C},
      {"wnu1", ChargeKind::Wnu1}, {"wnu2", ChargeKind::Wnu2},
      {"wnu3", ChargeKind::Wnu3}, {"h2", ChargeKind::H2},
      {"h3", ChargeKind::H3}};
  auto it = kinds.find(o.kind);
  if (it == kinds.end()) throw std::invalid_argument("unknown kind: " + o.kind);
  if (o.max_level < 0) throw std::invalid_argument("max-level must be >= 0");
  Scalar nu = parse_nu(o.nu2);
  emit(o.output, op_to_json(make_operator(it->second, nu, o.max_level)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact second-quantized Calogero-Sutherland / anyon toolkit"};
  app.require_subcommand(1);

  SpectrumOpts so;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "enumerate eigenvalues by degree");
  spectrum->add_option("--nu2", so.nu2, "coupling nu^2, rational p/q")
      ->required();
  spectrum->add_option("--N", so.N, "number of anyons")->required();
  spectrum->add_option("--max-degree", so.max_degree, "largest total degree");
  spectrum->add_option("--mu-g", so.mu_g, "gauge integer");
  spectrum->add_option("--L", so.L, "circle circumference (default 2*pi)");
  spectrum->add_option("-o,--output", so.output, "write to file");

  EigenOpts eo;
  CLI::App* eigen =
      app.add_subcommand("eigen", "build one certified eigenvector");
  eigen->add_option("--nu2", eo.nu2, "coupling nu^2, rational p/q")->required();
  eigen->add_option("--n", eo.n, "momenta n1,n2,... (weakly decreasing)")
      ->required();
  eigen->add_option("--mu-g", eo.mu_g, "gauge integer");
  eigen->add_option("--L", eo.L, "circle circumference (default 2*pi)");
  eigen->add_option("--eval-csv", eo.eval_csv,
                    "also sample the wavefunction to this CSV");
  eigen->add_option("--points", eo.points, "sample count for --eval-csv");
  eigen->add_option("-o,--output", eo.output, "write to file");

  JackOpts jo;
  CLI::App* jack =
      app.add_subcommand("jack", "compare the eigen-polynomial to Jack");
  jack->add_option("--nu2", jo.nu2, "coupling nu^2, rational p/q")->required();
  jack->add_option("--n", jo.n, "momenta n1,n2,...")->required();
  jack->add_option("-o,--output", jo.output, "write to file");

  DualityOpts duo;
  CLI::App* duality =
      app.add_subcommand("duality", "apply H at coupling nu to the -1/nu state");
  duality->add_option("--nu2", duo.nu2, "coupling nu^2, rational p/q")
      ->required();
  duality->add_option("--n", duo.n, "momenta n1,n2,...")->required();
  duality->add_option("-o,--output", duo.output, "write to file");

  CorrOpts co;
  CLI::App* corr =
      app.add_subcommand("corr", "regularized vertex correlation values");
  corr->add_option("--nu0", co.nu0, "base charge unit nu0 > 0")->required();
  corr->add_option("--charges", co.charges, "integer charges mu1,mu2,...")
      ->required();
  corr->add_option("--x", co.x, "positions x1,x2,...")->required();
  corr->add_option("--eps", co.eps, "regulators (one value broadcasts)")
      ->required();
  corr->add_option("--w1", co.w1, "left vacuum charge");
  corr->add_option("--w2", co.w2, "right vacuum charge");
  corr->add_option("--L", co.L, "circle circumference (default 2*pi)");
  corr->add_option("--sweep", co.sweep, "sweep x1 over this many points");
  corr->add_option("-o,--output", co.output, "write to file");

  VerifyOpts vo;
  CLI::App* verify =
      app.add_subcommand("verify", "run the internal consistency suites");
  verify->add_option("--suite", vo.suite,
                     "fock|vertex|wcharges|solver|sympoly|corr|all");
  verify->add_option("-o,--output", vo.output, "write to file");

  OpOpts oo;
  CLI::App* op =
      app.add_subcommand("op", "dump a conserved charge in normal order");
  op->add_option("--kind", oo.kind, "w1|w2|w3|c|wnu1|wnu2|wnu3|h2|h3")
      ->required();
  op->add_option("--nu2", oo.nu2, "coupling nu^2, rational p/q");
  op->add_option("--max-level", oo.max_level, "truncation level");
  op->add_option("-o,--output", oo.output, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(so);
    if (eigen->parsed()) return run_eigen(eo);
    if (jack->parsed()) return run_jack(jo);
    if (duality->parsed()) return run_duality(duo);
    if (corr->parsed()) return run_corr(co);
    if (verify->parsed()) return run_verify(vo);
    if (op->parsed()) return run_op(oo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
