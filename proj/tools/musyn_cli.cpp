// Command-line front end: parse problem instances, dispatch to the library,
// emit machine-readable verdicts.
//
// Exit codes: 0 solvable / pass / value computed, 1 unsolvable / fail,
// 2 out-of-scope or precondition/parse error, 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "musyn/construct.hpp"
#include "musyn/deciders.hpp"
#include "musyn/gamma.hpp"
#include "musyn/tetra.hpp"
#include "musyn/verify.hpp"

using json = nlohmann::ordered_json;
using namespace musyn;

namespace {

struct Config {
  int grid = tols::circle_grid;
  double tol = 1e-8;
  std::string format = "json";
};

cplx parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2)
    return {j[0].get<double>(), j[1].get<double>()};
  throw DomainError("expected a number or [re, im] pair, got " + j.dump());
}

Mat2 parse_mat2(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw DomainError("expected a 2x2 row-major matrix, got " + j.dump());
  return {parse_complex(j[0][0]), parse_complex(j[0][1]),
          parse_complex(j[1][0]), parse_complex(j[1][1])};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json verdict_json(const Verdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["margin"] = v.margin;
  out["criterion_value"] = v.criterion_value;
  out["threshold"] = v.threshold;
  out["detail"] = v.detail;
  out["tolerances"] = {{"membership", tols::membership},
                       {"boundary_band", tols::boundary_band},
                       {"circle_refine", tols::circle_refine}};
  return out;
}

int verdict_exit(const Verdict& v) {
  switch (v.status) {
    case Status::Solvable:
    case Status::SolvableUniquely: return 0;
    case Status::Unsolvable: return 1;
    case Status::OutOfTheoremScope: return 2;
  }
  return 2;
}

json rational_json(const RationalFunction& f) {
  json num = json::array(), den = json::array();
  for (const cplx& c : f.num().coeffs()) num.push_back(complex_json(c));
  for (const cplx& c : f.den().coeffs()) den.push_back(complex_json(c));
  return {{"num", num}, {"den", den}};
}

RationalFunction parse_rational(const json& j) {
  std::vector<cplx> num, den;
  for (const auto& c : j.at("num")) num.push_back(parse_complex(c));
  for (const auto& c : j.at("den")) den.push_back(parse_complex(c));
  return {Polynomial(num), Polynomial(den)};
}

// Comma-separated real list from an inline flag, e.g. "0,0.5" or
// "0,0,0.5,0" for complex components.
std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

GammaPoint parse_gamma_inline(const std::string& s) {
  const auto v = parse_reals(s);
  if (v.size() == 2) return {cplx{v[0], 0.0}, cplx{v[1], 0.0}};
  if (v.size() == 4) return {cplx{v[0], v[1]}, cplx{v[2], v[3]}};
  throw DomainError("gamma point: expected 's,p' or 's_re,s_im,p_re,p_im'");
}

cplx parse_complex_inline(const std::string& s) {
  const auto v = parse_reals(s);
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw DomainError("complex flag: expected 're' or 're,im'");
}

struct Outcome {
  int exit_code;
  json result;
};

Outcome run_problem(const std::string& kind, const json& payload,
                    const Config& cfg) {
  if (kind == "snp2" || kind == "construct") {
    SnpInstance inst{parse_complex(payload.at("lambda1")),
                     parse_complex(payload.at("lambda2")),
                     parse_mat2(payload.at("W1")), parse_mat2(payload.at("W2"))};
    if (kind == "snp2") {
      const Verdict v = decide_snp_2x2(inst);
      return {verdict_exit(v), verdict_json(v)};
    }
    const SnpConstruction c = construct_snp_interpolant(inst);
    json out;
    out["omega0"] = complex_json(c.geodesic.omega0);
    json zeros = json::array();
    for (const cplx& z : c.geodesic.p.zeros()) zeros.push_back(complex_json(z));
    out["blaschke"] = {{"zeros", zeros},
                       {"constant", complex_json(c.geodesic.p.unimodular_constant())}};
    out["s"] = rational_json(c.s);
    out["p"] = rational_json(c.p);
    out["reparam"] = rational_json(c.reparam);
    out["extremal"] = c.extremal;
    out["lift"] = {{"tag", c.lift.tag == LiftTag::SimilarityLifted
                              ? "SimilarityLifted"
                              : "CompanionForm"}};
    json entries = json::array();
    for (const auto& e : c.lift.entries) entries.push_back(rational_json(e));
    out["lift"]["entries"] = entries;
    out["detail"] = c.detail;
    return {0, out};
  }
  if (kind == "snp_necessary") {
    std::vector<cplx> nodes;
    std::vector<Mat2> targets;
    for (const auto& n : payload.at("nodes")) nodes.push_back(parse_complex(n));
    for (const auto& t : payload.at("targets")) targets.push_back(parse_mat2(t));
    const int grid = payload.value("alpha_grid", 512);
    const NecessaryResult r = necessary_condition_snp(nodes, targets, grid);
    json out;
    out["pass"] = r.pass;
    out["min_eigenvalue"] = r.min_eigenvalue;
    out["worst_alpha"] = complex_json(r.worst_alpha);
    out["note"] = "failure certifies unsolvability; passing certifies nothing";
    return {r.pass ? 0 : 1, out};
  }
  if (kind == "scf") {
    const Verdict v = decide_scf_2x2(
        {parse_mat2(payload.at("V0")), parse_mat2(payload.at("V1"))});
    return {verdict_exit(v), verdict_json(v)};
  }
  if (kind == "tetra") {
    const Verdict v = decide_tetra_schwarz({parse_complex(payload.at("lambda0")),
                                            parse_complex(payload.at("zeta")),
                                            parse_complex(payload.at("a")),
                                            parse_complex(payload.at("b")),
                                            parse_complex(payload.at("p"))});
    return {verdict_exit(v), verdict_json(v)};
  }
  if (kind == "mucf") {
    const Verdict v = decide_mu_cf(
        {parse_complex(payload.at("zeta")), parse_mat2(payload.at("V1"))});
    return {verdict_exit(v), verdict_json(v)};
  }
  if (kind == "mu") {
    const MuResult r = mu_diag2(parse_mat2(payload.at("matrix")), cfg.tol);
    json out;
    out["value"] = r.value;
    out["bracket"] = json::array({r.lo, r.hi});
    out["method"] = r.method == MuResult::Method::ZeroCase ? "ZeroCase" : "Bisection";
    return {0, out};
  }
  if (kind == "dist") {
    const GammaPoint z1{parse_complex(payload.at("z1")[0]),
                        parse_complex(payload.at("z1")[1])};
    const GammaPoint z2{parse_complex(payload.at("z2")[0]),
                        parse_complex(payload.at("z2")[1])};
    const DistanceResult r = caratheodory_G(z1, z2, cfg.grid);
    json out;
    out["value"] = r.value;
    out["omega"] = complex_json(r.omega);
    out["note"] = "Caratheodory distance on G; equals the Lempert function";
    return {0, out};
  }
  if (kind == "member") {
    const std::string domain = payload.at("domain").get<std::string>();
    const bool closed = payload.value("closed", false);
    const auto& pt = payload.at("point");
    bool inside;
    double boundary_gap = 0.0;
    if (domain == "gamma") {
      const GammaPoint z{parse_complex(pt[0]), parse_complex(pt[1])};
      inside = closed ? in_closed_Gamma(z) : in_open_G(z);
      const auto [r1, r2] = char_roots(z.s, z.p);
      boundary_gap = 1.0 - std::max(std::abs(r1), std::abs(r2));
    } else if (domain == "tetra") {
      const TetraPoint x{parse_complex(pt[0]), parse_complex(pt[1]),
                         parse_complex(pt[2])};
      inside = in_tetrablock(x, closed);
    } else {
      throw DomainError("member: domain must be 'gamma' or 'tetra'");
    }
    json out;
    out["inside"] = inside;
    out["closed"] = closed;
    if (domain == "gamma") {
      out["boundary_gap"] = boundary_gap;
      if (std::abs(boundary_gap) < tols::boundary_band) out["boundary"] = true;
    }
    return {inside ? 0 : 1, out};
  }
  if (kind == "verify") {
    std::vector<std::pair<cplx, GammaPoint>> gconstraints;
    std::vector<std::pair<cplx, Mat2>> mconstraints;
    const std::string target = payload.value("target", "gamma");
    GridSpec grid;
    if (payload.contains("grid")) {
      grid.radial_n = payload["grid"][0].get<int>();
      grid.angular_n = payload["grid"][1].get<int>();
    }
    VerificationReport rep{};
    if (target == "gamma") {
      RationalFunction s, p;
      if (payload.contains("witness")) {
        const auto& w = payload["witness"];
        const std::string name = w.at("name").get<std::string>();
        if (name == "illconditioned")
          std::tie(s, p) = witness_illconditioned(parse_complex(w.at("param")));
        else if (name == "threepoint")
          std::tie(s, p) = witness_threepoint(w.at("param").get<double>());
        else
          throw DomainError("verify: unknown witness '" + name + "'");
      } else {
        s = parse_rational(payload.at("s"));
        p = parse_rational(payload.at("p"));
      }
      if (payload.contains("constraints"))
        for (const auto& c : payload["constraints"])
          gconstraints.push_back({parse_complex(c.at("lambda")),
                                  GammaPoint{parse_complex(c.at("value")[0]),
                                             parse_complex(c.at("value")[1])}});
      rep = verify_gamma_map(s, p, gconstraints, grid);
    } else if (target == "spectral") {
      MatrixInterpolant F;
      const auto& entries = payload.at("entries");
      for (int k = 0; k < 4; ++k) F.entries[k] = parse_rational(entries[k]);
      F.tag = LiftTag::SimilarityLifted;
      if (payload.contains("constraints"))
        for (const auto& c : payload["constraints"])
          mconstraints.push_back(
              {parse_complex(c.at("lambda")), parse_mat2(c.at("value"))});
      rep = verify_spectral_interpolant(F, mconstraints, grid);
    } else {
      throw DomainError("verify: target must be 'gamma' or 'spectral'");
    }
    json out;
    out["pass"] = rep.pass();
    out["max_spectral_radius_on_grid"] = rep.max_spectral_radius_on_grid;
    out["interpolation_residuals"] = rep.interpolation_residuals;
    out["grid"] = json::array({rep.grid.radial_n, rep.grid.angular_n});
    out["note"] = "sampling check: necessary only";
    return {rep.pass() ? 0 : 1, out};
  }
  throw DomainError("unknown problem kind '" + kind + "'");
}

void emit(const Outcome& o, const Config& cfg) {
  if (cfg.format == "text") {
    for (const auto& [k, v] : o.result.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
  } else {
    std::cout << o.result.dump(2) << "\n";
  }
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysable mu-synthesis instances: deciders, distances, "
               "constructions, verification"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--format", cfg.format, "json|text")->capture_default_str();
  app.add_option("--grid", cfg.grid, "circle grid size");
  app.add_option("--tol", cfg.tol, "bisection / verification tolerance");

  std::string input_file;
  std::string l0s, zetas, as, bs, ps, l1s, l2s, z1s, z2s, points, domain;
  std::string w1s, w2s, v0s, v1s, mats;
  bool closed = false;

  auto* decide = app.add_subcommand("decide", "run a solvability decider");
  decide->require_subcommand(1);

  auto* snp2 = decide->add_subcommand("snp2", "2-point 2x2 spectral Nevanlinna-Pick");
  snp2->add_option("--input", input_file);
  snp2->add_option("--lambda1", l1s);
  snp2->add_option("--lambda2", l2s);
  snp2->add_option("--w1", w1s);
  snp2->add_option("--w2", w2s);

  auto* scf = decide->add_subcommand("scf", "2x2 spectral Caratheodory-Fejer");
  scf->add_option("--input", input_file);
  scf->add_option("--v0", v0s);
  scf->add_option("--v1", v1s);

  auto* tetra = decide->add_subcommand("tetra", "tetrablock Schwarz lemma");
  tetra->add_option("--input", input_file);
  tetra->add_option("--lambda0", l0s);
  tetra->add_option("--zeta", zetas);
  tetra->add_option("--a", as);
  tetra->add_option("--b", bs);
  tetra->add_option("--p", ps);

  auto* mucf = decide->add_subcommand("mucf", "mu Caratheodory-Fejer");
  mucf->add_option("--input", input_file);
  mucf->add_option("--zeta", zetas);
  mucf->add_option("--v1", v1s);

  auto* nec = app.add_subcommand("check-necessary", "n-point necessary condition");
  nec->add_option("--input", input_file)->required();

  auto* con = app.add_subcommand("construct", "extremal interpolant construction");
  con->add_option("--input", input_file);
  con->add_option("--lambda1", l1s);
  con->add_option("--lambda2", l2s);
  con->add_option("--w1", w1s);
  con->add_option("--w2", w2s);

  auto* ver = app.add_subcommand("verify", "verify a candidate interpolant");
  ver->add_option("--input", input_file)->required();

  auto* mu = app.add_subcommand("mu", "structured singular value, Diag(2)");
  mu->add_option("--input", input_file);
  mu->add_option("--matrix", mats);

  auto* dist = app.add_subcommand("dist", "Caratheodory distance on G");
  dist->add_option("--input", input_file);
  dist->add_option("--z1", z1s);
  dist->add_option("--z2", z2s);

  auto* mem = app.add_subcommand("member", "domain membership");
  mem->require_subcommand(1);
  auto* memg = mem->add_subcommand("gamma");
  memg->add_option("--point", points);
  memg->add_flag("--closed", closed);
  memg->add_option("--input", input_file);
  auto* memt = mem->add_subcommand("tetra");
  memt->add_option("--point", points);
  memt->add_flag("--closed", closed);
  memt->add_option("--input", input_file);

  CLI11_PARSE(app, argc, argv);

  auto inline_complex = [](const std::string& s) {
    return complex_json(parse_complex_inline(s));
  };
  auto inline_mat = [](const std::string& s) { return json::parse(s); };

  try {
    std::string kind;
    json payload;
    if (!input_file.empty()) {
      const json j = load_input(input_file);
      kind = j.at("kind").get<std::string>();
      payload = j.at("payload");
      if (j.contains("config")) {
        const auto& c = j["config"];
        cfg.grid = c.value("grid", cfg.grid);
        cfg.tol = c.value("tol", cfg.tol);
        cfg.format = c.value("format", cfg.format);
      }
    } else if (snp2->parsed() || con->parsed()) {
      kind = snp2->parsed() ? "snp2" : "construct";
      payload = {{"lambda1", inline_complex(l1s)},
                 {"lambda2", inline_complex(l2s)},
                 {"W1", inline_mat(w1s)},
                 {"W2", inline_mat(w2s)}};
    } else if (scf->parsed()) {
      kind = "scf";
      payload = {{"V0", inline_mat(v0s)}, {"V1", inline_mat(v1s)}};
    } else if (tetra->parsed()) {
      kind = "tetra";
      payload = {{"lambda0", inline_complex(l0s)},
                 {"zeta", inline_complex(zetas)},
                 {"a", inline_complex(as)},
                 {"b", inline_complex(bs)},
                 {"p", inline_complex(ps)}};
    } else if (mucf->parsed()) {
      kind = "mucf";
      payload = {{"zeta", inline_complex(zetas)}, {"V1", inline_mat(v1s)}};
    } else if (mu->parsed()) {
      kind = "mu";
      payload = {{"matrix", inline_mat(mats)}};
    } else if (dist->parsed()) {
      kind = "dist";
      const GammaPoint z1 = parse_gamma_inline(z1s);
      const GammaPoint z2 = parse_gamma_inline(z2s);
      payload = {{"z1", json::array({complex_json(z1.s), complex_json(z1.p)})},
                 {"z2", json::array({complex_json(z2.s), complex_json(z2.p)})}};
    } else if (mem->parsed()) {
      kind = "member";
      const auto v = parse_reals(points);
      const bool gamma = memg->parsed();
      json pt = json::array();
      if (gamma) {
        const GammaPoint z = parse_gamma_inline(points);
        pt = {complex_json(z.s), complex_json(z.p)};
      } else {
        if (v.size() == 3)
          pt = {json(v[0]), json(v[1]), json(v[2])};
        else if (v.size() == 6)
          pt = {complex_json({v[0], v[1]}), complex_json({v[2], v[3]}),
                complex_json({v[4], v[5]})};
        else
          throw DomainError("tetra point: expected 3 or 6 comma-separated reals");
      }
      payload = {{"domain", gamma ? "gamma" : "tetra"},
                 {"point", pt},
                 {"closed", closed}};
    } else {
      throw DomainError("missing --input or inline flags");
    }

    const Outcome o = run_problem(kind, payload, cfg);
    emit(o, cfg);
    return o.exit_code;
  } catch (const InternalInconsistency& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  }
}
