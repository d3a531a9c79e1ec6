#pragma once

// Configuration, suite runners, and deterministic report emission.  Every
// runner returns a SuiteReport of uniform items so the front end can
// serialize them identically; wall-clock time is deliberately kept out of
// the serialized form so that equal configurations produce byte-identical
// reports.

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qmb/boundary.hpp"
#include "qmb/dilation.hpp"

namespace qmb {

struct RunConfig {
  double q = 0.5;
  int N = 16;
  int N_rho = 48;
  int pad = 4;
  int grid = 16;
  int samples = 20;
  int deg = 3;
  int matrix_size = 2;
  int m = 3;
  uint64_t seed = 42;
  double tol = 1e-10;
  double slack = 0.05;

  // The four-slot family is the memory hog; cap its truncation.
  int fock_N() const { return std::min(10, N); }

  void validate() const {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("config: q must lie in (0,1)");
    if (pad >= N) throw std::invalid_argument("config: pad must be < N");
    if (pad < 2) throw std::invalid_argument("config: pad must be >= 2");
    if (tol <= 0.0) throw std::invalid_argument("config: tol must be > 0");
    if (grid < 1) throw std::invalid_argument("config: grid must be >= 1");
    if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    if (deg < 1) throw std::invalid_argument("config: deg must be >= 1");
    if (matrix_size < 1) throw std::invalid_argument("config: matrix_size must be >= 1");
    if (m < 1) throw std::invalid_argument("config: m must be >= 1");
    if (N_rho < 2) throw std::invalid_argument("config: N_rho must be >= 2");
    if (slack <= 0.0) throw std::invalid_argument("config: slack must be > 0");
  }
};

inline nlohmann::ordered_json config_to_json(const RunConfig& c) {
  return nlohmann::ordered_json{
      {"q", c.q},       {"N", c.N},           {"N_rho", c.N_rho},
      {"pad", c.pad},   {"grid", c.grid},     {"samples", c.samples},
      {"deg", c.deg},   {"matrix_size", c.matrix_size},
      {"m", c.m},       {"seed", c.seed},     {"tol", c.tol},
      {"slack", c.slack}};
}

struct SuiteItem {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;
  bool pass = true;
};

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json params;
  std::vector<SuiteItem> items;
  // Measured by the front end and reported on the console only, so that
  // equal configurations keep producing byte-identical serialized reports.
  double wall_seconds = 0.0;
  bool verdict() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string id, double lhs, double rhs, double defect, bool pass) {
    items.push_back({std::move(id), lhs, rhs, defect, pass});
  }
};

inline nlohmann::ordered_json suite_to_json(const SuiteReport& r) {
  nlohmann::ordered_json per_item = nlohmann::ordered_json::array();
  for (const auto& it : r.items)
    per_item.push_back({{"id", it.id},
                        {"lhs", it.lhs},
                        {"rhs", it.rhs},
                        {"defect", it.defect},
                        {"pass", it.pass}});
  return nlohmann::ordered_json{{"check", r.suite},
                                {"params", r.params},
                                {"per_item", per_item},
                                {"verdict", r.verdict() ? "pass" : "fail"}};
}

// ---------------------------------------------------------------- suites

inline SuiteReport run_relations_suite(const RunConfig& cfg, const std::string& only = "") {
  SuiteReport rep{"relations", config_to_json(cfg), {}};
  for (const std::string name : {"polC(1)", "polC(2)", "polC(3)", "csu2", "polMat2"}) {
    if (!only.empty() && name != only) continue;
    const auto* A = build_preset(name);
    for (const auto& rel : relation_polys(A)) {
      const bool ok = is_zero(rel.poly);
      rep.add("rel:" + name + ":" + rel.label, ok ? 0.0 : 1.0, 0.0, ok ? 0.0 : 1.0, ok);
    }
    const ConfluenceReport c = confluence_probe(A, 1000, cfg.seed);
    rep.add("confluence:" + name, double(c.failures), 0.0, double(c.failures),
            c.failures == 0);
  }
  if (rep.items.empty()) throw std::invalid_argument("relations: unknown preset '" + only + "'");
  return rep;
}

namespace detail {

struct FamilySpec {
  std::string family;
  std::vector<double> angles;
  bool four_slot = false;
};

inline const std::vector<FamilySpec>& family_table() {
  static const std::vector<FamilySpec> t = {
      {"piF", {}, true},          {"tau", {0.7}},        {"nu1", {0.7}},
      {"nu2", {0.7}},             {"rho", {0.7, 1.9}},   {"theta", {0.7}},
      {"gamma", {0.7, 1.9}},      {"polC-fock", {}},     {"polC-onedim", {0.7}},
      {"csu2-xi", {0.7}},         {"csu2-pi", {0.7}}};
  return t;
}

}  // namespace detail

inline SuiteReport run_reps_suite(const RunConfig& cfg) {
  SuiteReport rep{"reps", config_to_json(cfg), {}};
  for (const auto& fs : detail::family_table()) {
    const int N = fs.four_slot ? cfg.fock_N() : cfg.N;
    const Representation r = build_rep(fs.family, fs.angles, N, cfg.q);
    const ResidualReport rr = relation_residuals(r, cfg.pad, cfg.samples, cfg.seed);
    rep.add("residual:" + fs.family, rr.max_residual, cfg.tol, rr.max_residual,
            rr.pass(cfg.tol));
  }
  const CoherentReport co = coherent_check(build_rep("tau", {0.7}, cfg.N, cfg.q));
  rep.add("coherent:tau", co.max_residual, 1e-12, co.max_residual, co.pass(1e-12));
  const SpectrumReport sp =
      joint_spectrum_check(build_rep("rho", {0.7, 1.9}, cfg.N, cfg.q), std::min(10, cfg.N - 1));
  const double spd = std::max({sp.max_pair_defect, sp.max_offdiag, sp.commutator_norm,
                               sp.normality});
  rep.add("spectrum:pairs", spd, 1e-12, spd, sp.pass(1e-12));
  const GramReport g = gram_equivalence(build_rep("tau", {0.7}, cfg.N, cfg.q),
                                        build_induced_fock(0.7, cfg.N, cfg.q), 2);
  rep.add("gram:tau-induced", g.max_defect, 1e-8, g.max_defect, g.pass(1e-8));
  return rep;
}

inline SuiteReport run_homs_suite(const RunConfig& cfg) {
  SuiteReport rep{"homs", config_to_json(cfg), {}};
  for (const std::string name : {"D", "Pi"}) {
    const HomCheckReport h = check_hom(build_hom(name));
    rep.add("hom:" + name, double(h.failures), 0.0, double(h.failures), h.pass());
  }
  for (const auto& it : theta_gamma_bridge().items)
    rep.add("bridge:" + it.generator, it.exact ? 0.0 : 1.0, 0.0, it.exact ? 0.0 : 1.0,
            it.exact);
  const ResidualReport rr =
      relation_residuals(build_induced_fock(0.7, std::min(cfg.N, 12), cfg.q), cfg.pad,
                         cfg.samples, cfg.seed);
  rep.add("residual:induced-fock", rr.max_residual, cfg.tol, rr.max_residual, rr.pass(cfg.tol));
  const ResidualReport rc =
      relation_residuals(build_induced_chi(0.7, 1.9, cfg.N, cfg.q), cfg.pad, cfg.samples,
                         cfg.seed);
  rep.add("residual:induced-chi", rc.max_residual, cfg.tol, rc.max_residual, rc.pass(cfg.tol));
  return rep;
}

inline SuiteReport run_boundary_suite(const RunConfig& cfg) {
  SuiteReport rep{"boundary", config_to_json(cfg), {}};
  const auto annih = [&](const Representation& r) {
    return annihilation_report(r, cfg.pad, cfg.samples, cfg.seed);
  };
  for (const auto& fam : {std::string("rho"), std::string("gamma")}) {
    const auto a = annih(build_rep(fam, {0.7, 1.9}, fam == "rho" ? cfg.N_rho : cfg.N, cfg.q));
    rep.add("annihilate:" + fam, a.max_residual, cfg.tol, a.max_residual,
            a.annihilates(cfg.tol));
  }
  const auto ac = annih(build_induced_chi(0.7, 1.9, cfg.N, cfg.q));
  rep.add("annihilate:induced-chi", ac.max_residual, cfg.tol, ac.max_residual,
          ac.annihilates(cfg.tol));
  for (const auto& fs : detail::family_table()) {
    if (fs.family != "piF" && fs.family != "tau" && fs.family != "nu1" &&
        fs.family != "nu2" && fs.family != "theta")
      continue;
    const int N = fs.four_slot ? cfg.fock_N() : cfg.N;
    const auto a = annih(build_rep(fs.family, fs.angles, N, cfg.q));
    rep.add("violate:" + fs.family, a.max_residual, 0.1, a.max_residual,
            a.max_residual >= 0.1);
  }
  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const OpPoly p = random_holomorphic_sample(rng, cfg.deg);
    const GammaBoundReport g = gamma_bound_refined(p, cfg.grid, cfg.N_rho, cfg.q, 1e-8);
    rep.add("gamma-bound:s" + std::to_string(s), g.gamma_max, g.quotient,
            std::max(0.0, g.gamma_max - g.quotient), g.pass(1e-8));
  }
  return rep;
}

inline SuiteReport run_isometry_suite(const RunConfig& cfg) {
  SuiteReport rep{"isometry", config_to_json(cfg), {}};
  const IsometryReport sc = isometry_check(cfg.samples, 1, cfg.deg, cfg.grid, cfg.fock_N(),
                                           cfg.N_rho, cfg.slack, cfg.q, cfg.seed);
  for (const auto& it : sc.items)
    rep.add("scalar:" + it.label, it.F, it.Q, it.defect, it.defect <= cfg.slack);
  const IsometryReport mx =
      isometry_check(std::max(1, cfg.samples / 4), cfg.matrix_size, cfg.deg, cfg.grid,
                     cfg.fock_N(), cfg.N_rho, cfg.slack, cfg.q, cfg.seed + 1);
  for (const auto& it : mx.items)
    rep.add("matrix:" + it.label, it.F, it.Q, it.defect, it.defect <= cfg.slack);
  return rep;
}

// The norm table of the isometry suite as CSV.
inline std::string isometry_csv(const SuiteReport& rep) {
  std::ostringstream os;
  os << "sample,F,Q,defect\n";
  os.precision(17);
  for (const auto& it : rep.items)
    os << it.id << "," << it.lhs << "," << it.rhs << "," << it.defect << "\n";
  return os.str();
}

inline SuiteReport run_dilation_suite(const RunConfig& cfg) {
  SuiteReport rep{"dilation", config_to_json(cfg), {}};
  Mat half(1, 1);
  half(0, 0) = 0.5;
  const std::vector<std::pair<std::string, Mat>> inputs = {
      {"scalar", half}, {"CS", fm_CS(8, cfg.q).mat}};
  for (const auto& [label, t] : inputs)
    for (int m = 1; m <= cfg.m; ++m) {
      const FiniteDilation fd = egervary_unitary(t, m);
      rep.add("unitary:" + label + ":m" + std::to_string(m), unitarity_defect(fd.U), 1e-12,
              unitarity_defect(fd.U), unitarity_defect(fd.U) <= 1e-12);
      double worst = 0.0;
      for (int n = 0; n <= m; ++n) worst = std::max(worst, power_defect(fd, n));
      rep.add("power:" + label + ":m" + std::to_string(m), worst, 1e-12, worst,
              worst <= 1e-12);
    }
  for (int step : {1, 2}) {
    const CompressionReport c = psi_compression_check(
        step, 0.7, cfg.m, std::min(cfg.deg, cfg.m), cfg.samples, cfg.seed, 8, cfg.q);
    const std::string base = "psi" + std::to_string(step);
    rep.add(base + ":words", c.max_word_defect, 1e-10, c.max_word_defect,
            c.max_word_defect <= 1e-10);
    rep.add(base + ":relations", c.relations.max_residual, cfg.tol,
            c.relations.max_residual, c.relations.pass(cfg.tol));
    rep.add(base + ":starred", c.starred_defect, 0.1, c.starred_defect,
            c.starred_defect >= 0.1);
  }
  return rep;
}

inline SuiteReport run_spectrum_suite(const RunConfig& cfg) {
  SuiteReport rep{"spectrum", config_to_json(cfg), {}};
  for (const auto& [p1, p2] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {0.7, 1.9}, {2.3, 4.1}}) {
    const SpectrumReport sp = joint_spectrum_check(build_rep("rho", {p1, p2}, cfg.N, cfg.q),
                                                   std::min(10, cfg.N - 1));
    std::ostringstream id;
    id << "pairs:" << p1 << "," << p2;
    const double eig = std::max(sp.max_pair_defect, sp.max_offdiag);
    const double nrm = std::max(sp.commutator_norm, sp.normality);
    rep.add(id.str(), eig, 1e-12, eig, eig <= 1e-12);
    rep.add("normal:" + id.str().substr(6), nrm, 1e-12, nrm, nrm <= 1e-12);
  }
  for (int K : {5, 10, 20}) {
    const CFormulaReport c = c_formula_check(std::max(cfg.N, K + 2), cfg.q, K);
    rep.add("cformula:K" + std::to_string(K), std::max(c.c_residual, c.d_residual),
            std::max(c.c_bound, c.d_bound) + 1e-12, std::max(c.c_residual, c.d_residual),
            c.pass);
  }
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"relations", "reps", "homs", "boundary", "isometry", "dilation", "spectrum"};
}

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg,
                             const std::string& preset_filter = "") {
  if (name == "relations") return run_relations_suite(cfg, preset_filter);
  if (name == "reps") return run_reps_suite(cfg);
  if (name == "homs") return run_homs_suite(cfg);
  if (name == "boundary") return run_boundary_suite(cfg);
  if (name == "isometry") return run_isometry_suite(cfg);
  if (name == "dilation") return run_dilation_suite(cfg);
  if (name == "spectrum") return run_spectrum_suite(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qmb
