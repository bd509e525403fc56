// Command-line front end: generation of example families, document
// validation, property verification suites, completeness audits and spectra.
// Reports are emitted as aligned text or as JSON with identical fields;
// fixed seeds make reruns byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "magtri/completeness.hpp"
#include "magtri/generators.hpp"
#include "magtri/io.hpp"
#include "magtri/operators.hpp"
#include "magtri/spectral.hpp"

using namespace magtri;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitUsage = 4;

struct CommonOptions {
  std::uint64_t seed = 0xC0FFEE;
  double tol_alg = 1e-13;
  double tol_eig = 1e-10;
  double tol_hol = 1e-9;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_csv = false) {
  cmd->add_option("--seed", opt.seed, "Seed for randomized checks");
  cmd->add_option("--tol-alg", opt.tol_alg, "Tolerance for algebraic identities")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-eig", opt.tol_eig, "Tolerance for eigenvalue comparisons")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-hol", opt.tol_hol, "Tolerance for holonomy-zero tests")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"text", "json", "csv"}
                                     : std::vector<std::string>{"text", "json"}));
  cmd->add_option("-o,--output", opt.output, "Write the report (or document) to a file");
}

void emit(const std::string& payload, const CommonOptions& opt) {
  if (opt.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << payload;
  }
}

Eigen::VectorXcd random_cochain(Index n, SplitMix64& rng) {
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = Cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return v;
}

GaugeFunction random_gauge(Index n, SplitMix64& rng) {
  GaugeFunction f(n);
  for (Index i = 0; i < n; ++i) f(i) = rng.uniform(-3, 3);
  return f;
}

double vec_max_abs(const Eigen::VectorXcd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  CommonOptions common;
  // book-like
  Index depth = 10;
  double beta = 1.0;
  std::string weights = "simple";
  // onedim
  std::string spheres;
  Index levels = 8;
  Index size_base = 1;
  Index size_step = 0;
  bool no_intra = false;
  std::string faces = "cross";
  // random
  Index vertices = 12;
  double edge_density = 0.3;
  double face_density = 0.5;
  double weight_min = 0.5;
  double weight_max = 2.0;
  double alpha_max = kPi;
  // shared
  bool sphere_pi = false;
};

int emit_generated(const MagneticTriangulation& mt, const CommonOptions& opt) {
  emit(to_document(mt), opt);
  std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
  double max_deg = 0.0;
  for (Index v = 0; v < mt.complex.vertex_count(); ++v)
    max_deg = std::max(max_deg, degree_vertex(mt.complex, v));
  info << "vertices " << mt.complex.vertex_count() << ", edges " << mt.complex.edge_count()
       << ", faces " << mt.complex.face_count() << ", max weighted degree " << max_deg << "\n";
  return kExitOk;
}

int run_generate_book(const GenerateOptions& opt) {
  BookLikeSpec spec;
  spec.depth = opt.depth;
  spec.beta = opt.beta;
  spec.beta_weights = opt.weights == "beta";
  auto fam = gen_book_like(spec);
  MagneticTriangulation mt{std::move(fam.complex), std::move(fam.alpha)};
  if (opt.sphere_pi) mt.alpha = potential_sphere_pi(mt.complex, fam.decomposition);
  return emit_generated(mt, opt.common);
}

int run_generate_onedim(const GenerateOptions& opt) {
  OneDimSpec spec;
  if (!opt.spheres.empty()) {
    std::stringstream ss(opt.spheres);
    std::string tok;
    while (std::getline(ss, tok, ','))
      spec.sphere_sizes.push_back(static_cast<Index>(std::stoll(tok)));
  } else {
    for (Index n = 0; n < opt.levels; ++n)
      spec.sphere_sizes.push_back(opt.size_base + n * opt.size_step);
  }
  spec.intra_edges = !opt.no_intra;
  spec.face_rule = opt.faces == "none"  ? OneDimSpec::FaceRule::None
                   : opt.faces == "all" ? OneDimSpec::FaceRule::All
                                        : OneDimSpec::FaceRule::Cross;
  auto fam = gen_onedim(spec);
  MagneticTriangulation mt{std::move(fam.complex), std::move(fam.alpha)};
  if (opt.sphere_pi) mt.alpha = potential_sphere_pi(mt.complex, fam.decomposition);
  return emit_generated(mt, opt.common);
}

int run_generate_random(const GenerateOptions& opt) {
  RandomSpec spec;
  spec.seed = opt.common.seed;
  spec.vertices = opt.vertices;
  spec.edge_density = opt.edge_density;
  spec.face_density = opt.face_density;
  spec.weight_min = opt.weight_min;
  spec.weight_max = opt.weight_max;
  spec.alpha_max = opt.alpha_max;
  return emit_generated(gen_random(spec), opt.common);
}

// ---------------------------------------------------------------------------
// validate

int run_validate(const std::string& input) {
  MagneticTriangulation mt = parse_document([&] {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }());
  const auto violations = validate(mt.complex);
  if (violations.empty()) {
    std::cout << "OK: " << mt.complex.vertex_count() << " vertices, "
              << mt.complex.edge_count() << " edges, " << mt.complex.face_count() << " faces\n";
    return kExitOk;
  }
  for (const auto& v : violations)
    std::cout << "violation: " << v.rule << " at " << v.cell << " (" << v.detail << ")\n";
  return kExitInvalid;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  std::string status;  // PASS / FAIL / SKIPPED
  std::vector<std::pair<std::string, double>> measured;
};

CheckResult check_adjointness(const MagneticTriangulation& mt, const CommonOptions& opt,
                              Index trials) {
  const auto& T = mt.complex;
  SplitMix64 rng(opt.seed);
  double worst0 = 0.0, worst1 = 0.0;
  for (Index t = 0; t < trials; ++t) {
    const Cochain0 f = random_cochain(T.vertex_count(), rng);
    const Cochain1 phi = random_cochain(T.edge_count(), rng);
    const Cochain2 psi = random_cochain(T.face_count(), rng);
    {
      const Cochain1 df = d0(T, mt.alpha, f);
      const Cochain0 dphi = delta0(T, mt.alpha, phi);
      const double scale =
          std::max(1e-300, norm1(T, df) * norm1(T, phi) + norm0(T, f) * norm0(T, dphi));
      worst0 = std::max(worst0,
                        std::abs(inner1(T, df, phi) - inner0(T, f, dphi)) / scale);
    }
    {
      const Cochain2 dphi = d1(T, mt.alpha, phi);
      const Cochain1 dpsi = delta1(T, mt.alpha, psi);
      const double scale =
          std::max(1e-300, norm2(T, dphi) * norm2(T, psi) + norm1(T, phi) * norm1(T, dpsi));
      worst1 = std::max(worst1,
                        std::abs(inner2(T, dphi, psi) - inner1(T, phi, dpsi)) / scale);
    }
  }
  CheckResult res{"adjointness", "", {{"d0_delta0", worst0}, {"d1_delta1", worst1}}};
  res.status = (worst0 <= opt.tol_alg && worst1 <= opt.tol_alg) ? "PASS" : "FAIL";
  return res;
}

CheckResult check_gauge(const MagneticTriangulation& mt, const CommonOptions& opt, Index trials) {
  const auto& T = mt.complex;
  SplitMix64 rng(opt.seed + 1);
  double worst = 0.0, worst_unitary = 0.0;
  for (Index t = 0; t < trials; ++t) {
    const auto h = random_gauge(T.vertex_count(), rng);
    const auto shifted = gauge_shift_potential(T, mt.alpha, h);
    const Cochain0 g = random_cochain(T.vertex_count(), rng);
    const Cochain1 phi = random_cochain(T.edge_count(), rng);
    const Cochain2 psi = random_cochain(T.face_count(), rng);

    // Residuals relative to the transported output, so heavy weights in the
    // adjoint operators do not inflate the comparison.
    auto resid = [](const Eigen::VectorXcd& lhs, const Eigen::VectorXcd& rhs) {
      return vec_max_abs(lhs - rhs) / (1.0 + std::max(vec_max_abs(lhs), vec_max_abs(rhs)));
    };
    worst = std::max(worst, resid(d0(T, shifted, gauge_apply0(T, h, g)),
                                  gauge_apply1(T, h, d0(T, mt.alpha, g))));
    worst = std::max(worst, resid(d1(T, shifted, gauge_apply1(T, h, phi)),
                                  gauge_apply2(T, h, d1(T, mt.alpha, phi))));
    worst = std::max(worst, resid(delta0(T, shifted, gauge_apply1(T, h, phi)),
                                  gauge_apply0(T, h, delta0(T, mt.alpha, phi))));
    worst = std::max(worst, resid(delta1(T, shifted, gauge_apply2(T, h, psi)),
                                  gauge_apply1(T, h, delta1(T, mt.alpha, psi))));

    const double n_before = norm1(T, phi);
    const double n_after = norm1(T, gauge_apply1(T, h, phi));
    worst_unitary = std::max(worst_unitary, std::abs(n_after - n_before) / (1.0 + n_before));
  }
  CheckResult res{"gauge", "", {{"equivariance", worst}, {"unitarity", worst_unitary}}};
  res.status = (worst <= opt.tol_alg && worst_unitary <= opt.tol_alg) ? "PASS" : "FAIL";
  return res;
}

CheckResult check_leibniz(const MagneticTriangulation& mt, const CommonOptions& opt,
                          Index trials) {
  const auto& T = mt.complex;
  SplitMix64 rng(opt.seed + 2);
  double worst = 0.0;
  for (Index t = 0; t < trials; ++t) {
    const auto rep = leibniz_residuals(T, mt.alpha, random_cochain(T.vertex_count(), rng),
                                       random_cochain(T.vertex_count(), rng),
                                       random_cochain(T.edge_count(), rng),
                                       random_cochain(T.face_count(), rng));
    worst = std::max(worst, rep.max_residual() / rep.scale);
  }
  CheckResult res{"leibniz", "", {{"max_scaled_residual", worst}}};
  res.status = worst <= opt.tol_alg ? "PASS" : "FAIL";
  return res;
}

CheckResult check_curvature(const MagneticTriangulation& mt, const CommonOptions& opt,
                            Index trials) {
  const auto& T = mt.complex;
  SplitMix64 rng(opt.seed + 3);
  double max_deg_v = 0.0;
  for (Index v = 0; v < T.vertex_count(); ++v) max_deg_v = std::max(max_deg_v, degree_vertex(T, v));

  double worst_closed = 0.0, worst_adj = 0.0;
  for (Index t = 0; t < std::max<Index>(trials / 8, 1); ++t) {
    const Cochain0 f = random_cochain(T.vertex_count(), rng);
    const Cochain2 psi = random_cochain(T.face_count(), rng);

    // Residuals are taken relative to the magnitudes the compositions pass
    // through, not to the (possibly fully cancelled) outputs.
    const Cochain1 d0f = d0(T, mt.alpha, f);
    const Cochain2 comp = d1(T, mt.alpha, d0f);
    const double scale_d = 1.0 + vec_max_abs(comp) + 3.0 * vec_max_abs(d0f);
    worst_closed = std::max(worst_closed,
                            vec_max_abs(comp - curvature_closed_d1d0(T, mt.alpha, f)) / scale_d);

    const Cochain1 mid = delta1(T, mt.alpha, psi);
    const Cochain0 comp_adj = delta0(T, mt.alpha, mid);
    const double scale_a = 1.0 + vec_max_abs(comp_adj) + max_deg_v * vec_max_abs(mid);
    worst_closed = std::max(worst_closed,
                            vec_max_abs(comp_adj - curvature_closed_delta0delta1(T, mt.alpha, psi)) /
                                scale_a);

    const double scale = std::max(1.0, norm1(T, d0f) * norm1(T, mid) +
                                           norm2(T, comp) * norm2(T, psi) +
                                           norm0(T, f) * norm0(T, comp_adj));
    worst_adj = std::max(worst_adj,
                         std::abs(inner2(T, comp, psi) - inner0(T, f, comp_adj)) / scale);
  }

  // Dirac response must equal 2 max |sin(flux/6)| across faces.
  double max_sin = 0.0;
  for (Index k = 0; k < T.face_count(); ++k)
    max_sin = std::max(max_sin, std::abs(std::sin(face_flux(T, mt.alpha, k) / 6.0)));
  double max_dirac = 0.0;
  for (Index v = 0; v < T.vertex_count(); ++v) {
    Cochain0 dirac = Cochain0::Zero(T.vertex_count());
    dirac(v) = 1.0;
    max_dirac = std::max(max_dirac, vec_max_abs(curvature_d1d0(T, mt.alpha, dirac)));
  }
  const double bohr = std::abs(max_dirac - 2.0 * max_sin);

  CheckResult res{"curvature",
                  "",
                  {{"closed_form", worst_closed},
                   {"adjoint_pair", worst_adj},
                   {"dirac_vs_sin", bohr}}};
  res.status =
      (worst_closed <= opt.tol_alg && worst_adj <= opt.tol_alg && bohr <= 10 * opt.tol_alg)
          ? "PASS"
          : "FAIL";
  return res;
}

CheckResult check_hermiticity(const MagneticTriangulation& mt, const CommonOptions& opt,
                              Index cell_cap) {
  const auto& T = mt.complex;
  if (T.total_cells() > cell_cap) return {"hermiticity", "SKIPPED", {}};
  const auto Tm = assemble(T, mt.alpha, OperatorKind::GaussBonnet);
  const auto herm = hermitize_and_check(Tm);
  const auto eigs = spectrum(T, mt.alpha, SpectrumBlock::Full, cell_cap);
  const double min_eig = eigs.size() ? eigs.minCoeff() : 0.0;

  SplitMix64 rng(opt.seed + 4);
  double worst_map = 0.0;
  for (OperatorKind kind : {OperatorKind::D0, OperatorKind::Delta0, OperatorKind::D1,
                            OperatorKind::Delta1}) {
    const auto M = assemble(T, mt.alpha, kind);
    for (int t = 0; t < 16; ++t) {
      const Eigen::VectorXcd v = random_cochain(M.mat.cols(), rng);
      Eigen::VectorXcd via_map;
      switch (kind) {
        case OperatorKind::D0: via_map = d0(T, mt.alpha, v); break;
        case OperatorKind::Delta0: via_map = delta0(T, mt.alpha, v); break;
        case OperatorKind::D1: via_map = d1(T, mt.alpha, v); break;
        default: via_map = delta1(T, mt.alpha, v); break;
      }
      worst_map = std::max(worst_map,
                           vec_max_abs(M.mat * v - via_map) / (1.0 + vec_max_abs(via_map)));
    }
  }

  CheckResult res{"hermiticity",
                  "",
                  {{"t_asymmetry", herm.max_asym / std::max(herm.max_abs, 1e-300)},
                   {"min_eigenvalue", min_eig},
                   {"matrix_vs_map", worst_map}}};
  res.status =
      (herm.pass && min_eig >= -opt.tol_eig && worst_map <= opt.tol_alg) ? "PASS" : "FAIL";
  return res;
}

CheckResult check_spectral_gauge(const MagneticTriangulation& mt, const CommonOptions& opt,
                                 Index cell_cap) {
  const auto& T = mt.complex;
  if (T.total_cells() > cell_cap) return {"spectral", "SKIPPED", {}};
  SplitMix64 rng(opt.seed + 5);
  const auto h = random_gauge(T.vertex_count(), rng);
  const Eigen::VectorXd a = spectrum(T, mt.alpha, SpectrumBlock::Full, cell_cap);
  const Eigen::VectorXd b =
      spectrum(T, gauge_shift_potential(T, mt.alpha, h), SpectrumBlock::Full, cell_cap);
  const double drift = a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
  CheckResult res{"spectral", "", {{"eigenvalue_drift", drift}}};
  res.status = drift <= opt.tol_eig ? "PASS" : "FAIL";
  return res;
}

struct VerifyOptions {
  CommonOptions common;
  std::string input;
  std::string checks = "all";
  Index trials = 64;
  Index cell_cap = 4000;
};

int run_verify(const VerifyOptions& opt) {
  const MagneticTriangulation mt = load_file(opt.input);

  const std::vector<std::string> all = {"adjointness", "gauge",       "leibniz",
                                        "curvature",   "hermiticity", "spectral"};
  std::vector<std::string> selected;
  if (opt.checks == "all") {
    selected = all;
  } else {
    std::stringstream ss(opt.checks);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (std::find(all.begin(), all.end(), tok) == all.end())
        throw CLI::ValidationError("--checks", "unknown check: " + tok);
      selected.push_back(tok);
    }
  }

  std::vector<CheckResult> results;
  for (const auto& name : all) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
      results.push_back({name, "SKIPPED", {}});
      continue;
    }
    if (name == "adjointness") results.push_back(check_adjointness(mt, opt.common, opt.trials));
    if (name == "gauge") results.push_back(check_gauge(mt, opt.common, opt.trials));
    if (name == "leibniz")
      results.push_back(check_leibniz(mt, opt.common, std::max<Index>(opt.trials / 8, 1)));
    if (name == "curvature") results.push_back(check_curvature(mt, opt.common, opt.trials));
    if (name == "hermiticity") results.push_back(check_hermiticity(mt, opt.common, opt.cell_cap));
    if (name == "spectral") results.push_back(check_spectral_gauge(mt, opt.common, opt.cell_cap));
  }

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.status != "FAIL";

  ordered_json doc;
  doc["command"] = "verify";
  doc["input"] = opt.input;
  doc["seed"] = opt.common.seed;
  doc["trials"] = opt.trials;
  doc["tolerances"] = {{"algebraic", opt.common.tol_alg},
                       {"eigenvalue", opt.common.tol_eig},
                       {"holonomy", opt.common.tol_hol}};
  doc["checks"] = ordered_json::array();
  for (const auto& r : results) {
    ordered_json jc;
    jc["name"] = r.name;
    jc["status"] = r.status;
    for (const auto& [k, v] : r.measured) jc[k] = v;
    doc["checks"].push_back(jc);
  }
  doc["overall"] = all_pass ? "PASS" : "FAIL";

  if (opt.common.format == "json") {
    emit(doc.dump(2) + "\n", opt.common);
  } else {
    std::ostringstream out;
    out << "verify " << opt.input << " (seed " << opt.common.seed << ", trials " << opt.trials
        << ")\n";
    for (const auto& r : results) {
      out << "  " << r.name << ": " << r.status;
      for (const auto& [k, v] : r.measured) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " %s=%.3e", k.c_str(), v);
        out << buf;
      }
      out << "\n";
    }
    out << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    emit(out.str(), opt.common);
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// audit

struct AuditOptions {
  CommonOptions common;
  std::string input;
  std::string origin;
  Index n_max = -1;  // default: eccentricity
};

int run_audit(const AuditOptions& opt) {
  const MagneticTriangulation mt = load_file(opt.input);
  const auto& T = mt.complex;

  Index origin = 0;
  if (!opt.origin.empty()) {
    origin = T.vertex_index(opt.origin);
    if (origin < 0) throw ParseError("unknown origin vertex: " + opt.origin);
  }

  const Eigen::VectorXi dist = combinatorial_distance(T, origin);
  const Index ecc = dist.maxCoeff();
  const Index n_max = opt.n_max >= 0 ? opt.n_max : ecc;

  const auto family = canonical_cutoffs(T, origin, n_max);
  const auto completeness = chi_completeness_audit(T, family);
  const auto obstruction = chi_alpha_obstruction(T, mt.alpha);
  const auto curvature = bounded_curvature_audit(T, mt.alpha);
  const auto growth = degree_growth_check(T, origin, ecc);

  // Obstruction sup by ball radius; the growth trend over radii is the
  // signal the audit reports.
  std::vector<double> obs_sup(ecc + 1, 0.0);
  for (Index v = 0; v < T.vertex_count(); ++v)
    for (Index n = dist(v); n <= ecc; ++n) obs_sup[n] = std::max(obs_sup[n], obstruction(v));
  const bool obs_increasing = strictly_increasing_run(obs_sup, 5);

  std::vector<double> c1_rows, c2_rows;
  for (const auto& row : completeness.rows) {
    c1_rows.push_back(row.c1);
    c2_rows.push_back(row.c2_plus);
  }

  ordered_json doc;
  doc["command"] = "audit";
  doc["input"] = opt.input;
  doc["origin"] = T.vertex_name(origin);
  doc["cells"] = {{"vertices", T.vertex_count()},
                  {"edges", T.edge_count()},
                  {"faces", T.face_count()}};
  doc["eccentricity"] = ecc;
  doc["n_max"] = n_max;
  doc["note"] =
      "trend flags are heuristics over the finite truncation; they do not decide asymptotics";

  ordered_json jc;
  jc["c1_constant"] = completeness.c1_constant;
  jc["c2_constant"] = completeness.c2_constant;
  jc["c2_minus_constant"] = completeness.c2_minus_constant;
  jc["exhausts"] = completeness.exhausts;
  jc["c1_trend_bounded"] = bounded_growth_trend(c1_rows);
  jc["c2_trend_bounded"] = bounded_growth_trend(c2_rows);
  jc["rows"] = ordered_json::array();
  for (const auto& row : completeness.rows)
    jc["rows"].push_back({{"n", row.n},
                          {"c1", row.c1},
                          {"c2_plus", row.c2_plus},
                          {"c2_minus", row.c2_minus},
                          {"sup_deg_support", row.sup_deg_support}});
  doc["chi_completeness"] = jc;

  ordered_json jo;
  jo["sup"] = obstruction.size() ? obstruction.maxCoeff() : 0.0;
  jo["sup_by_radius"] = obs_sup;
  jo["increasing_trend"] = obs_increasing;
  doc["chi_alpha_obstruction"] = jo;

  doc["bounded_curvature"] = {
      {"sup", curvature.sup},
      {"argmax", curvature.argmax >= 0 ? T.vertex_name(curvature.argmax) : ""}};

  ordered_json jg;
  jg["bounded_v"] = growth.bounded_v;
  jg["bounded_e"] = growth.bounded_e;
  jg["rows"] = ordered_json::array();
  for (const auto& row : growth.rows)
    jg["rows"].push_back({{"n", row.n},
                          {"ball_sup_deg_v", row.ball_sup_deg_v},
                          {"ball_sup_deg_e", row.ball_sup_deg_e},
                          {"ratio_v", row.ratio_v},
                          {"ratio_e", row.ratio_e}});
  doc["degree_growth"] = jg;

  if (opt.common.format == "json") {
    emit(doc.dump(2) + "\n", opt.common);
  } else {
    std::ostringstream out;
    out << "audit " << opt.input << " (origin " << T.vertex_name(origin) << ", n_max " << n_max
        << ")\n";
    out << "cells: " << T.vertex_count() << " vertices, " << T.edge_count() << " edges, "
        << T.face_count() << " faces; eccentricity " << ecc << "\n";
    out << "note: trend flags are heuristics over the finite truncation; they do not decide "
           "asymptotics\n";
    char buf[160];
    out << "chi-completeness: C1 " << completeness.c1_constant << ", C2 "
        << completeness.c2_constant << " (minus variant " << completeness.c2_minus_constant
        << "), exhausts " << (completeness.exhausts ? "yes" : "no") << ", trends "
        << (bounded_growth_trend(c1_rows) ? "bounded" : "unbounded") << "/"
        << (bounded_growth_trend(c2_rows) ? "bounded" : "unbounded") << "\n";
    out << "  n    C1            C2+           C2-           sup_deg(supp)\n";
    for (const auto& row : completeness.rows) {
      std::snprintf(buf, sizeof(buf), "  %-4lld %-13.6g %-13.6g %-13.6g %-13.6g\n",
                    static_cast<long long>(row.n), row.c1, row.c2_plus, row.c2_minus,
                    row.sup_deg_support);
      out << buf;
    }
    out << "chi_alpha obstruction: sup " << (obstruction.size() ? obstruction.maxCoeff() : 0.0)
        << ", trend " << (obs_increasing ? "increasing" : "not increasing") << "\n  sup by radius:";
    for (double s : obs_sup) {
      std::snprintf(buf, sizeof(buf), " %.6g", s);
      out << buf;
    }
    out << "\n";
    out << "bounded curvature: sup " << curvature.sup << " at "
        << (curvature.argmax >= 0 ? T.vertex_name(curvature.argmax) : "-") << "\n";
    out << "degree growth: deg_V trend " << (growth.bounded_v ? "bounded" : "unbounded")
        << ", deg_E trend " << (growth.bounded_e ? "bounded" : "unbounded") << "\n";
    out << "  n    ball sup deg_V    ball sup deg_E    ratio_V       ratio_E\n";
    for (const auto& row : growth.rows) {
      std::snprintf(buf, sizeof(buf), "  %-4lld %-17.6g %-17.6g %-13.6g %-13.6g\n",
                    static_cast<long long>(row.n), row.ball_sup_deg_v, row.ball_sup_deg_e,
                    row.ratio_v, row.ratio_e);
      out << buf;
    }
    emit(out.str(), opt.common);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumOptions {
  CommonOptions common;
  std::string input;
  std::string degree = "full";
  bool gauge_check = false;
  Index cell_cap = 4000;
};

int run_spectrum(const SpectrumOptions& opt) {
  const MagneticTriangulation mt = load_file(opt.input);
  const auto& T = mt.complex;
  const SpectrumBlock block = opt.degree == "0"   ? SpectrumBlock::Degree0
                              : opt.degree == "1" ? SpectrumBlock::Degree1
                              : opt.degree == "2" ? SpectrumBlock::Degree2
                                                  : SpectrumBlock::Full;

  const Eigen::VectorXd eigs = spectrum(T, mt.alpha, block, opt.cell_cap);

  std::optional<Eigen::VectorXd> gauged;
  double drift = 0.0;
  if (opt.gauge_check) {
    SplitMix64 rng(opt.common.seed);
    const auto h = random_gauge(T.vertex_count(), rng);
    gauged = spectrum(T, gauge_shift_potential(T, mt.alpha, h), block, opt.cell_cap);
    drift = eigs.size() ? (eigs - *gauged).cwiseAbs().maxCoeff() : 0.0;
  }

  if (opt.common.format == "csv") {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    char buf[64];
    for (Index i = 0; i < eigs.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%lld,%.17g\n", static_cast<long long>(i), eigs(i));
      out << buf;
    }
    emit(out.str(), opt.common);
  } else if (opt.common.format == "json") {
    ordered_json doc;
    doc["command"] = "spectrum";
    doc["input"] = opt.input;
    doc["degree"] = opt.degree;
    doc["eigenvalues"] = std::vector<double>(eigs.begin(), eigs.end());
    if (gauged) {
      doc["gauge_check"] = {{"eigenvalues", std::vector<double>(gauged->begin(), gauged->end())},
                            {"max_drift", drift},
                            {"pass", drift <= opt.common.tol_eig}};
    }
    emit(doc.dump(2) + "\n", opt.common);
  } else {
    std::ostringstream out;
    out << "spectrum " << opt.input << " (degree " << opt.degree << ", " << eigs.size()
        << " eigenvalues)\n";
    char buf[64];
    for (Index i = 0; i < eigs.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "  %.12g\n", eigs(i));
      out << buf;
    }
    if (gauged) {
      std::snprintf(buf, sizeof(buf), "gauge check: max drift %.3e (%s)\n", drift,
                    drift <= opt.common.tol_eig ? "PASS" : "FAIL");
      out << buf;
    }
    emit(out.str(), opt.common);
  }
  if (gauged && drift > opt.common.tol_eig) return kExitCheckFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete magnetic Hodge calculus on weighted triangulations"};
  app.require_subcommand(1);

  // generate
  GenerateOptions gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate an example family document");
  cmd_gen->require_subcommand(1);

  auto* gen_book = cmd_gen->add_subcommand("book-like", "Book-like family");
  gen_book->add_option("--depth", gen.depth, "Number of spheres")->check(CLI::PositiveNumber);
  gen_book->add_option("--beta", gen.beta, "Valence exponent in (0,2]");
  gen_book->add_option("--weights", gen.weights, "Weight scheme")
      ->check(CLI::IsMember({"simple", "beta"}));
  gen_book->add_flag("--sphere-pi", gen.sphere_pi, "Attach the (|x|-|y|) pi potential");
  add_common(gen_book, gen.common);

  auto* gen_onedim_cmd = cmd_gen->add_subcommand("onedim", "Sphere-decomposition family");
  gen_onedim_cmd->add_option("--spheres", gen.spheres, "Comma-separated sphere sizes");
  gen_onedim_cmd->add_option("--levels", gen.levels, "Number of spheres")
      ->check(CLI::PositiveNumber);
  gen_onedim_cmd->add_option("--size-base", gen.size_base, "Size of sphere 0");
  gen_onedim_cmd->add_option("--size-step", gen.size_step, "Per-level size increment");
  gen_onedim_cmd->add_flag("--no-intra", gen.no_intra, "Omit intra-sphere edges");
  gen_onedim_cmd->add_option("--faces", gen.faces, "Face rule")
      ->check(CLI::IsMember({"none", "cross", "all"}));
  gen_onedim_cmd->add_flag("--sphere-pi", gen.sphere_pi, "Attach the (|x|-|y|) pi potential");
  add_common(gen_onedim_cmd, gen.common);

  auto* gen_random_cmd = cmd_gen->add_subcommand("random", "Seeded random triangulation");
  gen_random_cmd->add_option("--vertices", gen.vertices, "Vertex count")
      ->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--edge-density", gen.edge_density, "Extra edge probability");
  gen_random_cmd->add_option("--face-density", gen.face_density, "3-cycle to face probability");
  gen_random_cmd->add_option("--weight-min", gen.weight_min, "Lower weight bound");
  gen_random_cmd->add_option("--weight-max", gen.weight_max, "Upper weight bound");
  gen_random_cmd->add_option("--alpha-max", gen.alpha_max, "Potential amplitude");
  add_common(gen_random_cmd, gen.common);

  // validate
  std::string validate_input;
  auto* cmd_validate = app.add_subcommand("validate", "Check a document's invariants");
  cmd_validate->add_option("input", validate_input, "Document path")->required();

  // verify
  VerifyOptions ver;
  auto* cmd_verify = app.add_subcommand("verify", "Run property suites on a document");
  cmd_verify->add_option("input", ver.input, "Document path")->required();
  cmd_verify->add_option("--checks", ver.checks,
                         "Comma list of adjointness,gauge,leibniz,curvature,hermiticity,spectral "
                         "or 'all'");
  cmd_verify->add_option("--trials", ver.trials, "Random trials per property")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--cell-cap", ver.cell_cap, "Dense matrix cell cap")
      ->check(CLI::PositiveNumber);
  add_common(cmd_verify, ver.common);

  // audit
  AuditOptions aud;
  auto* cmd_audit = app.add_subcommand("audit", "Completeness and curvature audits");
  cmd_audit->add_option("input", aud.input, "Document path")->required();
  cmd_audit->add_option("--origin", aud.origin, "Origin vertex id (default: first)");
  cmd_audit->add_option("--n-max", aud.n_max, "Largest cut-off level (default: eccentricity)");
  add_common(cmd_audit, aud.common);

  // spectrum
  SpectrumOptions spec;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Eigenvalues of the Laplacian blocks");
  cmd_spectrum->add_option("input", spec.input, "Document path")->required();
  cmd_spectrum->add_option("--degree", spec.degree, "Block: 0, 1, 2 or full")
      ->check(CLI::IsMember({"0", "1", "2", "full"}));
  cmd_spectrum->add_flag("--gauge-check", spec.gauge_check,
                         "Re-run with a random gauge shift and compare");
  cmd_spectrum->add_option("--cell-cap", spec.cell_cap, "Dense matrix cell cap")
      ->check(CLI::PositiveNumber);
  add_common(cmd_spectrum, spec.common, /*with_csv=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen_book->parsed()) return run_generate_book(gen);
    if (gen_onedim_cmd->parsed()) return run_generate_onedim(gen);
    if (gen_random_cmd->parsed()) return run_generate_random(gen);
    if (cmd_validate->parsed()) return run_validate(validate_input);
    if (cmd_verify->parsed()) return run_verify(ver);
    if (cmd_audit->parsed()) return run_audit(aud);
    if (cmd_spectrum->parsed()) return run_spectrum(spec);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations)
      std::cerr << "  violation: " << v.rule << " at " << v.cell << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
