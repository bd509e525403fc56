// Acceptance suite: runs the project-level criteria end to end and prints
// one PASS/FAIL line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "magtri/completeness.hpp"
#include "magtri/generators.hpp"
#include "magtri/io.hpp"
#include "magtri/operators.hpp"
#include "magtri/spectral.hpp"
#include "oracles.hpp"

using namespace magtri;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

MagneticTriangulation acceptance_complex(std::uint64_t seed, Index max_vertices = 60) {
  RandomSpec spec;
  spec.seed = seed;
  spec.vertices = 6 + static_cast<Index>(seed % static_cast<std::uint64_t>(max_vertices - 5));
  spec.edge_density = spec.vertices < 16 ? 0.55 : 0.30;
  spec.face_density = 0.6;
  return gen_random(spec);
}

double adjoint_residual0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                         const Cochain0& f, const Cochain1& phi) {
  const Cochain1 df = d0(T, alpha, f);
  const Cochain0 dphi = delta0(T, alpha, phi);
  const double scale =
      std::max(1e-300, norm1(T, df) * norm1(T, phi) + norm0(T, f) * norm0(T, dphi));
  return std::abs(inner1(T, df, phi) - inner0(T, f, dphi)) / scale;
}

double adjoint_residual1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                         const Cochain1& phi, const Cochain2& psi) {
  const Cochain2 dphi = d1(T, alpha, phi);
  const Cochain1 dpsi = delta1(T, alpha, psi);
  const double scale =
      std::max(1e-300, norm2(T, dphi) * norm2(T, psi) + norm1(T, phi) * norm1(T, dpsi));
  return std::abs(inner2(T, dphi, psi) - inner1(T, phi, dpsi)) / scale;
}

// 1. Adjointness of (d0, delta0) and (d1, delta1) on 64 seeded complexes.
Outcome criterion_adjointness() {
  Outcome out;
  const Timer timer;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 64; ++seed) {
    const auto mt = acceptance_complex(seed);
    const auto& T = mt.complex;
    if (T.face_count() == 0) {
      out.pass = false;
      out.detail = "complex " + std::to_string(seed) + " has no faces";
      return out;
    }
    SplitMix64 rng(seed * 2654435761ULL);
    worst = std::max(worst, adjoint_residual0(T, mt.alpha, oracles::random_cochain0(T, rng),
                                              oracles::random_cochain1(T, rng)));
    worst = std::max(worst, adjoint_residual1(T, mt.alpha, oracles::random_cochain1(T, rng),
                                              oracles::random_cochain2(T, rng)));
  }
  out.seconds = timer.seconds();
  out.pass = worst <= 1e-13 && out.seconds < 5.0;
  out.detail = "max residual " + fmt("%.2e", worst) + ", " + fmt("%.2f", out.seconds) +
               "s (limits 1e-13, 5s)";
  return out;
}

// 2. Gauge equivariance of d0/d1 and gauge invariance of the spectrum.
Outcome criterion_gauge() {
  Outcome out;
  const Timer timer;
  double worst_op = 0.0;
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    const auto mt = acceptance_complex(seed + 100, 40);
    const auto& T = mt.complex;
    SplitMix64 rng(seed * 40503ULL);
    const auto h = oracles::random_gauge(T, rng);
    const auto shifted = gauge_shift_potential(T, mt.alpha, h);
    const auto g = oracles::random_cochain0(T, rng);
    const auto phi = oracles::random_cochain1(T, rng);

    const Cochain1 r0 =
        d0(T, shifted, gauge_apply0(T, h, g)) - gauge_apply1(T, h, d0(T, mt.alpha, g));
    worst_op = std::max(worst_op, oracles::max_abs(r0) / (1.0 + oracles::max_abs(g)));
    const Cochain2 r1 =
        d1(T, shifted, gauge_apply1(T, h, phi)) - gauge_apply2(T, h, d1(T, mt.alpha, phi));
    worst_op = std::max(worst_op, oracles::max_abs(r1) / (1.0 + oracles::max_abs(phi)));
  }

  double worst_eig = 0.0;
  Index max_cells = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RandomSpec spec;
    spec.seed = seed + 900;
    spec.vertices = 14;
    spec.edge_density = 0.35;
    spec.face_density = 0.5;
    const auto mt = gen_random(spec);
    const auto& T = mt.complex;
    max_cells = std::max(max_cells, T.total_cells());
    if (T.total_cells() > 200) {
      out.pass = false;
      out.detail = "spectral instance exceeds 200 cells";
      return out;
    }
    SplitMix64 rng(seed);
    const auto h = oracles::random_gauge(T, rng);
    const Eigen::VectorXd a = spectrum(T, mt.alpha, SpectrumBlock::Full);
    const Eigen::VectorXd b =
        spectrum(T, gauge_shift_potential(T, mt.alpha, h), SpectrumBlock::Full);
    worst_eig = std::max(worst_eig, (a - b).cwiseAbs().maxCoeff());
  }
  out.seconds = timer.seconds();
  out.pass = worst_op <= 1e-13 && worst_eig <= 1e-10 && out.seconds < 30.0;
  out.detail = "op residual " + fmt("%.2e", worst_op) + ", eigenvalue drift " +
               fmt("%.2e", worst_eig) + ", " + fmt("%.2f", out.seconds) +
               "s (limits 1e-13, 1e-10, 30s)";
  return out;
}

// 3. The four derivation identities on 64 random instances.
Outcome criterion_leibniz() {
  Outcome out;
  const Timer timer;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 64; ++seed) {
    const auto mt = acceptance_complex(seed + 300, 30);
    const auto& T = mt.complex;
    SplitMix64 rng(seed * 7919ULL);
    const auto rep = leibniz_residuals(T, mt.alpha, oracles::random_cochain0(T, rng),
                                       oracles::random_cochain0(T, rng),
                                       oracles::random_cochain1(T, rng),
                                       oracles::random_cochain2(T, rng));
    worst = std::max(worst, rep.max_residual() / rep.scale);
  }
  out.seconds = timer.seconds();
  out.pass = worst <= 1e-13;
  out.detail = "max scaled residual " + fmt("%.2e", worst) + " (limit 1e-13)";
  return out;
}

// 4. Curvature: vanishes for trivial potentials; Dirac magnitude on K3.
Outcome criterion_curvature() {
  Outcome out;
  const Timer timer;
  double worst_trivial = 0.0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto mt = acceptance_complex(seed + 400, 30);
    const auto& T = mt.complex;
    SplitMix64 rng(seed);
    const auto h = oracles::random_gauge(T, rng, 1.5);
    const MagneticPotential exact = d0_flat(T, h);
    if (!trivial_gauge(T, exact).has_value()) {
      out.pass = false;
      out.detail = "trivial potential not recognized";
      return out;
    }
    const auto f = oracles::random_cochain0(T, rng);
    worst_trivial = std::max(worst_trivial, oracles::max_abs(curvature_d1d0(T, exact, f)));
  }

  double worst_dirac = 0.0;
  for (double theta : {kPi / 3.0, kPi / 2.0, kPi}) {
    const auto k3 = oracles::make_k3(theta);
    Cochain0 dirac = Cochain0::Zero(3);
    dirac(0) = 1.0;
    const double got = std::abs(curvature_d1d0(k3.complex, k3.alpha, dirac)(0));
    worst_dirac = std::max(worst_dirac, std::abs(got - 2.0 * std::abs(std::sin(theta / 2.0))));
  }
  out.seconds = timer.seconds();
  out.pass = worst_trivial <= 1e-14 && worst_dirac <= 1e-13;
  out.detail = "trivial-potential curvature " + fmt("%.2e", worst_trivial) + ", Dirac error " +
               fmt("%.2e", worst_dirac) + " (limits 1e-14, 1e-13)";
  return out;
}

// 5. Hermiticity, positivity, Delta = T^2, supersymmetric pairing.
Outcome criterion_hermiticity() {
  Outcome out;
  const Timer timer;
  double worst_herm = 0.0, worst_square = 0.0, worst_eig = 0.0, worst_susy = 0.0;
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    const auto mt = acceptance_complex(seed + 500, 18);
    const auto& T = mt.complex;
    const Index n = T.total_cells();

    const auto Tm = assemble(T, mt.alpha, OperatorKind::GaussBonnet);
    const auto herm = hermitize_and_check(Tm);
    worst_herm = std::max(worst_herm, herm.max_asym / std::max(herm.max_abs, 1e-300));

    // Matrix square against the cochain-level two-fold application.
    const auto Lm = assemble(T, mt.alpha, OperatorKind::Laplacian);
    Eigen::MatrixXcd map_matrix(n, n);
    for (Index j = 0; j < n; ++j) {
      Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(n);
      basis(j) = 1.0;
      const CochainTriple F{basis.segment(0, T.vertex_count()),
                            basis.segment(T.vertex_count(), T.edge_count()),
                            basis.segment(T.vertex_count() + T.edge_count(), T.face_count())};
      const CochainTriple out_triple = laplacian(T, mt.alpha, F);
      Eigen::VectorXcd col(n);
      col << out_triple.f, out_triple.phi, out_triple.psi;
      map_matrix.col(j) = col;
    }
    worst_square =
        std::max(worst_square, (Lm.mat - map_matrix).cwiseAbs().maxCoeff() /
                                   std::max(1e-300, map_matrix.cwiseAbs().maxCoeff()));

    const Eigen::VectorXd eigs = spectrum(T, mt.alpha, SpectrumBlock::Full);
    worst_eig = std::min(worst_eig, eigs.minCoeff());

    const Eigen::VectorXd even = spectrum(T, mt.alpha, SpectrumBlock::Even);
    const Eigen::VectorXd odd = spectrum(T, mt.alpha, SpectrumBlock::Odd);
    std::vector<double> nz_even, nz_odd;
    for (Index i = 0; i < even.size(); ++i)
      if (even(i) > 1e-8) nz_even.push_back(even(i));
    for (Index i = 0; i < odd.size(); ++i)
      if (odd(i) > 1e-8) nz_odd.push_back(odd(i));
    if (nz_even.size() != nz_odd.size()) {
      out.pass = false;
      out.detail = "supersymmetric multiplicities differ (seed " + std::to_string(seed) + ")";
      return out;
    }
    for (size_t i = 0; i < nz_even.size(); ++i)
      worst_susy = std::max(worst_susy,
                            std::abs(nz_even[i] - nz_odd[i]) / std::max(1.0, nz_even[i]));
  }
  out.seconds = timer.seconds();
  out.pass =
      worst_herm <= 1e-12 && worst_square <= 1e-13 && worst_eig >= -1e-10 && worst_susy <= 1e-9;
  out.detail = "asymmetry " + fmt("%.2e", worst_herm) + ", square mismatch " +
               fmt("%.2e", worst_square) + ", min eigenvalue " + fmt("%.2e", worst_eig) +
               ", susy gap " + fmt("%.2e", worst_susy);
  return out;
}

// 6. Classical limit on the simple triangle.
Outcome criterion_classical() {
  Outcome out;
  const auto k3 = oracles::make_k3(0.0);
  const Eigen::VectorXd eigs = spectrum(k3.complex, k3.alpha, SpectrumBlock::Degree0);
  const double err = std::max({std::abs(eigs(0)), std::abs(eigs(1) - 3.0),
                               std::abs(eigs(2) - 3.0)});
  out.pass = eigs.size() == 3 && err <= 1e-12;
  out.detail = "spectrum deviation from {0,3,3}: " + fmt("%.2e", err) + " (limit 1e-12)";
  return out;
}

// 7. Book-like generator: valence identity, even valence, degree growth.
Outcome criterion_book_like() {
  Outcome out;
  const Timer timer;
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto fam = gen_book_like({.depth = 20, .beta = beta, .beta_weights = true});
    const auto& T = fam.complex;
    const auto& S = fam.decomposition.spheres;
    for (size_t i = 1; i + 1 < S.size(); i += 2) {
      const Index expected = static_cast<Index>(S[i - 1].size() + S[i + 1].size()) + 1;
      for (Index x : S[i]) {
        if (static_cast<Index>(T.neighbors(x).size()) != expected) {
          out.pass = false;
          out.detail = "valence identity fails at sphere " + std::to_string(i) +
                       " (beta=" + fmt("%.1f", beta) + ")";
          return out;
        }
      }
    }
    for (size_t i = 2; i + 1 < S.size(); i += 2) {
      for (Index x : S[i]) {
        if (T.neighbors(x).size() != 4) {
          out.pass = false;
          out.detail = "even-sphere valence is not 4 at sphere " + std::to_string(i);
          return out;
        }
      }
    }
    const Index ecc = combinatorial_distance(T, 0).maxCoeff();
    const auto growth = degree_growth_check(T, 0, ecc);
    if (!growth.bounded_v || !growth.bounded_e) {
      out.pass = false;
      out.detail = "degree-growth ratios not bounded for beta=" + fmt("%.1f", beta);
      return out;
    }
  }
  out.seconds = timer.seconds();
  out.pass = out.seconds < 10.0;
  out.detail = "valence identity exact, even valence 4, growth ratios bounded, " +
               fmt("%.2f", out.seconds) + "s (limit 10s)";
  return out;
}

// 8. Canonical cut-off family invariants, including the exact gradient bound.
Outcome criterion_cutoffs() {
  Outcome out;
  const Timer timer;

  auto check_family = [&](const WeightedTriangulation& T, Index n_max,
                          const std::string& label) -> bool {
    const auto family = canonical_cutoffs(T, 0, n_max);
    for (const auto& level : family.levels) {
      const Index n = level.n;
      for (Index v = 0; v < T.vertex_count(); ++v) {
        const bool in_range = level.chi(v) >= 0.0 && level.chi(v) <= 1.0;
        const bool plateau = family.distance(v) > n + 1 || level.chi(v) == 1.0;
        const bool support = family.distance(v) < 2 * (n + 1) || level.chi(v) == 0.0;
        if (!in_range || !plateau || !support) {
          out.detail = label + ": chi_" + std::to_string(n) + " invariant fails";
          return false;
        }
      }
      for (Index e = 0; e < T.edge_count(); ++e) {
        const auto ed = T.edge(e);
        // Exact form: the integer ramp steps by at most 1, so the rational
        // gradient step/(n+1) is bounded by 1/(n+1) with equality allowed.
        const int step = std::abs(level.ramp(ed.tail) - level.ramp(ed.head));
        const double grad_exact =
            static_cast<double>(step) / static_cast<double>(level.denom);
        if (step > 1 || grad_exact > 1.0 / static_cast<double>(n + 1)) {
          out.detail = label + ": gradient bound violated at level " + std::to_string(n);
          return false;
        }
        // Generic float evaluation stays within an ulp of the bound.
        const double grad_float = std::abs(level.chi(ed.head) - level.chi(ed.tail));
        if (grad_float > (1.0 + 1e-12) / static_cast<double>(n + 1)) {
          out.detail = label + ": float gradient outside tolerance at level " + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  };

  const auto book = gen_book_like({.depth = 20, .beta = 1.0, .beta_weights = false});
  if (!check_family(book.complex, 10, "book-like")) {
    out.pass = false;
    return out;
  }
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    const auto mt = acceptance_complex(seed + 800, 24);
    if (!check_family(mt.complex, 6, "random " + std::to_string(seed))) {
      out.pass = false;
      return out;
    }
  }
  out.seconds = timer.seconds();
  out.detail = "plateau, support and exact 1/(n+1) gradient bound hold on all families";
  return out;
}

// 9. Sphere potential obstruction grows while chi-completeness stays bounded.
Outcome criterion_obstruction() {
  Outcome out;
  OneDimSpec spec;
  for (Index n = 0; n < 12; ++n) spec.sphere_sizes.push_back(n + 1);
  const auto fam = gen_onedim(spec);
  const auto& T = fam.complex;
  const auto alpha = potential_sphere_pi(T, fam.decomposition);
  const auto obs = chi_alpha_obstruction(T, alpha);
  const auto dist = combinatorial_distance(T, 0);

  std::vector<double> running_sup(12, 0.0);
  for (Index v = 0; v < T.vertex_count(); ++v) {
    for (Index n = dist(v); n < 12; ++n)
      running_sup[n] = std::max(running_sup[n], obs(v));
  }
  const bool grows = strictly_increasing_run(running_sup, 5);

  const auto family = canonical_cutoffs(T, 0, 11);
  const auto audit = chi_completeness_audit(T, family);
  std::vector<double> c1_rows, c2_rows;
  for (const auto& row : audit.rows) {
    c1_rows.push_back(row.c1);
    c2_rows.push_back(row.c2_plus);
  }
  const bool bounded = bounded_growth_trend(c1_rows) && bounded_growth_trend(c2_rows);

  out.pass = grows && bounded;
  out.detail = std::string("obstruction sup strictly increasing (") +
               fmt("%.1f", running_sup.front()) + " -> " + fmt("%.1f", running_sup.back()) +
               "), C1/C2 trend bounded (C1 " + fmt("%.3f", audit.c1_constant) + ", C2 " +
               fmt("%.3f", audit.c2_constant) + ")";
  return out;
}

// 10. Cross-term bound with the bounded-curvature constant.
Outcome criterion_cross_term() {
  Outcome out;
  double worst_margin = 0.0;
  bool any_flag = false;

  // Trivial potential: the ratio must vanish.
  const auto trivial = acceptance_complex(7);
  const auto rep0 =
      cross_term_probe(trivial.complex, MagneticPotential::Zero(trivial.complex.edge_count()),
                           256);
  if (rep0.max_ratio > 1e-9) {
    out.pass = false;
    out.detail = "trivial potential ratio " + fmt("%.2e", rep0.max_ratio);
    return out;
  }

  std::vector<std::pair<std::string, CrossTermProbeReport>> probes;
  probes.emplace_back("K3(3pi)",
                      cross_term_probe(oracles::make_k3(kPi).complex,
                                           oracles::make_k3(kPi).alpha, 256));
  for (std::uint64_t seed : {1001, 1002}) {
    const auto mt = acceptance_complex(seed, 24);
    probes.emplace_back("random" + std::to_string(seed),
                        cross_term_probe(mt.complex, mt.alpha, 256));
  }
  for (const auto& [name, rep] : probes) {
    const double allowance = rep.cprime * (rep.factor_flag ? 2.0 : 1.0) + 1e-9;
    if (rep.max_ratio > allowance) {
      out.pass = false;
      out.detail = name + ": ratio " + fmt("%.4f", rep.max_ratio) + " above allowance " +
                   fmt("%.4f", allowance);
      return out;
    }
    any_flag = any_flag || rep.factor_flag;
    worst_margin = std::max(worst_margin, rep.max_ratio / std::max(rep.cprime, 1e-300));
  }
  out.detail = std::string("trivial ratio ") + fmt("%.1e", rep0.max_ratio) +
               ", max ratio/C' " + fmt("%.3f", worst_margin) +
               (any_flag ? ", factor flag recorded" : ", no factor flag");
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"adjointness", criterion_adjointness},
      {"gauge equivariance", criterion_gauge},
      {"leibniz identities", criterion_leibniz},
      {"curvature / flux zeros", criterion_curvature},
      {"hermiticity & positivity", criterion_hermiticity},
      {"classical limit", criterion_classical},
      {"book-like generator", criterion_book_like},
      {"cut-off family", criterion_cutoffs},
      {"obstruction growth", criterion_obstruction},
      {"cross-term bound", criterion_cross_term},
  };

  int failures = 0;
  int id = 0;
  for (const auto& entry : entries) {
    ++id;
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("[%2d/10] %s  %-26s %s\n", id, outcome.pass ? "PASS" : "FAIL", entry.name,
                outcome.detail.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
