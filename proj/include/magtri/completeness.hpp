#pragma once

#include "magtri/complex.hpp"
#include "magtri/magnetic_field.hpp"

namespace magtri {

/// BFS distances |x| = d_comb(origin, x). Throws when some vertex is
/// unreachable.
Eigen::VectorXi combinatorial_distance(const WeightedTriangulation& T, Index origin);

/// One cut-off level: chi = ramp / (n+1) with the integer ramp
/// ramp(x) = clamp(2(n+1) - |x|, 0, n+1), i.e. chi = ((2 - |x|/(n+1)) v 0) ^ 1.
/// The ramp is kept so exact rational statements about d0(chi) stay checkable.
struct CutoffLevel {
  Index n = 0;
  Eigen::VectorXd chi;
  Eigen::VectorXi ramp;
  Index denom = 1;  // n + 1
};

/// Exhausting family of cut-off functions over balls B_n around an origin.
struct CutoffFamily {
  Index origin = 0;
  Eigen::VectorXi distance;  // |x| for every vertex
  std::vector<CutoffLevel> levels;
};

/// Canonical cut-off family chi_n(x) = ((2 - |x|/(n+1)) v 0) ^ 1 for
/// n = 0..n_max. chi_n is 1 on B_{n+1}, vanishes outside B_{2(n+1)} and its
/// gradient obeys |d0 chi_n| <= 1/(n+1) across every edge.
CutoffFamily canonical_cutoffs(const WeightedTriangulation& T, Index origin, Index n_max);

/// Hard invariants of a cut-off family (0 <= chi <= 1, chi = 1 on B_n).
/// Returns human-readable violations; empty when valid.
std::vector<std::string> validate_cutoff_family(const WeightedTriangulation& T,
                                                const CutoffFamily& family);

struct CompletenessRow {
  Index n = 0;
  double c1 = 0.0;        // sup_x (1/c) sum_{e+=x} r |d0 chi_n|^2
  double c2_plus = 0.0;   // sup_e (1/r) sum_t s |d0chi(t,x) + d0chi(t,y)|^2
  double c2_minus = 0.0;  // same with a minus, reported alongside
  double sup_deg_support = 0.0;  // sup of deg_V over the gradient support
};

struct CompletenessReport {
  double c1_constant = 0.0;
  double c2_constant = 0.0;
  double c2_minus_constant = 0.0;
  bool exhausts = false;  // whether B_{n_max} already covers every vertex
  std::vector<CompletenessRow> rows;
};

/// Evaluates the two completeness constants of the family exactly over the
/// finite truncation, with a per-level breakdown. Throws when the family
/// violates its hard invariants.
CompletenessReport chi_completeness_audit(const WeightedTriangulation& T,
                                          const CutoffFamily& family);

/// Per-vertex obstruction (1/c(x)) sum_{e at x} r(e) sin^2(alpha(e)/2).
/// Each undirected edge at x is counted once. If this quantity is unbounded
/// along a family, no gauge-twisted cut-off family can exist for alpha.
Eigen::VectorXd chi_alpha_obstruction(const WeightedTriangulation& T,
                                      const MagneticPotential& alpha);

struct CurvatureAudit {
  double sup = 0.0;
  Index argmax = -1;
  Eigen::VectorXd per_vertex;
};

/// Bounded-curvature quantity per vertex,
///   (1/c(x)) sum over faces at x of s(face) sin^2(flux/6),
/// each incident face counted once, plus the exact sup and its argmax.
CurvatureAudit bounded_curvature_audit(const WeightedTriangulation& T,
                                       const MagneticPotential& alpha);

struct DegreeGrowthRow {
  Index n = 0;
  double shell_sup_deg_v = 0.0;  // sup of deg_V over the sphere S_n
  double ball_sup_deg_v = 0.0;   // sup of deg_V over the ball B_n
  double shell_sup_deg_e = 0.0;  // sup of deg_E over edges first reaching S_n
  double ball_sup_deg_e = 0.0;   // sup of deg_E over edges within B_n x B_{n+1}
  double ratio_v = 0.0;          // ball sup / n^2 (n >= 1)
  double ratio_e = 0.0;
};

struct DegreeGrowthReport {
  std::vector<DegreeGrowthRow> rows;
  bool bounded_v = false;
  bool bounded_e = false;
};

/// Heuristic boundedness of a finite sequence: the maximum over the second
/// half must not exceed 1.5x the maximum over the first half. A finite
/// truncation cannot decide an asymptotic statement; callers must present
/// the flag as a trend, never as a theorem.
bool bounded_growth_trend(const std::vector<double>& values);

/// True when the sequence strictly increases over at least `run` consecutive
/// entries somewhere.
bool strictly_increasing_run(const std::vector<double>& values, Index run);

/// Per-radius degree sups and the /n^2 ratios used by the quadratic-growth
/// criterion, with trend flags (heuristic over the sampled range).
DegreeGrowthReport degree_growth_check(const WeightedTriangulation& T, Index origin, Index n_max);

}  // namespace magtri
