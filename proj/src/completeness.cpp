#include "magtri/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace magtri {

Eigen::VectorXi combinatorial_distance(const WeightedTriangulation& T, Index origin) {
  if (origin < 0 || origin >= T.vertex_count())
    throw std::invalid_argument("combinatorial_distance: unknown origin");
  Eigen::VectorXi dist = Eigen::VectorXi::Constant(T.vertex_count(), -1);
  std::deque<Index> queue = {origin};
  dist(origin) = 0;
  while (!queue.empty()) {
    const Index v = queue.front();
    queue.pop_front();
    for (Index w : T.neighbors(v)) {
      if (dist(w) < 0) {
        dist(w) = dist(v) + 1;
        queue.push_back(w);
      }
    }
  }
  if ((dist.array() < 0).any())
    throw std::invalid_argument("combinatorial_distance: complex is disconnected");
  return dist;
}

CutoffFamily canonical_cutoffs(const WeightedTriangulation& T, Index origin, Index n_max) {
  CutoffFamily family;
  family.origin = origin;
  family.distance = combinatorial_distance(T, origin);
  for (Index n = 0; n <= n_max; ++n) {
    CutoffLevel level;
    level.n = n;
    level.denom = n + 1;
    level.ramp.resize(T.vertex_count());
    level.chi.resize(T.vertex_count());
    for (Index v = 0; v < T.vertex_count(); ++v) {
      const Index a = std::clamp<Index>(2 * (n + 1) - family.distance(v), 0, n + 1);
      level.ramp(v) = static_cast<int>(a);
      level.chi(v) = static_cast<double>(a) / static_cast<double>(n + 1);
    }
    family.levels.push_back(std::move(level));
  }
  return family;
}

std::vector<std::string> validate_cutoff_family(const WeightedTriangulation& T,
                                                const CutoffFamily& family) {
  std::vector<std::string> out;
  if (family.distance.size() != T.vertex_count()) {
    out.push_back("distance map size mismatch");
    return out;
  }
  for (const auto& level : family.levels) {
    if (level.chi.size() != T.vertex_count()) {
      out.push_back("chi_" + std::to_string(level.n) + ": size mismatch");
      continue;
    }
    for (Index v = 0; v < T.vertex_count(); ++v) {
      if (level.chi(v) < 0.0 || level.chi(v) > 1.0)
        out.push_back("chi_" + std::to_string(level.n) + ": value outside [0,1] at " +
                      T.vertex_name(v));
      if (family.distance(v) <= level.n && level.chi(v) != 1.0)
        out.push_back("chi_" + std::to_string(level.n) + ": not 1 on B_n at " + T.vertex_name(v));
    }
  }
  return out;
}

CompletenessReport chi_completeness_audit(const WeightedTriangulation& T,
                                          const CutoffFamily& family) {
  const auto bad = validate_cutoff_family(T, family);
  if (!bad.empty())
    throw std::invalid_argument("chi_completeness_audit: invalid family: " + bad.front());

  CompletenessReport rep;
  Index max_n = 0;
  for (const auto& level : family.levels) max_n = std::max(max_n, level.n);
  rep.exhausts = (family.distance.maxCoeff() <= max_n);

  for (const auto& level : family.levels) {
    CompletenessRow row;
    row.n = level.n;
    const Eigen::VectorXd grad = d0_flat(T, level.chi);

    for (Index x = 0; x < T.vertex_count(); ++x) {
      double sum = 0.0;
      bool in_support = false;
      for (Index y : T.neighbors(x)) {
        const Index e = T.edge_index(x, y);
        sum += T.edge_weight(e) * grad(e) * grad(e);
        if (grad(e) != 0.0) in_support = true;
      }
      row.c1 = std::max(row.c1, sum / T.vertex_weight(x));
      if (in_support) row.sup_deg_support = std::max(row.sup_deg_support, degree_vertex(T, x));
    }

    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      double plus = 0.0, minus = 0.0;
      for (const auto& corner : T.faces_at_edge(e)) {
        const Index t = corner.opposite;
        const double dtx = level.chi(ed.tail) - level.chi(t);
        const double dty = level.chi(ed.head) - level.chi(t);
        plus += T.face_weight(corner.face) * (dtx + dty) * (dtx + dty);
        minus += T.face_weight(corner.face) * (dtx - dty) * (dtx - dty);
      }
      row.c2_plus = std::max(row.c2_plus, plus / T.edge_weight(e));
      row.c2_minus = std::max(row.c2_minus, minus / T.edge_weight(e));
    }

    rep.c1_constant = std::max(rep.c1_constant, row.c1);
    rep.c2_constant = std::max(rep.c2_constant, row.c2_plus);
    rep.c2_minus_constant = std::max(rep.c2_minus_constant, row.c2_minus);
    rep.rows.push_back(row);
  }
  return rep;
}

Eigen::VectorXd chi_alpha_obstruction(const WeightedTriangulation& T,
                                      const MagneticPotential& alpha) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(T.vertex_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    const double s = std::sin(alpha(e) / 2.0);
    out(ed.tail) += T.edge_weight(e) * s * s;
    out(ed.head) += T.edge_weight(e) * s * s;
  }
  return out.cwiseQuotient(T.vertex_weights());
}

CurvatureAudit bounded_curvature_audit(const WeightedTriangulation& T,
                                       const MagneticPotential& alpha) {
  CurvatureAudit audit;
  audit.per_vertex = Eigen::VectorXd::Zero(T.vertex_count());
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    const double sn = std::sin(face_flux(T, alpha, f) / 6.0);
    const double term = T.face_weight(f) * sn * sn;
    audit.per_vertex(fc.a) += term;
    audit.per_vertex(fc.b) += term;
    audit.per_vertex(fc.c) += term;
  }
  audit.per_vertex = audit.per_vertex.cwiseQuotient(T.vertex_weights());
  if (audit.per_vertex.size() > 0) audit.sup = audit.per_vertex.maxCoeff(&audit.argmax);
  return audit;
}

bool bounded_growth_trend(const std::vector<double>& values) {
  if (values.size() < 4) return true;
  const size_t half = values.size() / 2;
  double first = 0.0, second = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i < half)
      first = std::max(first, values[i]);
    else
      second = std::max(second, values[i]);
  }
  return second <= 1.5 * first + 1e-12;
}

bool strictly_increasing_run(const std::vector<double>& values, Index run) {
  Index streak = 1;
  for (size_t i = 1; i < values.size(); ++i) {
    streak = (values[i] > values[i - 1]) ? streak + 1 : 1;
    if (streak >= run) return true;
  }
  return run <= 1 && !values.empty();
}

DegreeGrowthReport degree_growth_check(const WeightedTriangulation& T, Index origin,
                                       Index n_max) {
  const Eigen::VectorXi dist = combinatorial_distance(T, origin);
  DegreeGrowthReport rep;
  std::vector<double> ratios_v, ratios_e;

  std::vector<double> deg_v(T.vertex_count());
  for (Index v = 0; v < T.vertex_count(); ++v) deg_v[v] = degree_vertex(T, v);

  double ball_v = 0.0, ball_e = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    DegreeGrowthRow row;
    row.n = n;
    for (Index v = 0; v < T.vertex_count(); ++v)
      if (dist(v) == n) row.shell_sup_deg_v = std::max(row.shell_sup_deg_v, deg_v[v]);
    ball_v = std::max(ball_v, row.shell_sup_deg_v);
    row.ball_sup_deg_v = ball_v;

    // An edge (x,y) lies in B_n x B_{n+-1} exactly when min(|x|,|y|) <= n.
    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      if (std::min(dist(ed.tail), dist(ed.head)) == n)
        row.shell_sup_deg_e = std::max(row.shell_sup_deg_e, degree_edge(T, e));
    }
    ball_e = std::max(ball_e, row.shell_sup_deg_e);
    row.ball_sup_deg_e = ball_e;

    if (n >= 1) {
      row.ratio_v = row.ball_sup_deg_v / static_cast<double>(n * n);
      row.ratio_e = row.ball_sup_deg_e / static_cast<double>(n * n);
    }
    // The first two radii divide by tiny n^2 and would mask later growth;
    // the trend is judged from n >= 2.
    if (n >= 2) {
      ratios_v.push_back(row.ratio_v);
      ratios_e.push_back(row.ratio_e);
    }
    rep.rows.push_back(row);
  }
  rep.bounded_v = bounded_growth_trend(ratios_v);
  rep.bounded_e = bounded_growth_trend(ratios_e);
  return rep;
}

}  // namespace magtri
