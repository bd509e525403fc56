#include "magtri/magnetic_field.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace magtri {

double potential_value(const WeightedTriangulation& T, const MagneticPotential& alpha, Index x,
                       Index y) {
  const Index e = T.edge_index(x, y);
  if (e < 0) throw std::invalid_argument("potential_value: not an edge");
  return (T.edge(e).tail == x) ? alpha(e) : -alpha(e);
}

double holonomy(const WeightedTriangulation& T, const MagneticPotential& alpha,
                std::span<const Index> path) {
  double sum = 0.0;
  for (size_t i = 1; i < path.size(); ++i) {
    if (T.edge_index(path[i - 1], path[i]) < 0)
      throw std::invalid_argument("holonomy: consecutive path vertices are not adjacent");
    sum += potential_value(T, alpha, path[i - 1], path[i]);
  }
  return sum;
}

double face_flux(const WeightedTriangulation& T, const MagneticPotential& alpha, Index x, Index y,
                 Index z) {
  if (!T.face_lookup(x, y, z)) throw std::invalid_argument("face_flux: not a face");
  return potential_value(T, alpha, x, y) + potential_value(T, alpha, y, z) +
         potential_value(T, alpha, z, x);
}

double face_flux(const WeightedTriangulation& T, const MagneticPotential& alpha, Index f) {
  const auto fc = T.face(f);
  return potential_value(T, alpha, fc.a, fc.b) + potential_value(T, alpha, fc.b, fc.c) +
         potential_value(T, alpha, fc.c, fc.a);
}

std::optional<GaugeFunction> trivial_gauge(const WeightedTriangulation& T,
                                           const MagneticPotential& alpha, double tol) {
  const Index nv = T.vertex_count();
  GaugeFunction f = GaugeFunction::Zero(nv);
  if (nv == 0) return f;

  std::vector<char> seen(nv, 0);
  std::deque<Index> queue = {0};
  seen[0] = 1;
  Index reached = 1;
  while (!queue.empty()) {
    const Index v = queue.front();
    queue.pop_front();
    for (Index w : T.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      f(w) = f(v) + potential_value(T, alpha, v, w);
      queue.push_back(w);
    }
  }
  if (reached != nv) throw std::invalid_argument("trivial_gauge: complex is disconnected");

  // Every non-tree edge closes a fundamental cycle; its holonomy is the
  // defect of f as a primitive of alpha on that edge.
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    if (std::abs(f(ed.head) - f(ed.tail) - alpha(e)) > tol) return std::nullopt;
  }
  return f;
}

MagneticPotential gauge_shift_potential(const WeightedTriangulation& T,
                                        const MagneticPotential& alpha, const GaugeFunction& f) {
  if (f.size() != T.vertex_count() || alpha.size() != T.edge_count())
    throw std::invalid_argument("gauge_shift_potential: size mismatch");
  return alpha + d0_flat(T, f);
}

}  // namespace magtri
