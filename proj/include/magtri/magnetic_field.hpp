#pragma once

#include <optional>
#include <span>

#include "magtri/cochains.hpp"
#include "magtri/complex.hpp"

namespace magtri {

/// Vertex sequence with consecutive vertices adjacent; closed when the first
/// and last vertices coincide.
using PathSpec = std::vector<Index>;

/// Signed read alpha(x,y) of the potential on the oriented edge (x,y).
double potential_value(const WeightedTriangulation& T, const MagneticPotential& alpha, Index x,
                       Index y);

/// Hol_alpha(gamma) = sum of alpha along the path. Additive under
/// concatenation, negated under reversal. Throws when consecutive vertices
/// are not adjacent.
double holonomy(const WeightedTriangulation& T, const MagneticPotential& alpha,
                std::span<const Index> path);

/// Face flux  hat(alpha)(x,y,z) = alpha(x,y) + alpha(y,z) + alpha(z,x),
/// the holonomy of the face boundary. Skew-symmetric in the orientation.
double face_flux(const WeightedTriangulation& T, const MagneticPotential& alpha, Index x, Index y,
                 Index z);
/// Flux of the stored orientation of face f.
double face_flux(const WeightedTriangulation& T, const MagneticPotential& alpha, Index f);

/// Flat difference  d0(f)(e) = f(e+) - f(e-)  on canonical edges.
template <class D>
auto d0_flat(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& f)
    -> Eigen::Vector<typename D::Scalar, Eigen::Dynamic> {
  Eigen::Vector<typename D::Scalar, Eigen::Dynamic> out(T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    out(e) = f(ed.head) - f(ed.tail);
  }
  return out;
}

/// Decides whether alpha is trivial (zero holonomy) by integrating it along
/// a BFS spanning tree rooted at the smallest vertex and checking that every
/// non-tree edge closes with holonomy below `tol`. Returns the gauge witness
/// f with d0(f) = alpha and f(root) = 0, or nothing when some fundamental
/// cycle has non-zero holonomy. Throws on disconnected complexes.
std::optional<GaugeFunction> trivial_gauge(const WeightedTriangulation& T,
                                           const MagneticPotential& alpha, double tol = 1e-9);

/// Gauge transformation of the potential itself: alpha + d0(f). Face fluxes
/// are unchanged because d0(f) telescopes around cycles.
MagneticPotential gauge_shift_potential(const WeightedTriangulation& T,
                                        const MagneticPotential& alpha, const GaugeFunction& f);

}  // namespace magtri
