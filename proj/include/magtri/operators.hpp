#pragma once

#include "magtri/cochains.hpp"
#include "magtri/complex.hpp"
#include "magtri/magnetic_field.hpp"

namespace magtri {

/// Magnetic difference operator,
///   d0(g)(x,y) = exp(i alpha(y,x)/2) g(y) - exp(i alpha(x,y)/2) g(x).
/// The output is skew-symmetric because alpha is.
Cochain1 d0(const WeightedTriangulation& T, const MagneticPotential& alpha, const Cochain0& g);

/// Formal adjoint of d0 under the weighted inner products,
///   delta0(phi)(x) = (1/c(x)) sum_{e : e+ = x} r(e) exp(i alpha(e)/2) phi(e).
Cochain0 delta0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                const Cochain1& phi);

/// Exterior magnetic derivative,
///   d1(phi)(x,y,z) = exp(i(a(x,z)+a(y,z))/6) phi(x,y)
///                  + exp(i(a(y,x)+a(z,x))/6) phi(y,z)
///                  + exp(i(a(z,y)+a(x,y))/6) phi(z,x)    (a = alpha).
Cochain2 d1(const WeightedTriangulation& T, const MagneticPotential& alpha, const Cochain1& phi);

/// Formal adjoint of d1,
///   delta1(psi)(x,y) = (1/r(x,y)) sum_{t in F_xy} s(x,y,t)
///                      exp(i(a(t,x)+a(t,y))/6) psi(x,y,t).
Cochain1 delta1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                const Cochain2& psi);

/// Wedge of a scalar 1-form xi with a 1-form phi, twisted by alpha:
/// three cyclic terms exp(-i(a(z,x)+a(z,y))/6)(xi(z,x)+xi(z,y)) phi(x,y) + ...
/// At alpha = 0 this is the flat discrete wedge.
template <class D>
Cochain2 wedge_alpha(const WeightedTriangulation& T, const MagneticPotential& alpha,
                     const Eigen::MatrixBase<D>& xi, const Cochain1& phi) {
  auto xival = [&](Index x, Index y) -> Cplx {
    const Index e = T.edge_index(x, y);
    return (T.edge(e).tail == x) ? Cplx(xi(e)) : -Cplx(xi(e));
  };
  Cochain2 out = Cochain2::Zero(T.face_count());
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    const Index x = fc.a, y = fc.b, z = fc.c;
    const double axy = potential_value(T, alpha, x, y);
    const double ayz = potential_value(T, alpha, y, z);
    const double azx = potential_value(T, alpha, z, x);
    out(f) = std::polar(1.0, -(azx - ayz) / 6.0) * (xival(z, x) + xival(z, y)) * edge_value(T, phi, x, y) +
             std::polar(1.0, -(axy - azx) / 6.0) * (xival(x, y) + xival(x, z)) * edge_value(T, phi, y, z) +
             std::polar(1.0, -(ayz - axy) / 6.0) * (xival(y, z) + xival(y, x)) * edge_value(T, phi, z, x);
  }
  return out;
}

/// Element of the full space l2(V) + l2(E) + l2(F).
struct CochainTriple {
  Cochain0 f;
  Cochain1 phi;
  Cochain2 psi;
};

Cplx inner_full(const WeightedTriangulation& T, const CochainTriple& a, const CochainTriple& b);
double norm_full(const WeightedTriangulation& T, const CochainTriple& a);

/// Gauss-Bonnet operator T = d + delta across all degrees:
///   (f, phi, psi) -> (delta0 phi, d0 f + delta1 psi, d1 phi).
/// Symmetric for the direct-sum inner product.
CochainTriple gauss_bonnet(const WeightedTriangulation& T, const MagneticPotential& alpha,
                           const CochainTriple& F);

/// Hodge Laplacian as the two-fold composition of gauss_bonnet.
CochainTriple laplacian(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        const CochainTriple& F);

/// Curvature of the connection: the composed operator d1 . d0. Vanishes
/// exactly when sin(flux/6) vanishes on every face.
Cochain2 curvature_d1d0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        const Cochain0& f);

/// Formal adjoint of the curvature: the composed operator delta0 . delta1.
Cochain0 curvature_delta0delta1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                                const Cochain2& psi);

/// Calibration of the sine closed forms against the compositions, measured
/// once on a reference triangle and cached. The compositions are the ground
/// truth; the closed forms below are scaled by these factors.
struct CurvatureCalibration {
  Cplx d1d0_factor;
  Cplx delta0delta1_factor;
};
const CurvatureCalibration& curvature_calibration();

/// Sine closed form of d1 . d0, per face
///   -sin(flux/6) [ exp(i(a(x,z)+a(x,y))/3) f(x) + (cyclic in y, z) ],
/// scaled by the measured calibration factor.
Cochain2 curvature_closed_d1d0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                               const Cochain0& f);

/// Sine closed form of delta0 . delta1, per vertex
///   (-3/c(x)) sum over ordered faces at x of s sin(flux/6)
///   exp(-i(a(x,z)+a(x,y))/3) psi(x,y,z),
/// scaled by the measured calibration factor.
Cochain0 curvature_closed_delta0delta1(const WeightedTriangulation& T,
                                       const MagneticPotential& alpha, const Cochain2& psi);

/// Max absolute residuals of the four derivation identities
///   d0(fg), delta0(tilde(f) phi), d1(tilde(f) phi), delta1(dbtilde(f) psi)
/// over all cells, plus the common magnitude scale of the compared sides.
struct LeibnizReport {
  double d0_product = 0.0;
  double delta0_product = 0.0;
  double d1_product = 0.0;
  double delta1_product = 0.0;
  double scale = 1.0;
  double max_residual() const;
};

LeibnizReport leibniz_residuals(const WeightedTriangulation& T, const MagneticPotential& alpha,
                                const Cochain0& f, const Cochain0& g, const Cochain1& phi,
                                const Cochain2& psi);

}  // namespace magtri
