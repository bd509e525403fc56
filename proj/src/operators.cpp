#include "magtri/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace magtri {

namespace {

void require_sizes(const WeightedTriangulation& T, const MagneticPotential& alpha) {
  if (alpha.size() != T.edge_count())
    throw std::invalid_argument("magnetic potential size does not match the complex");
}

}  // namespace

Cochain1 d0(const WeightedTriangulation& T, const MagneticPotential& alpha, const Cochain0& g) {
  require_sizes(T, alpha);
  if (g.size() != T.vertex_count()) throw std::invalid_argument("d0: cochain size mismatch");
  Cochain1 out(T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    out(e) = std::polar(1.0, -alpha(e) / 2.0) * g(ed.head) -
             std::polar(1.0, alpha(e) / 2.0) * g(ed.tail);
  }
  return out;
}

Cochain0 delta0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                const Cochain1& phi) {
  require_sizes(T, alpha);
  if (phi.size() != T.edge_count()) throw std::invalid_argument("delta0: cochain size mismatch");
  Cochain0 out = Cochain0::Zero(T.vertex_count());
  // Each canonical edge (u,v) enters the sum at x = v as itself and at
  // x = u with reversed orientation (alpha and phi both negated).
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    out(ed.head) += T.edge_weight(e) * std::polar(1.0, alpha(e) / 2.0) * phi(e);
    out(ed.tail) -= T.edge_weight(e) * std::polar(1.0, -alpha(e) / 2.0) * phi(e);
  }
  for (Index v = 0; v < T.vertex_count(); ++v) out(v) /= T.vertex_weight(v);
  return out;
}

Cochain2 d1(const WeightedTriangulation& T, const MagneticPotential& alpha, const Cochain1& phi) {
  require_sizes(T, alpha);
  if (phi.size() != T.edge_count()) throw std::invalid_argument("d1: cochain size mismatch");
  Cochain2 out(T.face_count());
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    const Index x = fc.a, y = fc.b, z = fc.c;
    const double axy = potential_value(T, alpha, x, y);
    const double ayz = potential_value(T, alpha, y, z);
    const double azx = potential_value(T, alpha, z, x);
    // alpha(x,z) = -azx, alpha(y,x) = -axy, alpha(z,y) = -ayz.
    out(f) = std::polar(1.0, (-azx + ayz) / 6.0) * edge_value(T, phi, x, y) +
             std::polar(1.0, (-axy + azx) / 6.0) * edge_value(T, phi, y, z) +
             std::polar(1.0, (-ayz + axy) / 6.0) * edge_value(T, phi, z, x);
  }
  return out;
}

Cochain1 delta1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                const Cochain2& psi) {
  require_sizes(T, alpha);
  if (psi.size() != T.face_count()) throw std::invalid_argument("delta1: cochain size mismatch");
  Cochain1 out = Cochain1::Zero(T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    Cplx sum = 0.0;
    for (const auto& corner : T.faces_at_edge(e)) {
      const Index t = corner.opposite;
      const double phase =
          (potential_value(T, alpha, t, ed.tail) + potential_value(T, alpha, t, ed.head)) / 6.0;
      sum += T.face_weight(corner.face) * std::polar(1.0, phase) *
             face_value(T, psi, ed.tail, ed.head, t);
    }
    out(e) = sum / T.edge_weight(e);
  }
  return out;
}

Cplx inner_full(const WeightedTriangulation& T, const CochainTriple& a, const CochainTriple& b) {
  return inner0(T, a.f, b.f) + inner1(T, a.phi, b.phi) + inner2(T, a.psi, b.psi);
}

double norm_full(const WeightedTriangulation& T, const CochainTriple& a) {
  return std::sqrt(std::max(0.0, inner_full(T, a, a).real()));
}

CochainTriple gauss_bonnet(const WeightedTriangulation& T, const MagneticPotential& alpha,
                           const CochainTriple& F) {
  CochainTriple out;
  out.f = delta0(T, alpha, F.phi);
  out.phi = d0(T, alpha, F.f) + delta1(T, alpha, F.psi);
  out.psi = d1(T, alpha, F.phi);
  return out;
}

CochainTriple laplacian(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        const CochainTriple& F) {
  return gauss_bonnet(T, alpha, gauss_bonnet(T, alpha, F));
}

Cochain2 curvature_d1d0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        const Cochain0& f) {
  return d1(T, alpha, d0(T, alpha, f));
}

Cochain0 curvature_delta0delta1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                                const Cochain2& psi) {
  return delta0(T, alpha, delta1(T, alpha, psi));
}

namespace {

// Sine expressions before calibration.
Cochain2 raw_closed_d1d0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                         const Cochain0& f) {
  Cochain2 out(T.face_count());
  for (Index k = 0; k < T.face_count(); ++k) {
    const auto fc = T.face(k);
    const Index x = fc.a, y = fc.b, z = fc.c;
    const double axy = potential_value(T, alpha, x, y);
    const double ayz = potential_value(T, alpha, y, z);
    const double azx = potential_value(T, alpha, z, x);
    const double flux = axy + ayz + azx;
    out(k) = -std::sin(flux / 6.0) *
             (std::polar(1.0, (-azx + axy) / 3.0) * f(x) +
              std::polar(1.0, (ayz - axy) / 3.0) * f(y) +
              std::polar(1.0, (azx - ayz) / 3.0) * f(z));
  }
  return out;
}

Cochain0 raw_closed_delta0delta1(const WeightedTriangulation& T, const MagneticPotential& alpha,
                                 const Cochain2& psi) {
  Cochain0 out = Cochain0::Zero(T.vertex_count());
  // Two ordered faces start at x per incident face; the summand is invariant
  // under swapping the remaining two vertices, hence the factor 2.
  for (Index k = 0; k < T.face_count(); ++k) {
    const auto fc = T.face(k);
    const Index vs[3] = {fc.a, fc.b, fc.c};
    for (int i = 0; i < 3; ++i) {
      const Index x = vs[i], y = vs[(i + 1) % 3], z = vs[(i + 2) % 3];
      const double axy = potential_value(T, alpha, x, y);
      const double axz = potential_value(T, alpha, x, z);
      const double flux = face_flux(T, alpha, x, y, z);
      out(x) += -3.0 * 2.0 * T.face_weight(k) * std::sin(flux / 6.0) *
                std::polar(1.0, -(axz + axy) / 3.0) * face_value(T, psi, x, y, z);
    }
  }
  for (Index v = 0; v < T.vertex_count(); ++v) out(v) /= T.vertex_weight(v);
  return out;
}

CurvatureCalibration measure_calibration() {
  // Reference simple triangle with a unit potential around the cycle.
  ComplexBuilder b;
  b.add_vertex("x");
  b.add_vertex("y");
  b.add_vertex("z");
  b.add_edge("x", "y", 1.0, 1.0);
  b.add_edge("y", "z", 1.0, 1.0);
  b.add_edge("z", "x", 1.0, 1.0);
  b.add_face("x", "y", "z");
  const auto mt = b.build();

  Cochain0 dirac = Cochain0::Zero(3);
  dirac(0) = 1.0;
  const Cplx comp = curvature_d1d0(mt.complex, mt.alpha, dirac)(0);
  const Cplx raw = raw_closed_d1d0(mt.complex, mt.alpha, dirac)(0);

  Cochain2 psi = Cochain2::Ones(1);
  const Cplx comp_adj = curvature_delta0delta1(mt.complex, mt.alpha, psi)(0);
  const Cplx raw_adj = raw_closed_delta0delta1(mt.complex, mt.alpha, psi)(0);

  return {comp / raw, comp_adj / raw_adj};
}

}  // namespace

const CurvatureCalibration& curvature_calibration() {
  static const CurvatureCalibration cal = measure_calibration();
  return cal;
}

Cochain2 curvature_closed_d1d0(const WeightedTriangulation& T, const MagneticPotential& alpha,
                               const Cochain0& f) {
  return curvature_calibration().d1d0_factor * raw_closed_d1d0(T, alpha, f);
}

Cochain0 curvature_closed_delta0delta1(const WeightedTriangulation& T,
                                       const MagneticPotential& alpha, const Cochain2& psi) {
  return curvature_calibration().delta0delta1_factor * raw_closed_delta0delta1(T, alpha, psi);
}

double LeibnizReport::max_residual() const {
  return std::max(std::max(d0_product, delta0_product), std::max(d1_product, delta1_product));
}

LeibnizReport leibniz_residuals(const WeightedTriangulation& T, const MagneticPotential& alpha,
                                const Cochain0& f, const Cochain0& g, const Cochain1& phi,
                                const Cochain2& psi) {
  require_sizes(T, alpha);
  LeibnizReport rep;
  auto track = [&rep](double& slot, const Eigen::VectorXcd& lhs, const Eigen::VectorXcd& rhs) {
    const double resid = lhs.size() ? (lhs - rhs).cwiseAbs().maxCoeff() : 0.0;
    slot = std::max(slot, resid);
    const double mag = lhs.size() ? std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()) : 0.0;
    rep.scale = std::max(rep.scale, mag);
  };

  const Cochain1 d0g = d0(T, alpha, g);
  const Eigen::VectorXcd d0f_flat = d0_flat(T, f);
  const Eigen::VectorXcd ft = tilde(T, f);
  const Eigen::VectorXcd ftt = dbtilde(T, f);

  // d0 of a product: d0(fg)(x,y) = f(y) d0(g)(x,y) + e^{i a(x,y)/2} d0(f)(x,y) g(x).
  // The right-hand side is not skew in (x,y), so both orientations are
  // separate identities and both are evaluated.
  {
    const Cochain0 fg = f.cwiseProduct(g);
    const Cochain1 lhs = d0(T, alpha, fg);
    Cochain1 rhs(T.edge_count());
    Cochain1 lhs_rev(T.edge_count());
    Cochain1 rhs_rev(T.edge_count());
    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      rhs(e) = f(ed.head) * d0g(e) + std::polar(1.0, alpha(e) / 2.0) * d0f_flat(e) * g(ed.tail);
      lhs_rev(e) = -lhs(e);
      rhs_rev(e) = f(ed.tail) * (-d0g(e)) +
                   std::polar(1.0, -alpha(e) / 2.0) * (-d0f_flat(e)) * g(ed.head);
    }
    track(rep.d0_product, lhs, rhs);
    track(rep.d0_product, lhs_rev, rhs_rev);
  }

  // delta0 of tilde(f) phi.
  {
    const Cochain1 ftphi = ft.cwiseProduct(phi);
    const Cochain0 lhs = delta0(T, alpha, ftphi);
    const Cochain0 d0phi = delta0(T, alpha, phi);
    Cochain0 rhs(T.vertex_count());
    for (Index x = 0; x < T.vertex_count(); ++x) {
      Cplx corr = 0.0;
      for (Index y : T.neighbors(x)) {
        const Index e = T.edge_index(x, y);
        const double axy = potential_value(T, alpha, x, y);
        const Cplx dfxy = (f(y) - f(x));
        corr += T.edge_weight(e) * std::polar(1.0, -axy / 2.0) * dfxy * edge_value(T, phi, x, y);
      }
      rhs(x) = f(x) * d0phi(x) - corr / (2.0 * T.vertex_weight(x));
    }
    track(rep.delta0_product, lhs, rhs);
  }

  // d1 of tilde(f) phi.
  {
    const Cochain1 ftphi = ft.cwiseProduct(phi);
    const Cochain2 lhs = d1(T, alpha, ftphi);
    const Cochain2 rhs =
        ftt.cwiseProduct(d1(T, alpha, phi)) + wedge_alpha(T, alpha, d0f_flat, phi) / 6.0;
    track(rep.d1_product, lhs, rhs);
  }

  // delta1 of dbtilde(f) psi.
  {
    const Cochain2 fttpsi = ftt.cwiseProduct(psi);
    const Cochain1 lhs = delta1(T, alpha, fttpsi);
    const Cochain1 d1psi = delta1(T, alpha, psi);
    Cochain1 rhs(T.edge_count());
    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      Cplx corr = 0.0;
      for (const auto& corner : T.faces_at_edge(e)) {
        const Index t = corner.opposite;
        const double phase =
            (potential_value(T, alpha, t, ed.tail) + potential_value(T, alpha, t, ed.head)) / 6.0;
        const Cplx dsum = (f(t) - f(ed.tail)) + (f(t) - f(ed.head));
        corr += T.face_weight(corner.face) * std::polar(1.0, phase) * dsum *
                face_value(T, psi, ed.tail, ed.head, t);
      }
      rhs(e) = ft(e) * d1psi(e) + corr / (6.0 * T.edge_weight(e));
    }
    track(rep.delta1_product, lhs, rhs);
  }

  rep.scale = std::max(rep.scale, 1.0);
  return rep;
}

}  // namespace magtri
