#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "magtri/complex.hpp"

namespace magtri {

using Cplx = std::complex<double>;

/// Complex function on vertices.
using Cochain0 = Eigen::VectorXcd;
/// Skew-symmetric complex edge function; one value per canonical edge, the
/// value on a reversed edge is the negation.
using Cochain1 = Eigen::VectorXcd;
/// Alternating complex face function; one value per canonical face, values
/// on reordered triples carry the permutation sign.
using Cochain2 = Eigen::VectorXcd;
/// Real vertex function f acting as exp(i f) on all cochain degrees.
using GaugeFunction = Eigen::VectorXd;

/// Signed read of a 1-cochain on the oriented edge (x,y).
Cplx edge_value(const WeightedTriangulation& T, const Cochain1& phi, Index x, Index y);
/// Signed read of a 2-cochain on the ordered triple (x,y,z).
Cplx face_value(const WeightedTriangulation& T, const Cochain2& psi, Index x, Index y, Index z);

/// <f1,f2> = sum_x c(x) f1(x) conj(f2(x)).
template <class D1, class D2>
Cplx inner0(const WeightedTriangulation& T, const Eigen::MatrixBase<D1>& f1,
            const Eigen::MatrixBase<D2>& f2) {
  if (f1.size() != T.vertex_count() || f2.size() != T.vertex_count())
    throw std::invalid_argument("inner0: cochain size does not match the complex");
  // The value product comes first so <w,w> has an exactly zero imaginary
  // part and Hermitian symmetry holds to the last bit.
  Cplx sum = 0.0;
  for (Index v = 0; v < T.vertex_count(); ++v)
    sum += (Cplx(f1(v)) * std::conj(Cplx(f2(v)))) * T.vertex_weight(v);
  return sum;
}

/// <phi1,phi2> = (1/2) sum over both edge orientations of r phi1 conj(phi2),
/// evaluated as a plain weighted sum over canonical edges (the integrand is
/// orientation-invariant, so the 1/2 cancels the double count).
template <class D1, class D2>
Cplx inner1(const WeightedTriangulation& T, const Eigen::MatrixBase<D1>& p1,
            const Eigen::MatrixBase<D2>& p2) {
  if (p1.size() != T.edge_count() || p2.size() != T.edge_count())
    throw std::invalid_argument("inner1: cochain size does not match the complex");
  Cplx sum = 0.0;
  for (Index e = 0; e < T.edge_count(); ++e)
    sum += (Cplx(p1(e)) * std::conj(Cplx(p2(e)))) * T.edge_weight(e);
  return sum;
}

/// <psi1,psi2> = (1/6) sum over all six orderings of s psi1 conj(psi2),
/// evaluated once per canonical face for the same reason as inner1.
template <class D1, class D2>
Cplx inner2(const WeightedTriangulation& T, const Eigen::MatrixBase<D1>& q1,
            const Eigen::MatrixBase<D2>& q2) {
  if (q1.size() != T.face_count() || q2.size() != T.face_count())
    throw std::invalid_argument("inner2: cochain size does not match the complex");
  Cplx sum = 0.0;
  for (Index f = 0; f < T.face_count(); ++f)
    sum += (Cplx(q1(f)) * std::conj(Cplx(q2(f)))) * T.face_weight(f);
  return sum;
}

template <class D>
double norm0(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& f) {
  return std::sqrt(std::max(0.0, inner0(T, f, f).real()));
}
template <class D>
double norm1(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& p) {
  return std::sqrt(std::max(0.0, inner1(T, p, p).real()));
}
template <class D>
double norm2(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& q) {
  return std::sqrt(std::max(0.0, inner2(T, q, q).real()));
}

/// Edge symmetrization  tilde(f)(e) = (f(e-) + f(e+)) / 2.
template <class D>
auto tilde(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& f)
    -> Eigen::Vector<typename D::Scalar, Eigen::Dynamic> {
  Eigen::Vector<typename D::Scalar, Eigen::Dynamic> out(T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    out(e) = (f(ed.tail) + f(ed.head)) / 2.0;
  }
  return out;
}

/// Face symmetrization  dbtilde(f)(x,y,z) = (f(x) + f(y) + f(z)) / 3.
template <class D>
auto dbtilde(const WeightedTriangulation& T, const Eigen::MatrixBase<D>& f)
    -> Eigen::Vector<typename D::Scalar, Eigen::Dynamic> {
  Eigen::Vector<typename D::Scalar, Eigen::Dynamic> out(T.face_count());
  for (Index f2 = 0; f2 < T.face_count(); ++f2) {
    const auto fc = T.face(f2);
    out(f2) = (f(fc.a) + f(fc.b) + f(fc.c)) / 3.0;
  }
  return out;
}

/// Gauge action exp(if).g on 0-cochains.
Cochain0 gauge_apply0(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain0& g);
/// Gauge action exp(i tilde(f)).phi on 1-cochains.
Cochain1 gauge_apply1(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain1& phi);
/// Gauge action exp(i dbtilde(f)).psi on 2-cochains.
Cochain2 gauge_apply2(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain2& psi);

}  // namespace magtri
