#include "magtri/cochains.hpp"

#include <stdexcept>

namespace magtri {

Cplx edge_value(const WeightedTriangulation& T, const Cochain1& phi, Index x, Index y) {
  const Index e = T.edge_index(x, y);
  if (e < 0) throw std::invalid_argument("edge_value: not an edge");
  const auto ed = T.edge(e);
  return (ed.tail == x) ? phi(e) : -phi(e);
}

Cplx face_value(const WeightedTriangulation& T, const Cochain2& psi, Index x, Index y, Index z) {
  const FaceRef ref = T.face_lookup(x, y, z);
  if (!ref) throw std::invalid_argument("face_value: not a face");
  return static_cast<double>(ref.sign) * psi(ref.index);
}

Cochain0 gauge_apply0(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain0& g) {
  if (f.size() != T.vertex_count() || g.size() != T.vertex_count())
    throw std::invalid_argument("gauge_apply0: size mismatch");
  Cochain0 out(g.size());
  for (Index v = 0; v < g.size(); ++v) out(v) = std::polar(1.0, f(v)) * g(v);
  return out;
}

Cochain1 gauge_apply1(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain1& phi) {
  if (f.size() != T.vertex_count() || phi.size() != T.edge_count())
    throw std::invalid_argument("gauge_apply1: size mismatch");
  const Eigen::VectorXd ft = tilde(T, f);
  Cochain1 out(phi.size());
  for (Index e = 0; e < phi.size(); ++e) out(e) = std::polar(1.0, ft(e)) * phi(e);
  return out;
}

Cochain2 gauge_apply2(const WeightedTriangulation& T, const GaugeFunction& f, const Cochain2& psi) {
  if (f.size() != T.vertex_count() || psi.size() != T.face_count())
    throw std::invalid_argument("gauge_apply2: size mismatch");
  const Eigen::VectorXd ftt = dbtilde(T, f);
  Cochain2 out(psi.size());
  for (Index k = 0; k < psi.size(); ++k) out(k) = std::polar(1.0, ftt(k)) * psi(k);
  return out;
}

}  // namespace magtri
