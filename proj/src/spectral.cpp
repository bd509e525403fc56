#include "magtri/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <stdexcept>

#include "magtri/generators.hpp"

namespace magtri {

namespace {

Block domain_of(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::D0: return Block::Vertices;
    case OperatorKind::Delta0: return Block::Edges;
    case OperatorKind::D1: return Block::Edges;
    case OperatorKind::Delta1: return Block::Faces;
    default: return Block::All;
  }
}

Block codomain_of(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::D0: return Block::Edges;
    case OperatorKind::Delta0: return Block::Vertices;
    case OperatorKind::D1: return Block::Faces;
    case OperatorKind::Delta1: return Block::Edges;
    default: return Block::All;
  }
}

Eigen::MatrixXcd assemble_d0(const WeightedTriangulation& T, const MagneticPotential& alpha) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(T.edge_count(), T.vertex_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    A(e, ed.head) += std::polar(1.0, -alpha(e) / 2.0);
    A(e, ed.tail) -= std::polar(1.0, alpha(e) / 2.0);
  }
  return A;
}

Eigen::MatrixXcd assemble_delta0(const WeightedTriangulation& T, const MagneticPotential& alpha) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(T.vertex_count(), T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    A(ed.head, e) += T.edge_weight(e) * std::polar(1.0, alpha(e) / 2.0) / T.vertex_weight(ed.head);
    A(ed.tail, e) -=
        T.edge_weight(e) * std::polar(1.0, -alpha(e) / 2.0) / T.vertex_weight(ed.tail);
  }
  return A;
}

Eigen::MatrixXcd assemble_d1(const WeightedTriangulation& T, const MagneticPotential& alpha) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(T.face_count(), T.edge_count());
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    const Index vs[3] = {fc.a, fc.b, fc.c};
    for (int i = 0; i < 3; ++i) {
      const Index x = vs[i], y = vs[(i + 1) % 3], z = vs[(i + 2) % 3];
      const Index e = T.edge_index(x, y);
      const double sign = (T.edge(e).tail == x) ? 1.0 : -1.0;
      const double phase =
          (potential_value(T, alpha, x, z) + potential_value(T, alpha, y, z)) / 6.0;
      A(f, e) += sign * std::polar(1.0, phase);
    }
  }
  return A;
}

Eigen::MatrixXcd assemble_delta1(const WeightedTriangulation& T, const MagneticPotential& alpha) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(T.edge_count(), T.face_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    for (const auto& corner : T.faces_at_edge(e)) {
      const Index t = corner.opposite;
      const FaceRef ref = T.face_lookup(ed.tail, ed.head, t);
      const double phase =
          (potential_value(T, alpha, t, ed.tail) + potential_value(T, alpha, t, ed.head)) / 6.0;
      A(e, corner.face) += static_cast<double>(ref.sign) * T.face_weight(corner.face) *
                           std::polar(1.0, phase) / T.edge_weight(e);
    }
  }
  return A;
}

}  // namespace

Eigen::VectorXd metric_diagonal(const WeightedTriangulation& T, Block block) {
  switch (block) {
    case Block::Vertices: return T.vertex_weights();
    case Block::Edges: return T.edge_weights();
    case Block::Faces: return T.face_weights();
    case Block::All: {
      Eigen::VectorXd w(T.total_cells());
      w << T.vertex_weights(), T.edge_weights(), T.face_weights();
      return w;
    }
  }
  throw std::logic_error("metric_diagonal: unreachable");
}

OperatorMatrix assemble(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        OperatorKind kind) {
  if (alpha.size() != T.edge_count())
    throw std::invalid_argument("assemble: potential size mismatch");
  OperatorMatrix M;
  M.domain = domain_of(kind);
  M.codomain = codomain_of(kind);
  M.domain_metric = metric_diagonal(T, M.domain);
  M.codomain_metric = metric_diagonal(T, M.codomain);

  const Index nv = T.vertex_count(), ne = T.edge_count(), nf = T.face_count();
  switch (kind) {
    case OperatorKind::D0: M.mat = assemble_d0(T, alpha); break;
    case OperatorKind::Delta0: M.mat = assemble_delta0(T, alpha); break;
    case OperatorKind::D1: M.mat = assemble_d1(T, alpha); break;
    case OperatorKind::Delta1: M.mat = assemble_delta1(T, alpha); break;
    case OperatorKind::GaussBonnet: {
      M.mat = Eigen::MatrixXcd::Zero(nv + ne + nf, nv + ne + nf);
      M.mat.block(nv, 0, ne, nv) = assemble_d0(T, alpha);
      M.mat.block(0, nv, nv, ne) = assemble_delta0(T, alpha);
      M.mat.block(nv + ne, nv, nf, ne) = assemble_d1(T, alpha);
      M.mat.block(nv, nv + ne, ne, nf) = assemble_delta1(T, alpha);
      break;
    }
    case OperatorKind::Laplacian: {
      const Eigen::MatrixXcd Tm = assemble(T, alpha, OperatorKind::GaussBonnet).mat;
      M.mat = Tm * Tm;
      break;
    }
  }
  return M;
}

Eigen::MatrixXcd metric_symmetrize(const OperatorMatrix& M) {
  const Eigen::VectorXd lhs = M.codomain_metric.cwiseSqrt();
  const Eigen::VectorXd rhs = M.domain_metric.cwiseSqrt().cwiseInverse();
  return lhs.asDiagonal() * M.mat * rhs.asDiagonal();
}

HermiticityReport hermitize_and_check(const OperatorMatrix& M, double rel_tol) {
  if (M.mat.rows() != M.mat.cols() || M.domain != M.codomain)
    throw std::invalid_argument("hermitize_and_check: operator is not square");
  HermiticityReport rep;
  if (M.mat.rows() == 0) {
    rep.pass = true;
    return rep;
  }
  const Eigen::MatrixXcd S = metric_symmetrize(M);
  rep.max_asym = (S - S.adjoint()).cwiseAbs().maxCoeff();
  rep.max_abs = S.cwiseAbs().maxCoeff();
  rep.pass = rep.max_asym <= rel_tol * std::max(rep.max_abs, 1e-300);
  return rep;
}

Eigen::VectorXd spectrum(const WeightedTriangulation& T, const MagneticPotential& alpha,
                         SpectrumBlock block, Index cell_cap) {
  if (T.total_cells() > cell_cap)
    throw std::invalid_argument(
        "spectrum: complex has " + std::to_string(T.total_cells()) + " cells, above the cap of " +
        std::to_string(cell_cap) + "; truncate the complex or raise the cap");

  const Index nv = T.vertex_count(), ne = T.edge_count(), nf = T.face_count();
  OperatorMatrix lap = assemble(T, alpha, OperatorKind::Laplacian);
  const Eigen::MatrixXcd S = metric_symmetrize(lap);

  std::vector<Index> keep;
  switch (block) {
    case SpectrumBlock::Degree0:
      for (Index i = 0; i < nv; ++i) keep.push_back(i);
      break;
    case SpectrumBlock::Degree1:
    case SpectrumBlock::Odd:
      for (Index i = 0; i < ne; ++i) keep.push_back(nv + i);
      break;
    case SpectrumBlock::Degree2:
      for (Index i = 0; i < nf; ++i) keep.push_back(nv + ne + i);
      break;
    case SpectrumBlock::Even:
      for (Index i = 0; i < nv; ++i) keep.push_back(i);
      for (Index i = 0; i < nf; ++i) keep.push_back(nv + ne + i);
      break;
    case SpectrumBlock::Full:
      for (Index i = 0; i < nv + ne + nf; ++i) keep.push_back(i);
      break;
  }

  Eigen::MatrixXcd sub(keep.size(), keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) sub(i, j) = S(keep[i], keep[j]);
  if (sub.rows() == 0) return Eigen::VectorXd();

  const Eigen::MatrixXcd herm = 0.5 * (sub + sub.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

CrossTermProbeReport cross_term_probe(const WeightedTriangulation& T,
                                      const MagneticPotential& alpha, Index trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("cross_term_probe: trials must be >= 1");
  CrossTermProbeReport rep;
  rep.trials = trials;
  rep.curvature_constant = bounded_curvature_audit(T, alpha).sup;
  rep.cprime = 3.0 * std::sqrt(rep.curvature_constant);

  SplitMix64 rng(seed);
  auto random_vector = [&rng](Index n) {
    Eigen::VectorXcd v(n);
    for (Index i = 0; i < n; ++i) v(i) = Cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return v;
  };

  for (Index t = 0; t < trials; ++t) {
    const Cochain0 g = random_vector(T.vertex_count());
    const Cochain2 eta = random_vector(T.face_count());
    const double den = norm0(T, g) * norm2(T, eta);
    if (den == 0.0) continue;
    const double num = std::abs(inner1(T, d0(T, alpha, g), delta1(T, alpha, eta)));
    rep.max_ratio = std::max(rep.max_ratio, num / den);
  }

  // Exact norm of the composed curvature block d1 . d0 : l2(V) -> l2(F).
  if (T.vertex_count() > 0 && T.face_count() > 0) {
    const Eigen::MatrixXcd K =
        assemble(T, alpha, OperatorKind::D1).mat * assemble(T, alpha, OperatorKind::D0).mat;
    const Eigen::MatrixXcd Ks = T.face_weights().cwiseSqrt().asDiagonal() * K *
                                T.vertex_weights().cwiseSqrt().cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Ks);
    rep.op_norm = (svd.singularValues().size() > 0) ? svd.singularValues()(0) : 0.0;
  }

  rep.factor_flag = std::max(rep.max_ratio, rep.op_norm) > rep.cprime + 1e-9;
  rep.pass_strict = rep.max_ratio <= rep.cprime + 1e-9;
  rep.pass_flagged = rep.max_ratio <= 2.0 * rep.cprime + 1e-9;
  return rep;
}

}  // namespace magtri
