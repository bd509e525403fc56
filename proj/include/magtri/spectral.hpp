#pragma once

#include <cstdint>

#include "magtri/completeness.hpp"
#include "magtri/operators.hpp"

namespace magtri {

/// Cochain space a matrix acts on. All is the direct sum V + E + F.
enum class Block { Vertices, Edges, Faces, All };

enum class OperatorKind { D0, Delta0, D1, Delta1, GaussBonnet, Laplacian };

/// Dense matrix realization of an operator between cochain spaces in the
/// canonical cell basis, together with the diagonal Gram weights of the
/// weighted inner products on both sides. The matrix B of the formal adjoint
/// satisfies B = W_dom^{-1} M^H W_cod.
struct OperatorMatrix {
  Eigen::MatrixXcd mat;
  Block domain = Block::All;
  Block codomain = Block::All;
  Eigen::VectorXd domain_metric;
  Eigen::VectorXd codomain_metric;
};

/// Gram diagonal of the inner product on a block: c, r, s, or their
/// concatenation.
Eigen::VectorXd metric_diagonal(const WeightedTriangulation& T, Block block);

/// Assembles the operator directly from the cell formulas (independently of
/// the cochain-level functions, which makes the two cross-checkable).
/// Laplacian is assembled as the square of the Gauss-Bonnet matrix.
OperatorMatrix assemble(const WeightedTriangulation& T, const MagneticPotential& alpha,
                        OperatorKind kind);

/// W_cod^{1/2} M W_dom^{-1/2}: the matrix rewritten in orthonormal
/// coordinates of the weighted inner products. Formal self-adjointness
/// becomes plain Hermitian symmetry of this matrix.
Eigen::MatrixXcd metric_symmetrize(const OperatorMatrix& M);

struct HermiticityReport {
  double max_asym = 0.0;  // max |S - S^H| entry
  double max_abs = 0.0;   // max |S| entry
  bool pass = false;      // max_asym <= rel_tol * max_abs
};

/// Symmetry audit of a square operator under its weighted inner product.
HermiticityReport hermitize_and_check(const OperatorMatrix& M, double rel_tol = 1e-12);

/// Spectrum blocks: the three diagonal blocks of the Laplacian, the full
/// operator, and the even (degrees 0+2) / odd (degree 1) parity blocks used
/// by the supersymmetry check.
enum class SpectrumBlock { Degree0, Degree1, Degree2, Full, Even, Odd };

/// Sorted eigenvalues of the metric-symmetrized Laplacian block. Dense
/// solve; throws when the complex exceeds `cell_cap` total cells.
Eigen::VectorXd spectrum(const WeightedTriangulation& T, const MagneticPotential& alpha,
                         SpectrumBlock block, Index cell_cap = 4000);

/// Probe of the cross-term bound |<d0 g, delta1 eta>| <= C' |g| |eta| with
/// C' = 3 sqrt(C), C the bounded-curvature constant. Reports the Monte-Carlo
/// maximum of the ratio, the exact operator norm of the composed curvature
/// block, and whether the ratio exceeded C' by more than can be attributed
/// to rounding (the factor flag; the sine closed form behind the 3 sqrt(C)
/// bound carries a modulus-2 normalization subtlety that the flag records).
struct CrossTermProbeReport {
  double curvature_constant = 0.0;  // C
  double cprime = 0.0;              // 3 sqrt(C)
  double max_ratio = 0.0;
  double op_norm = 0.0;  // exact norm of the composed block, the sharp bound
  bool factor_flag = false;
  bool pass_strict = false;   // max_ratio <= C' + 1e-9
  bool pass_flagged = false;  // max_ratio <= 2 C' + 1e-9
  Index trials = 0;
};

CrossTermProbeReport cross_term_probe(const WeightedTriangulation& T,
                                      const MagneticPotential& alpha, Index trials,
                                      std::uint64_t seed = 0xC0FFEE);

}  // namespace magtri
