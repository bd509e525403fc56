#pragma once

#include <cstdint>

#include "magtri/complex.hpp"

namespace magtri {

/// SplitMix64 sequence. The exact algorithm is part of the repository
/// contract: regenerating with the same seed must reproduce files bit for
/// bit, so the generator must never change silently.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  Index range(Index n) { return static_cast<Index>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

/// Partition of the vertices into spheres S_0, S_1, ... such that edges only
/// join vertices of the same or consecutive spheres.
struct SphereDecomposition {
  std::vector<std::vector<Index>> spheres;
  std::vector<Index> sphere_of;
  Index count() const { return static_cast<Index>(spheres.size()); }
};

/// Checks the decomposition invariant; empty when valid.
std::vector<std::string> validate_decomposition(const WeightedTriangulation& T,
                                                const SphereDecomposition& d);

struct GeneratedFamily {
  WeightedTriangulation complex;
  MagneticPotential alpha;
  SphereDecomposition decomposition;
};

/// Book-like family: sphere 0 is the origin, odd spheres are adjacent vertex
/// pairs (the spine), even spheres are independent sets whose vertices are
/// adjacent to both vertices of each neighbouring odd sphere, and every odd
/// pair spans a face with every vertex of the adjacent even spheres. Even
/// sphere sizes are derived so the spine valence equals
/// floor((2n+1)^beta) + 4; `depth` is the number of spheres generated.
struct BookLikeSpec {
  Index depth = 10;
  double beta = 1.0;
  bool beta_weights = false;  // false: simple weights; true: the val/|x| scheme
};

/// Deterministic book-like truncation; alpha defaults to zero. Throws when
/// beta is outside (0,2], depth < 1, or a derived sphere size is not
/// positive (the offending level is named).
GeneratedFamily gen_book_like(const BookLikeSpec& spec);

/// One-dimensional decomposition family with full bipartite edges between
/// consecutive spheres, simple weights, and a selectable face rule.
struct OneDimSpec {
  std::vector<Index> sphere_sizes;
  bool intra_edges = true;  // complete graph inside each sphere
  enum class FaceRule { None, Cross, All } face_rule = FaceRule::Cross;
};

GeneratedFamily gen_onedim(const OneDimSpec& spec);

/// The sphere-index potential alpha(x,y) = (|x| - |y|) pi: zero inside a
/// sphere, +-pi across consecutive spheres.
MagneticPotential potential_sphere_pi(const WeightedTriangulation& T,
                                      const SphereDecomposition& d);

/// Seeded random weighted triangulation. A spanning tree keeps the graph
/// connected; faces are drawn only among 3-cycles that actually exist, so
/// not every 3-cycle becomes a face.
struct RandomSpec {
  std::uint64_t seed = 0;
  Index vertices = 12;
  double edge_density = 0.3;
  double face_density = 0.5;
  double weight_min = 0.5;
  double weight_max = 2.0;
  double alpha_max = 3.141592653589793;  // alpha uniform in [-alpha_max, alpha_max]
};

MagneticTriangulation gen_random(const RandomSpec& spec);

/// Divided degrees of a 1-dimensional decomposition: per-sphere sups of the
/// cross valences (eta), of the face counts over cross edges (beta) and of
/// the cross face counts over intra edges (gamma), the series term
/// xi(n,n+1) = eta_n^+ + eta_{n+1}^- + beta_n^+ + gamma_n^+ + gamma_{n+1}^-,
/// and the partial sums of 1/sqrt(xi) (a divergence diagnostic only; a
/// truncation cannot decide the series).
struct DividedDegreesRow {
  Index n = 0;
  double eta_plus = 0.0, eta_minus = 0.0;
  double beta_plus = 0.0, beta_minus = 0.0;
  double gamma_plus = 0.0, gamma_minus = 0.0;
};

struct DividedDegrees {
  std::vector<DividedDegreesRow> rows;
  std::vector<double> xi;            // xi(n,n+1) for n = 0..count-2
  std::vector<double> partial_sums;  // running sums of 1/sqrt(xi)
};

DividedDegrees divided_degrees(const WeightedTriangulation& T, const SphereDecomposition& d);

}  // namespace magtri
