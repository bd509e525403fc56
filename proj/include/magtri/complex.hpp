#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace magtri {

using Index = Eigen::Index;

/// Directed edge between two vertex indices; reversal swaps tail and head.
struct OrientedEdge {
  Index tail = -1;
  Index head = -1;
  OrientedEdge reversed() const { return {head, tail}; }
  bool operator==(const OrientedEdge&) const = default;
};

/// Ordered vertex triple naming a face. Cyclic rotations keep the
/// orientation class, swapping two vertices flips it.
struct OrientedFace {
  Index a = -1;
  Index b = -1;
  Index c = -1;
  bool operator==(const OrientedFace&) const = default;
};

/// Face lookup result: stored face index plus the sign of the queried
/// ordering relative to the stored (positive) orientation.
struct FaceRef {
  Index index = -1;
  int sign = 0;
  explicit operator bool() const { return index >= 0; }
};

/// A face seen from one of its edges: the opposite vertex and the face id.
struct FaceCorner {
  Index opposite = -1;
  Index face = -1;
};

struct Violation {
  std::string rule;
  std::string cell;
  std::string detail;
};

/// Immutable weighted triangulation (2-simplicial complex).
///
/// Each undirected edge is stored once with tail < head; each face is stored
/// once, rotated so its smallest vertex comes first, and the stored order
/// fixes the positive orientation class. Vertices are indexed in increasing
/// name order, so index order is the canonical vertex order. Positive weights
/// c (vertices), r (edges) and s (faces) drive the weighted degrees and all
/// inner products downstream. Adjacency maps are precomputed at construction
/// and the object is safe to share across threads afterwards.
class WeightedTriangulation {
 public:
  WeightedTriangulation() = default;

  /// Builds the complex from canonicalizable raw data. Throws
  /// std::invalid_argument on structural defects that make the data
  /// unrepresentable (duplicate vertices/edges/faces, unknown indices).
  /// Invariant violations (loops, non-positive weights, faces missing an
  /// edge, disconnectedness) are representable and reported by validate().
  static WeightedTriangulation from_parts(std::vector<std::string> names,
                                          Eigen::VectorXd vertex_weights,
                                          std::vector<OrientedEdge> edges,
                                          Eigen::VectorXd edge_weights,
                                          std::vector<OrientedFace> faces,
                                          Eigen::VectorXd face_weights);

  Index vertex_count() const { return static_cast<Index>(names_.size()); }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }
  Index face_count() const { return static_cast<Index>(faces_.size()); }
  Index total_cells() const { return vertex_count() + edge_count() + face_count(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(Index v) const { return names_.at(v); }
  /// Index of a named vertex, or -1 when absent.
  Index vertex_index(std::string_view name) const;

  const Eigen::VectorXd& vertex_weights() const { return c_; }
  const Eigen::VectorXd& edge_weights() const { return r_; }
  const Eigen::VectorXd& face_weights() const { return s_; }
  double vertex_weight(Index v) const { return c_(v); }
  double edge_weight(Index e) const { return r_(e); }
  double face_weight(Index f) const { return s_(f); }

  OrientedEdge edge(Index e) const { return edges_.at(e); }
  OrientedFace face(Index f) const { return faces_.at(f); }

  /// Neighbours V(x), sorted by index.
  const std::vector<Index>& neighbors(Index v) const { return neighbors_.at(v); }
  bool adjacent(Index u, Index v) const { return edge_index(u, v) >= 0; }

  /// Canonical index of the undirected edge {u,v}, or -1.
  Index edge_index(Index u, Index v) const;
  /// Stored face index and relative orientation sign for the triple (x,y,z);
  /// index -1 when {x,y,z} is not a face.
  FaceRef face_lookup(Index x, Index y, Index z) const;

  /// F_e for the canonical edge e: faces containing e, each reported once
  /// with its opposite vertex.
  const std::vector<FaceCorner>& faces_at_edge(Index e) const { return faces_at_edge_.at(e); }
  /// Faces containing the vertex v, each once.
  const std::vector<Index>& faces_at_vertex(Index v) const { return faces_at_vertex_.at(v); }

  bool is_connected() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> name_index_;
  Eigen::VectorXd c_;

  std::vector<OrientedEdge> edges_;
  Eigen::VectorXd r_;
  std::unordered_map<long long, Index> edge_map_;

  std::vector<OrientedFace> faces_;
  Eigen::VectorXd s_;
  std::unordered_map<long long, Index> face_map_;

  std::vector<std::vector<Index>> neighbors_;
  std::vector<std::vector<FaceCorner>> faces_at_edge_;
  std::vector<std::vector<Index>> faces_at_vertex_;

  long long edge_key(Index u, Index v) const;
  long long face_key(Index a, Index b, Index c) const;
};

/// Weighted vertex degree deg_V(x) = (1/c(x)) sum_{y~x} r(x,y).
/// Equals the combinatorial degree when all weights are 1.
double degree_vertex(const WeightedTriangulation& T, Index x);

/// Weighted edge degree deg_E(x,y) = (1/r(x,y)) sum_{z in F_xy} s(x,y,z).
/// Orientation-independent; zero when the edge bounds no face.
double degree_edge(const WeightedTriangulation& T, Index e);
double degree_edge(const WeightedTriangulation& T, Index x, Index y);

/// Checks every structural invariant (no loops, faces are 3-cycles of edges,
/// strictly positive weights, connectedness). Returns one entry per broken
/// rule; an empty list means the complex is valid.
std::vector<Violation> validate(const WeightedTriangulation& T);

/// Skew-symmetric real edge function stored on canonical edges; the value on
/// a reversed edge is the negation. Used for the magnetic potential alpha.
using MagneticPotential = Eigen::VectorXd;

/// A triangulation together with its magnetic potential, as serialized in
/// one document.
struct MagneticTriangulation {
  WeightedTriangulation complex;
  MagneticPotential alpha;
};

/// Incremental builder; canonicalizes on build(). Vertex order in the built
/// complex follows increasing name order, not insertion order.
class ComplexBuilder {
 public:
  /// Registers a vertex; throws on duplicate names.
  void add_vertex(std::string name, double c = 1.0);
  /// Registers an undirected edge by vertex names; alpha is the potential on
  /// the oriented edge (u,v). Throws on unknown names or duplicate edges;
  /// a duplicate whose alpha does not negate under reversal is reported as a
  /// skew-symmetry violation.
  void add_edge(std::string_view u, std::string_view v, double r = 1.0, double alpha = 0.0);
  /// Registers a face; the given order fixes its positive orientation.
  void add_face(std::string_view x, std::string_view y, std::string_view z, double s = 1.0);

  MagneticTriangulation build() const;

 private:
  struct RawEdge {
    std::string u, v;
    double r, alpha;
  };
  struct RawFace {
    std::string x, y, z;
    double s;
  };
  std::vector<std::pair<std::string, double>> vertices_;
  std::vector<RawEdge> edges_;
  std::vector<RawFace> faces_;
};

}  // namespace magtri
