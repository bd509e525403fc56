#include "magtri/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magtri {

namespace {

std::string edge_label(const WeightedTriangulation& T, Index u, Index v) {
  return "{" + T.vertex_name(u) + "," + T.vertex_name(v) + "}";
}

std::string face_label(const WeightedTriangulation& T, const OrientedFace& f) {
  return "(" + T.vertex_name(f.a) + "," + T.vertex_name(f.b) + "," + T.vertex_name(f.c) + ")";
}

}  // namespace

long long WeightedTriangulation::edge_key(Index u, Index v) const {
  const long long n = vertex_count();
  const long long a = std::min(u, v);
  const long long b = std::max(u, v);
  return a * n + b;
}

long long WeightedTriangulation::face_key(Index a, Index b, Index c) const {
  Index s[3] = {a, b, c};
  std::sort(s, s + 3);
  const long long n = vertex_count();
  return (static_cast<long long>(s[0]) * n + s[1]) * n + s[2];
}

WeightedTriangulation WeightedTriangulation::from_parts(
    std::vector<std::string> names, Eigen::VectorXd vertex_weights,
    std::vector<OrientedEdge> edges, Eigen::VectorXd edge_weights,
    std::vector<OrientedFace> faces, Eigen::VectorXd face_weights) {
  WeightedTriangulation T;
  T.names_ = std::move(names);
  T.c_ = std::move(vertex_weights);
  T.edges_ = std::move(edges);
  T.r_ = std::move(edge_weights);
  T.faces_ = std::move(faces);
  T.s_ = std::move(face_weights);

  const Index nv = T.vertex_count();
  if (T.c_.size() != nv || T.r_.size() != T.edge_count() || T.s_.size() != T.face_count())
    throw std::invalid_argument("weight vector sizes do not match cell counts");

  for (Index v = 0; v < nv; ++v) {
    if (!T.name_index_.emplace(T.names_[v], v).second)
      throw std::invalid_argument("duplicate vertex id: " + T.names_[v]);
  }

  auto check_vertex = [&](Index v) {
    if (v < 0 || v >= nv) throw std::invalid_argument("vertex index out of range");
  };

  // Canonicalize edges (tail < head), then sort lexicographically.
  for (auto& e : T.edges_) {
    check_vertex(e.tail);
    check_vertex(e.head);
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }
  {
    std::vector<Index> perm(T.edges_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Index i, Index j) {
      const auto& a = T.edges_[i];
      const auto& b = T.edges_[j];
      return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
    });
    std::vector<OrientedEdge> es(T.edges_.size());
    Eigen::VectorXd rs(T.r_.size());
    for (size_t k = 0; k < perm.size(); ++k) {
      es[k] = T.edges_[perm[k]];
      rs(static_cast<Index>(k)) = T.r_(perm[k]);
    }
    T.edges_ = std::move(es);
    T.r_ = std::move(rs);
  }
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto& ed = T.edges_[e];
    if (!T.edge_map_.emplace(T.edge_key(ed.tail, ed.head), e).second)
      throw std::invalid_argument("duplicate edge: " + edge_label(T, ed.tail, ed.head));
  }

  // Canonicalize faces: rotate the smallest vertex first (orientation kept),
  // then sort by the stored triple.
  for (auto& f : T.faces_) {
    check_vertex(f.a);
    check_vertex(f.b);
    check_vertex(f.c);
    if (f.b <= f.a && f.b <= f.c) {
      f = {f.b, f.c, f.a};
    } else if (f.c <= f.a && f.c <= f.b) {
      f = {f.c, f.a, f.b};
    }
  }
  {
    std::vector<Index> perm(T.faces_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Index i, Index j) {
      const auto& a = T.faces_[i];
      const auto& b = T.faces_[j];
      return std::tie(a.a, a.b, a.c) < std::tie(b.a, b.b, b.c);
    });
    std::vector<OrientedFace> fs(T.faces_.size());
    Eigen::VectorXd ss(T.s_.size());
    for (size_t k = 0; k < perm.size(); ++k) {
      fs[k] = T.faces_[perm[k]];
      ss(static_cast<Index>(k)) = T.s_(perm[k]);
    }
    T.faces_ = std::move(fs);
    T.s_ = std::move(ss);
  }
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto& fc = T.faces_[f];
    if (fc.a == fc.b || fc.b == fc.c || fc.a == fc.c) continue;  // degenerate, validate() reports
    if (!T.face_map_.emplace(T.face_key(fc.a, fc.b, fc.c), f).second)
      throw std::invalid_argument("duplicate face: " + face_label(T, fc));
  }

  // Adjacency.
  T.neighbors_.assign(nv, {});
  for (const auto& e : T.edges_) {
    if (e.tail == e.head) continue;  // loop, validate() reports
    T.neighbors_[e.tail].push_back(e.head);
    T.neighbors_[e.head].push_back(e.tail);
  }
  for (auto& nb : T.neighbors_) std::sort(nb.begin(), nb.end());

  T.faces_at_edge_.assign(T.edge_count(), {});
  T.faces_at_vertex_.assign(nv, {});
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto& fc = T.faces_[f];
    if (fc.a == fc.b || fc.b == fc.c || fc.a == fc.c) continue;
    T.faces_at_vertex_[fc.a].push_back(f);
    T.faces_at_vertex_[fc.b].push_back(f);
    T.faces_at_vertex_[fc.c].push_back(f);
    const Index eab = T.edge_index(fc.a, fc.b);
    const Index ebc = T.edge_index(fc.b, fc.c);
    const Index eca = T.edge_index(fc.c, fc.a);
    if (eab >= 0) T.faces_at_edge_[eab].push_back({fc.c, f});
    if (ebc >= 0) T.faces_at_edge_[ebc].push_back({fc.a, f});
    if (eca >= 0) T.faces_at_edge_[eca].push_back({fc.b, f});
  }
  return T;
}

Index WeightedTriangulation::vertex_index(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  return it == name_index_.end() ? -1 : it->second;
}

Index WeightedTriangulation::edge_index(Index u, Index v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return -1;
  auto it = edge_map_.find(edge_key(u, v));
  return it == edge_map_.end() ? -1 : it->second;
}

FaceRef WeightedTriangulation::face_lookup(Index x, Index y, Index z) const {
  if (x == y || y == z || x == z) return {};
  if (x < 0 || y < 0 || z < 0 || x >= vertex_count() || y >= vertex_count() || z >= vertex_count())
    return {};
  auto it = face_map_.find(face_key(x, y, z));
  if (it == face_map_.end()) return {};
  const OrientedFace& st = faces_[it->second];
  // Even permutations of the stored triple carry sign +1.
  const bool even = (st.a == x && st.b == y && st.c == z) ||
                    (st.a == y && st.b == z && st.c == x) ||
                    (st.a == z && st.b == x && st.c == y);
  return {it->second, even ? 1 : -1};
}

bool WeightedTriangulation::is_connected() const {
  const Index nv = vertex_count();
  if (nv <= 1) return true;
  std::vector<char> seen(nv, 0);
  std::vector<Index> stack = {0};
  seen[0] = 1;
  Index reached = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (Index w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nv;
}

double degree_vertex(const WeightedTriangulation& T, Index x) {
  if (x < 0 || x >= T.vertex_count()) throw std::invalid_argument("degree_vertex: unknown vertex");
  double sum = 0.0;
  for (Index y : T.neighbors(x)) sum += T.edge_weight(T.edge_index(x, y));
  return sum / T.vertex_weight(x);
}

double degree_edge(const WeightedTriangulation& T, Index e) {
  if (e < 0 || e >= T.edge_count()) throw std::invalid_argument("degree_edge: unknown edge");
  double sum = 0.0;
  for (const auto& fc : T.faces_at_edge(e)) sum += T.face_weight(fc.face);
  return sum / T.edge_weight(e);
}

double degree_edge(const WeightedTriangulation& T, Index x, Index y) {
  const Index e = T.edge_index(x, y);
  if (e < 0) throw std::invalid_argument("degree_edge: {" + std::to_string(x) + "," +
                                         std::to_string(y) + "} is not an edge");
  return degree_edge(T, e);
}

std::vector<Violation> validate(const WeightedTriangulation& T) {
  std::vector<Violation> out;
  for (Index v = 0; v < T.vertex_count(); ++v) {
    if (!(T.vertex_weight(v) > 0.0))
      out.push_back({"non-positive weight", "vertex " + T.vertex_name(v),
                     "c = " + std::to_string(T.vertex_weight(v))});
  }
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    if (ed.tail == ed.head)
      out.push_back({"loop edge", "edge " + edge_label(T, ed.tail, ed.head), "tail equals head"});
    if (!(T.edge_weight(e) > 0.0))
      out.push_back({"non-positive weight", "edge " + edge_label(T, ed.tail, ed.head),
                     "r = " + std::to_string(T.edge_weight(e))});
  }
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    if (fc.a == fc.b || fc.b == fc.c || fc.a == fc.c) {
      out.push_back({"degenerate face", "face " + face_label(T, fc), "vertices not distinct"});
    } else {
      const Index pairs[3][2] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
      for (const auto& p : pairs) {
        if (T.edge_index(p[0], p[1]) < 0)
          out.push_back({"face not a 3-cycle", "face " + face_label(T, fc),
                         "missing edge " + edge_label(T, p[0], p[1])});
      }
    }
    if (!(T.face_weight(f) > 0.0))
      out.push_back({"non-positive weight", "face " + face_label(T, fc),
                     "s = " + std::to_string(T.face_weight(f))});
  }
  if (!T.is_connected()) out.push_back({"disconnected", "complex", "not path-connected"});
  return out;
}

void ComplexBuilder::add_vertex(std::string name, double c) {
  vertices_.emplace_back(std::move(name), c);
}

void ComplexBuilder::add_edge(std::string_view u, std::string_view v, double r, double alpha) {
  edges_.push_back({std::string(u), std::string(v), r, alpha});
}

void ComplexBuilder::add_face(std::string_view x, std::string_view y, std::string_view z,
                              double s) {
  faces_.push_back({std::string(x), std::string(y), std::string(z), s});
}

MagneticTriangulation ComplexBuilder::build() const {
  std::vector<std::pair<std::string, double>> verts = vertices_;
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < verts.size(); ++i) {
    if (verts[i].first == verts[i - 1].first)
      throw std::invalid_argument("duplicate vertex id: " + verts[i].first);
  }

  std::unordered_map<std::string, Index> idx;
  std::vector<std::string> names;
  Eigen::VectorXd c(static_cast<Index>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    idx.emplace(verts[i].first, static_cast<Index>(i));
    names.push_back(verts[i].first);
    c(static_cast<Index>(i)) = verts[i].second;
  }
  auto resolve = [&](const std::string& name) {
    auto it = idx.find(name);
    if (it == idx.end()) throw std::invalid_argument("unknown vertex id: " + name);
    return it->second;
  };

  // Normalize edges to tail < head, negating alpha on swaps, and detect
  // duplicates before canonical sorting so alpha consistency can be named.
  struct NormEdge {
    Index u, v;
    double r, alpha;
  };
  std::vector<NormEdge> norm;
  norm.reserve(edges_.size());
  for (const auto& e : edges_) {
    Index u = resolve(e.u), v = resolve(e.v);
    double alpha = e.alpha;
    if (u > v) {
      std::swap(u, v);
      alpha = -alpha;
    }
    norm.push_back({u, v, e.r, alpha});
  }
  std::sort(norm.begin(), norm.end(), [](const NormEdge& a, const NormEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (size_t i = 1; i < norm.size(); ++i) {
    if (norm[i].u == norm[i - 1].u && norm[i].v == norm[i - 1].v) {
      const std::string cell =
          "{" + names[norm[i].u] + "," + names[norm[i].v] + "}";
      if (norm[i].alpha != norm[i - 1].alpha)
        throw std::invalid_argument("alpha skew-symmetry violation on duplicate edge " + cell);
      throw std::invalid_argument("duplicate edge: " + cell);
    }
  }

  std::vector<OrientedEdge> edges;
  Eigen::VectorXd r(static_cast<Index>(norm.size()));
  Eigen::VectorXd alpha(static_cast<Index>(norm.size()));
  for (size_t i = 0; i < norm.size(); ++i) {
    edges.push_back({norm[i].u, norm[i].v});
    r(static_cast<Index>(i)) = norm[i].r;
    alpha(static_cast<Index>(i)) = norm[i].alpha;
  }

  std::vector<OrientedFace> faces;
  Eigen::VectorXd s(static_cast<Index>(faces_.size()));
  for (size_t i = 0; i < faces_.size(); ++i) {
    faces.push_back({resolve(faces_[i].x), resolve(faces_[i].y), resolve(faces_[i].z)});
    s(static_cast<Index>(i)) = faces_[i].s;
  }

  MagneticTriangulation out;
  out.complex = WeightedTriangulation::from_parts(std::move(names), std::move(c),
                                                  std::move(edges), r, std::move(faces), s);
  // from_parts re-sorted the edges; realign alpha with the canonical order.
  out.alpha.resize(out.complex.edge_count());
  for (size_t i = 0; i < norm.size(); ++i) {
    const Index e = out.complex.edge_index(norm[i].u, norm[i].v);
    out.alpha(e) = norm[i].alpha;
  }
  return out;
}

}  // namespace magtri
