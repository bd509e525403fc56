#include "magtri/generators.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace magtri {

namespace {

std::string cell_name(Index sphere, Index k) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "s%03lld_v%04lld", static_cast<long long>(sphere),
                static_cast<long long>(k));
  return buf;
}

std::string plain_name(Index k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "v%04lld", static_cast<long long>(k));
  return buf;
}

SphereDecomposition decomposition_from_names(const WeightedTriangulation& T,
                                             const std::vector<std::vector<std::string>>& names) {
  SphereDecomposition d;
  d.sphere_of.assign(T.vertex_count(), -1);
  for (size_t n = 0; n < names.size(); ++n) {
    std::vector<Index> sphere;
    for (const auto& name : names[n]) {
      const Index v = T.vertex_index(name);
      sphere.push_back(v);
      d.sphere_of[v] = static_cast<Index>(n);
    }
    d.spheres.push_back(std::move(sphere));
  }
  return d;
}

Index floor_pow(Index base, double beta) {
  const double p = std::pow(static_cast<double>(base), beta);
  const double r = std::round(p);
  // Integer powers can land a hair below their exact value; snap before
  // flooring so e.g. 19^2 never floors to 360.
  if (std::abs(p - r) < 1e-9) return static_cast<Index>(r);
  return static_cast<Index>(std::floor(p));
}

}  // namespace

std::vector<std::string> validate_decomposition(const WeightedTriangulation& T,
                                                const SphereDecomposition& d) {
  std::vector<std::string> out;
  if (static_cast<Index>(d.sphere_of.size()) != T.vertex_count()) {
    out.push_back("sphere_of size mismatch");
    return out;
  }
  for (Index v = 0; v < T.vertex_count(); ++v) {
    if (d.sphere_of[v] < 0 || d.sphere_of[v] >= d.count())
      out.push_back("vertex " + T.vertex_name(v) + " not assigned to a sphere");
  }
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    if (std::abs(d.sphere_of[ed.tail] - d.sphere_of[ed.head]) > 1)
      out.push_back("edge {" + T.vertex_name(ed.tail) + "," + T.vertex_name(ed.head) +
                    "} skips a sphere");
  }
  return out;
}

GeneratedFamily gen_book_like(const BookLikeSpec& spec) {
  if (!(spec.beta > 0.0 && spec.beta <= 2.0))
    throw std::invalid_argument("gen_book_like: beta must lie in (0,2]");
  if (spec.depth < 1) throw std::invalid_argument("gen_book_like: depth must be >= 1");

  // Sphere sizes: |S_0| = 1, odd spheres have 2 vertices, even sizes follow
  // from the prescribed spine valence floor((2n+1)^beta) + 4 = 1 + |S_2n| + |S_2n+2|.
  std::vector<Index> sizes(spec.depth);
  for (Index i = 0; i < spec.depth; ++i) {
    if (i == 0) {
      sizes[i] = 1;
    } else if (i % 2 == 1) {
      sizes[i] = 2;
    } else {
      const Index n = i / 2 - 1;  // S_{2n+2} = S_i
      sizes[i] = floor_pow(2 * n + 1, spec.beta) + 3 - sizes[i - 2];
      if (sizes[i] < 1)
        throw std::invalid_argument("gen_book_like: derived size of sphere " + std::to_string(i) +
                                    " is not positive");
    }
  }

  std::vector<std::vector<std::string>> names(spec.depth);
  ComplexBuilder b;
  for (Index i = 0; i < spec.depth; ++i)
    for (Index k = 0; k < sizes[i]; ++k) {
      names[i].push_back(cell_name(i, k));
      b.add_vertex(names[i].back());
    }

  struct Edge {
    Index si, ki, sj, kj;
  };
  std::vector<Edge> edges;
  for (Index i = 1; i < spec.depth; i += 2) {
    edges.push_back({i, 0, i, 1});  // spine pair
    for (Index j : {i - 1, i + 1}) {
      if (j < 0 || j >= spec.depth) continue;
      for (Index k = 0; k < 2; ++k)
        for (Index m = 0; m < sizes[j]; ++m) edges.push_back({i, k, j, m});
    }
  }

  std::vector<std::vector<Index>> val(spec.depth);
  for (Index i = 0; i < spec.depth; ++i) val[i].assign(sizes[i], 0);
  for (const auto& e : edges) {
    ++val[e.si][e.ki];
    ++val[e.sj][e.kj];
  }

  // |x| in the weight scheme is the sphere index; the origin (|O| = 0) is
  // treated as 1 so edge weights at the root stay finite.
  auto depth_of = [](Index sphere) { return std::max<Index>(sphere, 1); };
  auto r_weight = [&](const Edge& e) {
    return static_cast<double>(val[e.si][e.ki] * val[e.sj][e.kj]) /
           static_cast<double>(depth_of(e.si) * depth_of(e.sj));
  };

  for (const auto& e : edges)
    b.add_edge(names[e.si][e.ki], names[e.sj][e.kj], spec.beta_weights ? r_weight(e) : 1.0, 0.0);

  for (Index i = 1; i < spec.depth; i += 2) {
    for (Index j : {i - 1, i + 1}) {
      if (j < 0 || j >= spec.depth) continue;
      for (Index m = 0; m < sizes[j]; ++m) {
        double s = 1.0;
        if (spec.beta_weights) {
          s = r_weight({i, 0, i, 1}) * r_weight({i, 1, j, m}) * r_weight({j, m, i, 0});
        }
        b.add_face(names[i][0], names[i][1], names[j][m], s);
      }
    }
  }

  GeneratedFamily out;
  auto built = b.build();
  out.complex = std::move(built.complex);
  out.alpha = MagneticPotential::Zero(out.complex.edge_count());
  out.decomposition = decomposition_from_names(out.complex, names);
  return out;
}

GeneratedFamily gen_onedim(const OneDimSpec& spec) {
  if (spec.sphere_sizes.empty()) throw std::invalid_argument("gen_onedim: no spheres");
  for (Index sz : spec.sphere_sizes)
    if (sz < 1) throw std::invalid_argument("gen_onedim: sphere sizes must be positive");

  const Index levels = static_cast<Index>(spec.sphere_sizes.size());
  std::vector<std::vector<std::string>> names(levels);
  ComplexBuilder b;
  for (Index n = 0; n < levels; ++n)
    for (Index k = 0; k < spec.sphere_sizes[n]; ++k) {
      names[n].push_back(cell_name(n, k));
      b.add_vertex(names[n].back());
    }

  for (Index n = 0; n < levels; ++n) {
    if (spec.intra_edges) {
      for (Index i = 0; i < spec.sphere_sizes[n]; ++i)
        for (Index j = i + 1; j < spec.sphere_sizes[n]; ++j) b.add_edge(names[n][i], names[n][j]);
    }
    if (n + 1 < levels) {
      for (Index i = 0; i < spec.sphere_sizes[n]; ++i)
        for (Index j = 0; j < spec.sphere_sizes[n + 1]; ++j)
          b.add_edge(names[n][i], names[n + 1][j]);
    }
  }

  using FaceRule = OneDimSpec::FaceRule;
  // Every 3-cycle here contains an intra-sphere edge, so without intra edges
  // there is nothing to add.
  if (spec.face_rule != FaceRule::None && spec.intra_edges) {
    for (Index n = 0; n < levels; ++n) {
      for (Index i = 0; i < spec.sphere_sizes[n]; ++i)
        for (Index j = i + 1; j < spec.sphere_sizes[n]; ++j) {
          for (Index m = -1; m <= 1; m += 2) {
            const Index other = n + m;
            if (other < 0 || other >= levels) continue;
            for (Index k = 0; k < spec.sphere_sizes[other]; ++k)
              b.add_face(names[n][i], names[n][j], names[other][k]);
          }
          if (spec.face_rule == FaceRule::All) {
            for (Index k = j + 1; k < spec.sphere_sizes[n]; ++k)
              b.add_face(names[n][i], names[n][j], names[n][k]);
          }
        }
    }
  }

  GeneratedFamily out;
  auto built = b.build();
  out.complex = std::move(built.complex);
  out.alpha = MagneticPotential::Zero(out.complex.edge_count());
  out.decomposition = decomposition_from_names(out.complex, names);

  const auto bad = validate(out.complex);
  if (!bad.empty())
    throw std::invalid_argument("gen_onedim: invalid output: " + bad.front().rule);
  return out;
}

MagneticPotential potential_sphere_pi(const WeightedTriangulation& T,
                                      const SphereDecomposition& d) {
  const auto bad = validate_decomposition(T, d);
  if (!bad.empty()) throw std::invalid_argument("potential_sphere_pi: " + bad.front());
  constexpr double kPi = 3.141592653589793238462643383279502884;
  MagneticPotential alpha(T.edge_count());
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    alpha(e) = static_cast<double>(d.sphere_of[ed.tail] - d.sphere_of[ed.head]) * kPi;
  }
  return alpha;
}

MagneticTriangulation gen_random(const RandomSpec& spec) {
  if (spec.vertices < 1) throw std::invalid_argument("gen_random: vertices must be >= 1");
  if (spec.edge_density < 0.0 || spec.edge_density > 1.0 || spec.face_density < 0.0 ||
      spec.face_density > 1.0)
    throw std::invalid_argument("gen_random: densities must lie in [0,1]");
  if (!(spec.weight_min > 0.0) || spec.weight_min > spec.weight_max)
    throw std::invalid_argument("gen_random: weight range must be positive and ordered");
  if (spec.alpha_max < 0.0) throw std::invalid_argument("gen_random: alpha_max must be >= 0");

  SplitMix64 rng(spec.seed);
  const Index n = spec.vertices;
  ComplexBuilder b;
  std::vector<std::string> names(n);
  for (Index v = 0; v < n; ++v) {
    names[v] = plain_name(v);
    b.add_vertex(names[v], rng.uniform(spec.weight_min, spec.weight_max));
  }

  // Spanning tree first, then density-driven extras; adjacency matrix keeps
  // the draw order deterministic.
  std::vector<char> adj(static_cast<size_t>(n) * n, 0);
  auto connect = [&](Index i, Index j) {
    adj[i * n + j] = adj[j * n + i] = 1;
    b.add_edge(names[i], names[j], rng.uniform(spec.weight_min, spec.weight_max),
               spec.alpha_max == 0.0 ? 0.0 : rng.uniform(-spec.alpha_max, spec.alpha_max));
  };
  for (Index v = 1; v < n; ++v) connect(rng.range(v), v);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (adj[i * n + j]) continue;
      if (rng.uniform() < spec.edge_density) connect(i, j);
    }

  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (!adj[i * n + j]) continue;
      for (Index k = j + 1; k < n; ++k) {
        if (!adj[i * n + k] || !adj[j * n + k]) continue;
        if (rng.uniform() < spec.face_density)
          b.add_face(names[i], names[j], names[k], rng.uniform(spec.weight_min, spec.weight_max));
      }
    }

  return b.build();
}

DividedDegrees divided_degrees(const WeightedTriangulation& T, const SphereDecomposition& d) {
  const auto bad = validate_decomposition(T, d);
  if (!bad.empty()) throw std::invalid_argument("divided_degrees: " + bad.front());

  const Index levels = d.count();
  DividedDegrees out;
  out.rows.resize(levels);
  for (Index n = 0; n < levels; ++n) out.rows[n].n = n;

  for (Index v = 0; v < T.vertex_count(); ++v) {
    const Index n = d.sphere_of[v];
    double up = 0, down = 0;
    for (Index w : T.neighbors(v)) {
      if (d.sphere_of[w] == n + 1) ++up;
      if (d.sphere_of[w] == n - 1) ++down;
    }
    out.rows[n].eta_plus = std::max(out.rows[n].eta_plus, up);
    out.rows[n].eta_minus = std::max(out.rows[n].eta_minus, down);
  }

  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    const Index a = d.sphere_of[ed.tail], b2 = d.sphere_of[ed.head];
    const double nfaces = static_cast<double>(T.faces_at_edge(e).size());
    if (a != b2) {
      const Index lo = std::min(a, b2);
      out.rows[lo].beta_plus = std::max(out.rows[lo].beta_plus, nfaces);
      out.rows[std::max(a, b2)].beta_minus = std::max(out.rows[std::max(a, b2)].beta_minus, nfaces);
    } else {
      double up = 0, down = 0;
      for (const auto& corner : T.faces_at_edge(e)) {
        if (d.sphere_of[corner.opposite] == a + 1) ++up;
        if (d.sphere_of[corner.opposite] == a - 1) ++down;
      }
      out.rows[a].gamma_plus = std::max(out.rows[a].gamma_plus, up);
      out.rows[a].gamma_minus = std::max(out.rows[a].gamma_minus, down);
    }
  }

  double accum = 0.0;
  for (Index n = 0; n + 1 < levels; ++n) {
    const double xi = out.rows[n].eta_plus + out.rows[n + 1].eta_minus + out.rows[n].beta_plus +
                      out.rows[n].gamma_plus + out.rows[n + 1].gamma_minus;
    out.xi.push_back(xi);
    accum += (xi > 0.0) ? 1.0 / std::sqrt(xi) : std::numeric_limits<double>::infinity();
    out.partial_sums.push_back(accum);
  }
  return out;
}

}  // namespace magtri
