#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magtri/completeness.hpp"
#include "magtri/generators.hpp"
#include "magtri/io.hpp"
#include "oracles.hpp"

using namespace magtri;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

Index valence(const WeightedTriangulation& T, Index v) {
  return static_cast<Index>(T.neighbors(v).size());
}
}  // namespace

TEST_CASE("book-like: first spheres have the prescribed structure") {
  const auto fam = gen_book_like({.depth = 4, .beta = 1.0, .beta_weights = false});
  const auto& T = fam.complex;
  const auto& S = fam.decomposition.spheres;

  REQUIRE(S.size() == 4);
  CHECK(S[0].size() == 1);
  CHECK(S[1].size() == 2);
  CHECK(S[2].size() == 3);  // floor(1^beta) + 4 - |S_0| - 1
  CHECK(S[3].size() == 2);

  // Spine pair adjacent to each other and to the origin; faces (x, y, O).
  const Index O = S[0][0];
  CHECK(T.adjacent(S[1][0], S[1][1]));
  CHECK(T.adjacent(S[1][0], O));
  CHECK(T.adjacent(S[1][1], O));
  CHECK(T.face_lookup(S[1][0], S[1][1], O));
  for (Index z : S[2]) CHECK(T.face_lookup(S[1][0], S[1][1], z));

  // Even spheres are independent sets.
  CHECK_FALSE(T.adjacent(S[2][0], S[2][1]));

  CHECK(validate(T).empty());
}

TEST_CASE("book-like: valence identity at interior odd spheres, even valence 4") {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto fam = gen_book_like({.depth = 20, .beta = beta, .beta_weights = false});
    const auto& T = fam.complex;
    const auto& S = fam.decomposition.spheres;
    CHECK(validate(T).empty());

    for (size_t i = 1; i + 1 < S.size(); i += 2) {
      const Index expected = static_cast<Index>(S[i - 1].size() + S[i + 1].size()) + 1;
      for (Index x : S[i]) CHECK(valence(T, x) == expected);
    }
    for (size_t i = 2; i + 1 < S.size(); i += 2) {
      for (Index x : S[i]) CHECK(valence(T, x) == 4);
    }
  }
}

TEST_CASE("book-like: sphere index equals combinatorial distance") {
  const auto fam = gen_book_like({.depth = 12, .beta = 1.5, .beta_weights = true});
  const auto dist = combinatorial_distance(fam.complex, 0);
  for (Index v = 0; v < fam.complex.vertex_count(); ++v)
    CHECK(dist(v) == fam.decomposition.sphere_of[v]);
  CHECK(validate_decomposition(fam.complex, fam.decomposition).empty());
}

TEST_CASE("book-like: parameter validation") {
  CHECK_THROWS_AS(gen_book_like({.depth = 6, .beta = 3.0, .beta_weights = false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_book_like({.depth = 6, .beta = 0.0, .beta_weights = false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_book_like({.depth = 0, .beta = 1.0, .beta_weights = false}),
                  std::invalid_argument);
}

TEST_CASE("onedim: constant spheres give a constant series term") {
  OneDimSpec spec;
  spec.sphere_sizes = {3, 3, 3, 3, 3, 3};
  const auto fam = gen_onedim(spec);
  CHECK(validate(fam.complex).empty());
  const auto dd = divided_degrees(fam.complex, fam.decomposition);

  // Interior rows: eta = 3 across, beta = 2k-2 = 4 faces per cross edge,
  // gamma = 3 cross faces per intra edge.
  for (Index n = 1; n + 1 < 6; ++n) {
    CHECK(dd.rows[n].eta_plus == 3);
    CHECK(dd.rows[n].eta_minus == 3);
    CHECK(dd.rows[n].beta_plus == 4);
    CHECK(dd.rows[n].gamma_plus == 3);
    CHECK(dd.rows[n].gamma_minus == 3);
  }
  // Interior series terms are constant: 3 + 3 + 4 + 3 + 3 = 16.
  for (size_t n = 1; n + 2 < dd.xi.size(); ++n) CHECK(dd.xi[n] == 16);
  // Partial sums of 1/sqrt(xi) grow linearly once the term is constant.
  const double step = dd.partial_sums[2] - dd.partial_sums[1];
  CHECK(step == doctest::Approx(1.0 / std::sqrt(16.0)));

  // Empty face set: beta and gamma vanish.
  OneDimSpec bare = spec;
  bare.face_rule = OneDimSpec::FaceRule::None;
  const auto fam2 = gen_onedim(bare);
  const auto dd2 = divided_degrees(fam2.complex, fam2.decomposition);
  for (const auto& row : dd2.rows) {
    CHECK(row.beta_plus == 0);
    CHECK(row.gamma_plus == 0);
  }
}

TEST_CASE("divided degrees agree with direct enumeration on a book-like complex") {
  const auto fam = gen_book_like({.depth = 8, .beta = 1.0, .beta_weights = false});
  const auto& T = fam.complex;
  const auto& d = fam.decomposition;
  const auto dd = divided_degrees(T, d);

  // Oracle: raw loops over vertices/edges straight from the definitions.
  for (Index n = 0; n < d.count(); ++n) {
    double eta_p = 0, beta_p = 0, gamma_p = 0;
    for (Index v : d.spheres[n]) {
      double up = 0;
      for (Index w : T.neighbors(v))
        if (d.sphere_of[w] == n + 1) ++up;
      eta_p = std::max(eta_p, up);
    }
    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      const Index sa = d.sphere_of[ed.tail], sb = d.sphere_of[ed.head];
      if (std::min(sa, sb) != n) continue;
      if (sa != sb && std::max(sa, sb) == n + 1)
        beta_p = std::max(beta_p, static_cast<double>(T.faces_at_edge(e).size()));
      if (sa == n && sb == n) {
        double cnt = 0;
        for (const auto& c : T.faces_at_edge(e))
          if (d.sphere_of[c.opposite] == n + 1) ++cnt;
        gamma_p = std::max(gamma_p, cnt);
      }
    }
    CHECK(dd.rows[n].eta_plus == eta_p);
    CHECK(dd.rows[n].beta_plus == beta_p);
    CHECK(dd.rows[n].gamma_plus == gamma_p);
  }
}

TEST_CASE("sphere potential: intra zero, cross minus pi, telescoping fluxes") {
  OneDimSpec spec;
  spec.sphere_sizes = {1, 2, 2, 3};
  const auto fam = gen_onedim(spec);
  const auto& T = fam.complex;
  const auto alpha = potential_sphere_pi(T, fam.decomposition);

  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    const Index sa = fam.decomposition.sphere_of[ed.tail];
    const Index sb = fam.decomposition.sphere_of[ed.head];
    if (sa == sb) {
      CHECK(alpha(e) == 0.0);
    } else {
      CHECK(alpha(e) == static_cast<double>(sa - sb) * kPi);
    }
  }
  for (Index f = 0; f < T.face_count(); ++f) {
    CHECK(face_flux(T, alpha, f) == 0.0);
    CHECK(std::sin(face_flux(T, alpha, f) / 6.0) == 0.0);
  }
}

TEST_CASE("random generator: determinism, densities, connectivity") {
  RandomSpec spec;
  spec.seed = 7;
  spec.vertices = 18;
  spec.edge_density = 0.35;
  spec.face_density = 0.5;
  const auto a = gen_random(spec);
  const auto b = gen_random(spec);
  CHECK(to_document(a) == to_document(b));
  CHECK(validate(a.complex).empty());

  spec.seed = 8;
  const auto c = gen_random(spec);
  CHECK(to_document(a) != to_document(c));

  RandomSpec no_faces = spec;
  no_faces.face_density = 0.0;
  CHECK(gen_random(no_faces).complex.face_count() == 0);

  RandomSpec k4;
  k4.seed = 1;
  k4.vertices = 4;
  k4.edge_density = 1.0;
  k4.face_density = 1.0;
  const auto full = gen_random(k4);
  CHECK(full.complex.edge_count() == 6);
  CHECK(full.complex.face_count() == 4);

  RandomSpec bad = spec;
  bad.edge_density = 1.5;
  CHECK_THROWS_AS(gen_random(bad), std::invalid_argument);
  bad = spec;
  bad.weight_min = -1.0;
  CHECK_THROWS_AS(gen_random(bad), std::invalid_argument);
}

TEST_CASE("every generator output validates cleanly") {
  CHECK(validate(gen_book_like({.depth = 15, .beta = 0.7, .beta_weights = true}).complex).empty());
  OneDimSpec spec;
  spec.sphere_sizes = {1, 4, 2, 5, 3};
  spec.face_rule = OneDimSpec::FaceRule::All;
  CHECK(validate(gen_onedim(spec).complex).empty());
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    CHECK(validate(oracles::random_complex(seed, 9 + static_cast<Index>(seed)).complex).empty());
}
