#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magtri/complex.hpp"
#include "magtri/generators.hpp"
#include "magtri/io.hpp"
#include "oracles.hpp"

using namespace magtri;

TEST_CASE("degree_vertex on simple and weighted complexes") {
  const auto k3 = oracles::make_k3();
  for (Index v = 0; v < 3; ++v) CHECK(degree_vertex(k3.complex, v) == doctest::Approx(2.0));

  ComplexBuilder b;
  b.add_vertex("a", 2.0);
  b.add_vertex("b", 1.0);
  b.add_edge("a", "b", 6.0);
  const auto single = b.build();
  CHECK(degree_vertex(single.complex, single.complex.vertex_index("a")) == doctest::Approx(3.0));

  CHECK_THROWS_AS(degree_vertex(k3.complex, 17), std::invalid_argument);
}

TEST_CASE("degree_vertex against brute-force edge scan on a book-like complex") {
  const auto fam = gen_book_like({.depth = 9, .beta = 1.0, .beta_weights = true});
  const auto& T = fam.complex;
  for (Index x = 0; x < T.vertex_count(); ++x) {
    double sum = 0.0;
    for (Index e = 0; e < T.edge_count(); ++e) {
      const auto ed = T.edge(e);
      if (ed.tail == x || ed.head == x) sum += T.edge_weight(e);
    }
    CHECK(degree_vertex(T, x) == doctest::Approx(sum / T.vertex_weight(x)).epsilon(1e-13));
  }
}

TEST_CASE("degree_edge") {
  const auto k3 = oracles::make_k3();
  const auto& T = k3.complex;
  CHECK(degree_edge(T, 0, 1) == doctest::Approx(1.0));
  CHECK(degree_edge(T, 1, 0) == degree_edge(T, 0, 1));

  ComplexBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("c");
  b.add_vertex("d");
  b.add_edge("a", "b", 2.0);
  b.add_edge("b", "c");
  b.add_edge("c", "a");
  b.add_edge("c", "d");
  b.add_face("a", "b", "c", 5.0);
  const auto built = b.build();
  CHECK(degree_edge(built.complex, built.complex.vertex_index("a"),
                    built.complex.vertex_index("b")) == doctest::Approx(2.5));
  CHECK(degree_edge(built.complex, built.complex.vertex_index("c"),
                    built.complex.vertex_index("d")) == 0.0);
  CHECK_THROWS_AS(degree_edge(built.complex, built.complex.vertex_index("a"),
                              built.complex.vertex_index("d")),
                  std::invalid_argument);
}

TEST_CASE("validate flags each broken invariant") {
  CHECK(validate(oracles::make_k3().complex).empty());

  // Face whose {a,c} edge is missing.
  {
    std::vector<OrientedEdge> edges = {{0, 1}, {1, 2}};
    std::vector<OrientedFace> faces = {{0, 1, 2}};
    auto T = WeightedTriangulation::from_parts({"a", "b", "c"}, Eigen::VectorXd::Ones(3), edges,
                                               Eigen::VectorXd::Ones(2), faces,
                                               Eigen::VectorXd::Ones(1));
    const auto v = validate(T);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "face not a 3-cycle");
  }

  // Zero edge weight.
  {
    std::vector<OrientedEdge> edges = {{0, 1}};
    Eigen::VectorXd r(1);
    r << 0.0;
    auto T = WeightedTriangulation::from_parts({"a", "b"}, Eigen::VectorXd::Ones(2), edges, r, {},
                                               Eigen::VectorXd());
    const auto v = validate(T);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "non-positive weight");
  }

  // Loop edge.
  {
    std::vector<OrientedEdge> edges = {{0, 0}, {0, 1}};
    auto T = WeightedTriangulation::from_parts({"a", "b"}, Eigen::VectorXd::Ones(2), edges,
                                               Eigen::VectorXd::Ones(2), {}, Eigen::VectorXd());
    const auto v = validate(T);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "loop edge");
  }

  // Disconnected.
  {
    auto T = WeightedTriangulation::from_parts({"a", "b"}, Eigen::VectorXd::Ones(2), {},
                                               Eigen::VectorXd(), {}, Eigen::VectorXd());
    const auto v = validate(T);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "disconnected");
  }

  // validate is pure: same input, same report.
  const auto T = oracles::random_complex(5).complex;
  const auto v1 = validate(T);
  const auto v2 = validate(T);
  CHECK(v1.size() == v2.size());
}

TEST_CASE("face storage: canonical rotation and signed lookup") {
  ComplexBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("c");
  b.add_edge("a", "b");
  b.add_edge("b", "c");
  b.add_edge("c", "a");
  b.add_face("b", "c", "a");  // rotated input, same orientation as (a,b,c)
  const auto T = b.build().complex;
  const auto fc = T.face(0);
  CHECK(fc.a == 0);  // rotated so the smallest vertex leads

  const Index a = 0, bb = 1, cc = 2;
  CHECK(T.face_lookup(a, bb, cc).sign == 1);
  CHECK(T.face_lookup(bb, cc, a).sign == 1);
  CHECK(T.face_lookup(cc, a, bb).sign == 1);
  CHECK(T.face_lookup(bb, a, cc).sign == -1);
  CHECK(T.face_lookup(a, cc, bb).sign == -1);
  CHECK_FALSE(T.face_lookup(a, a, bb));

  // Opposite-orientation storage is legitimate and flips the signs.
  ComplexBuilder b2;
  b2.add_vertex("a");
  b2.add_vertex("b");
  b2.add_vertex("c");
  b2.add_edge("a", "b");
  b2.add_edge("b", "c");
  b2.add_edge("c", "a");
  b2.add_face("a", "c", "b");
  const auto T2 = b2.build().complex;
  CHECK(T2.face_lookup(a, bb, cc).sign == -1);
}

TEST_CASE("document round trip is the identity on canonical documents") {
  const auto k3 = oracles::make_k3(0.75);
  const std::string doc = to_document(k3);
  const auto loaded = load_document(doc);
  CHECK(loaded.complex.vertex_count() == 3);
  CHECK(loaded.complex.edge_count() == 3);
  CHECK(loaded.complex.face_count() == 1);
  CHECK(to_document(loaded) == doc);

  // Messy but equivalent input: reversed edge orientation (alpha negated),
  // rotated face, permuted arrays. Canonicalization must converge.
  const std::string messy = R"({
    "faces": [ {"verts": ["b", "c", "a"], "s": 1} ],
    "edges": [
      {"u": "b", "v": "a", "r": 1, "alpha": -0.75},
      {"u": "c", "v": "a", "r": 1, "alpha": 0.75},
      {"u": "b", "v": "c", "r": 1, "alpha": 0.75}
    ],
    "vertices": [ {"id": "c", "c": 1}, {"id": "a", "c": 1}, {"id": "b", "c": 1} ]
  })";
  CHECK(to_document(load_document(messy)) == doc);

  // Structural equality of two loads of one document.
  const auto again = load_document(doc);
  CHECK(again.complex.vertex_names() == loaded.complex.vertex_names());
  CHECK(oracles::exactly_equal(again.alpha, loaded.alpha));
  for (Index e = 0; e < again.complex.edge_count(); ++e)
    CHECK(again.complex.edge(e) == loaded.complex.edge(e));
}

TEST_CASE("parse and validation failures are distinct") {
  CHECK_THROWS_AS(load_document("{ not json"), ParseError);
  CHECK_THROWS_AS(load_document("[1,2]"), ParseError);

  const std::string dup_edge = R"({
    "vertices": [ {"id": "a", "c": 1}, {"id": "b", "c": 1} ],
    "edges": [ {"u": "a", "v": "b", "r": 1, "alpha": 0.5},
               {"u": "b", "v": "a", "r": 1, "alpha": -0.5} ],
    "faces": [] })";
  CHECK_THROWS_WITH_AS(load_document(dup_edge), doctest::Contains("duplicate edge"), ParseError);

  // Same duplicated pair, but the alphas cannot come from one skew function.
  const std::string bad_alpha = R"({
    "vertices": [ {"id": "a", "c": 1}, {"id": "b", "c": 1} ],
    "edges": [ {"u": "a", "v": "b", "r": 1, "alpha": 0.5},
               {"u": "b", "v": "a", "r": 1, "alpha": 0.5} ],
    "faces": [] })";
  CHECK_THROWS_WITH_AS(load_document(bad_alpha), doctest::Contains("skew-symmetry"), ParseError);

  const std::string dup_face = R"({
    "vertices": [ {"id": "a", "c": 1}, {"id": "b", "c": 1}, {"id": "c", "c": 1} ],
    "edges": [ {"u": "a", "v": "b", "r": 1, "alpha": 0},
               {"u": "b", "v": "c", "r": 1, "alpha": 0},
               {"u": "a", "v": "c", "r": 1, "alpha": 0} ],
    "faces": [ {"verts": ["a", "b", "c"], "s": 1}, {"verts": ["a", "c", "b"], "s": 1} ] })";
  CHECK_THROWS_WITH_AS(load_document(dup_face), doctest::Contains("duplicate face"), ParseError);

  const std::string unknown_vertex = R"({
    "vertices": [ {"id": "a", "c": 1} ],
    "edges": [ {"u": "a", "v": "zz", "r": 1, "alpha": 0} ], "faces": [] })";
  CHECK_THROWS_AS(load_document(unknown_vertex), ParseError);

  // Well-formed but invalid: zero weight reaches validation, not parsing.
  const std::string invalid = R"({
    "vertices": [ {"id": "a", "c": 1}, {"id": "b", "c": 1} ],
    "edges": [ {"u": "a", "v": "b", "r": 0, "alpha": 0} ], "faces": [] })";
  CHECK_THROWS_AS(load_document(invalid), ValidationError);
  try {
    load_document(invalid);
  } catch (const ValidationError& e) {
    REQUIRE(e.violations.size() == 1);
    CHECK(e.violations[0].rule == "non-positive weight");
  }
}

TEST_CASE("17-digit serialization survives awkward numbers") {
  ComplexBuilder b;
  b.add_vertex("a", 0.1);
  b.add_vertex("b", 1.0 / 3.0);
  b.add_edge("a", "b", 1e-17, -0.12345678901234567);
  const auto mt = b.build();
  const std::string doc = to_document(mt);
  const auto back = load_document(doc);
  CHECK(back.complex.vertex_weight(0) == mt.complex.vertex_weight(0));
  CHECK(back.complex.vertex_weight(1) == mt.complex.vertex_weight(1));
  CHECK(back.complex.edge_weight(0) == mt.complex.edge_weight(0));
  CHECK(back.alpha(0) == mt.alpha(0));
  CHECK(to_document(back) == doc);
}

TEST_CASE("cochain serialization round trip") {
  const auto mt = oracles::random_complex(11);
  SplitMix64 rng(3);
  for (int degree = 0; degree <= 2; ++degree) {
    Eigen::VectorXcd v = degree == 0   ? oracles::random_cochain0(mt.complex, rng)
                         : degree == 1 ? oracles::random_cochain1(mt.complex, rng)
                                       : oracles::random_cochain2(mt.complex, rng);
    const std::string doc = cochain_to_json(mt.complex, degree, v);
    const Eigen::VectorXcd back = cochain_from_json(mt.complex, degree, doc);
    CHECK(oracles::exactly_equal(back, v));
  }
  CHECK_THROWS_AS(cochain_from_json(mt.complex, 0, R"({"degree":0,"values":{"v:nope":[0,0]}})"),
                  ParseError);
  CHECK_THROWS_AS(cochain_from_json(mt.complex, 1, cochain_to_json(mt.complex, 0,
                                                                   Eigen::VectorXcd::Zero(
                                                                       mt.complex.vertex_count()))),
                  ParseError);
}
