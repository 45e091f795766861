#include "census.hpp"
#include "doctest.h"
#include "fatcob/error.hpp"
#include "fatcob/homology.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fatcob;

TEST_CASE("relative homology of the basic pieces") {
  struct Row {
    const char* name;
    std::size_t h1, h0;
  };
  const Row rows[] = {{"cylinder", 0, 0},   {"pants", 1, 0},        {"mouthpiece", 1, 0},
                      {"flaps", 1, 0},      {"mouthpiece_backward", 0, 0}, {"strip", 0, 0},
                      {"coflaps", 0, 0},    {"cylinder_genus_one", 2, 0},  {"single_loop", 1, 1},
                      {"torus_two_boundary", 3, 1}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    ChainComplexPair c = relative_chain_complex(support::fixture(r.name));
    CHECK(c.rank_h1() == r.h1);
    CHECK(c.rank_h0() == r.h0);
  }
}

TEST_CASE("ranks agree with elimination mod p across the census") {
  for (const auto& g : census::open_closed(3, false)) {
    ChainComplexPair c = relative_chain_complex(g);
    oracle::RelativeRanks r = oracle::relative_ranks(g);
    CHECK(c.rank_h1() == r.h1);
    CHECK(c.rank_h0() == r.h0);
    CHECK(relative_euler_char(g) ==
          static_cast<std::int64_t>(r.extra_vertices) - static_cast<std::int64_t>(r.extra_edges));
  }
}

TEST_CASE("inadmissible graphs have no relative complex") {
  CHECK_THROWS_AS(relative_chain_complex(support::fixture("two_petal_inadmissible")), Error);
}

TEST_CASE("operation degree is d times the relative Euler characteristic") {
  for (int d = 1; d <= 3; ++d) {
    CHECK(operation_degree(support::fixture("pants"), d) == -d);
    CHECK(operation_degree(support::fixture("flaps"), d) == -d);
    CHECK(operation_degree(support::fixture("cylinder"), d) == 0);
  }
  CHECK(operation_degree(support::fixture("cylinder_genus_one"), 2) == -4);
  CHECK_THROWS_AS(operation_degree(support::fixture("pants"), -1), Error);
}

TEST_CASE("homology coordinates") {
  ChainComplexPair c = relative_chain_complex(support::fixture("cylinder_genus_one"));
  for (std::size_t j = 0; j < c.rank_h1(); ++j) {
    Vector coords = c.h1_coordinates(c.h1_basis[j]);
    for (std::size_t k = 0; k < coords.size(); ++k) CHECK(coords[k] == (k == j ? 1 : 0));
  }
  ChainComplexPair t = relative_chain_complex(support::fixture("theta"));
  REQUIRE(t.rank_h0() == 1);
  // Every 0-cell is homologous to the generator.
  for (std::size_t r = 0; r < t.basis0.size(); ++r) {
    Vector cell(t.basis0.size());
    cell[r] = 1;
    CHECK(t.h0_coordinates(cell) == Vector{1});
  }
}

TEST_CASE("the pants generator runs from one incoming circle to the other") {
  OpenClosedFatGraph pants = support::fixture("pants");
  ChainComplexPair c = relative_chain_complex(pants);
  Vector b = incoming_boundary(c, pants, c.h1_basis[0]);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == -b[1]);
  CHECK(b[0] != 0);
}

TEST_CASE("the collapse of an arc of the pants acts by +1") {
  OpenClosedFatGraph pants = support::fixture("pants");
  Collapse c = collapse_edges(pants, {*pants.base().find_edge("c1")});
  MorphismDeterminant d = morphism_determinant(c.morphism);
  CHECK(d.forward_h1.rows() == 1);
  CHECK(d.forward_h1.at(0, 0) == 1);
  CHECK(d.forward_sign == 1);
  CHECK(d.section_sign == 1);
  CHECK(morphism_det_sign(c.morphism) == 1);
  ChainMap f = chain_map_of_morphism(c.morphism);
  ChainComplexPair s = relative_chain_complex(pants), t = relative_chain_complex(c.graph);
  CHECK(t.differential * f.f1 == f.f0 * s.differential);
}

TEST_CASE("determinant signs are functorial and both routes agree") {
  std::size_t pairs = 0;
  for (const auto& g : census::open_closed(3, false)) {
    for (const auto& c1 : census::collapses(g, true)) {
      int s1 = morphism_det_sign(c1.morphism);
      MorphismDeterminant d = morphism_determinant(c1.morphism);
      CHECK(d.forward_sign == d.section_sign);
      for (const auto& c2 : census::collapses(c1.graph, true)) {
        int s2 = morphism_det_sign(c2.morphism);
        CHECK(morphism_det_sign(compose(c2.morphism, c1.morphism)) == s1 * s2);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("graded lines") {
  GradedLine a{3, Rational(-2)}, b{1, Rational(1, 2)};
  GradedLine t = tensor(a, b);
  CHECK(t.degree == 4);
  CHECK(t.scalar == -1);
  CHECK(swap_sign(a, b) == -1);
  CHECK(swap_sign(a, t) == 1);
  GradedLine p = power(a, 3);
  CHECK(p.degree == 9);
  CHECK(p.scalar == -8);
  CHECK(p.sign() == -1);
  CHECK(power(a, 0).scalar == 1);
}

TEST_CASE("gluing isomorphisms") {
  auto cyl = support::fixture("cylinder");
  GradedLine id = gluing_det_iso(cyl, cyl, gluable(cyl, cyl), 1);
  CHECK(id.degree == 0);
  CHECK(id.scalar == 1);

  auto coflaps = support::fixture("coflaps"), flaps = support::fixture("flaps");
  GluingDeterminant gd = gluing_determinant(coflaps, flaps, gluable(coflaps, flaps));
  CHECK(gd.glued_complex.rank_h1() == gd.image_h1.size());
  CHECK(gd.glued_complex.rank_h0() == gd.image_h0.size());
  for (int d = 0; d <= 3; ++d) {
    GradedLine l = gluing_det_iso(coflaps, flaps, gluable(coflaps, flaps), d);
    CHECK(l.degree == -d);
    CHECK(l.sign() == ((d % 2 != 0 && gd.scalar < 0) ? -1 : 1));
  }
}

TEST_CASE("three pants associate up to (-1)^d") {
  SkewAssociativity s = skew_associativity(1);
  CHECK(s.ratio == -1);
  CHECK(s.first.in_leaves().size() == 3);
  CHECK(s.second.out_leaves().size() == 1);
  for (int d = 0; d <= 3; ++d) CHECK(skew_associativity_sign(d) == (d % 2 == 0 ? 1 : -1));
}
