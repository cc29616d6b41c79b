#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchar/descent.hpp"
#include "support.hpp"

using namespace dchar;
using namespace testing_support;

namespace {

ComplexPtr space(const std::string& name) {
  return std::make_shared<const DeltaComplex>(standard_space(name));
}

Cover circle_arcs() {
  return Cover::make(space("circle_3"), {{"A", {"e01", "e12"}}, {"B", {"e20"}}});
}

Cover torus_triangles() {
  return Cover::make(space("torus_min"), {{"U", {"U"}}, {"L", {"L"}}}, {{"v", "L"}});
}

PartitionOfUnity random_partition(const Cover& c, std::mt19937_64& rng) {
  PartitionOfUnity p;
  for (std::size_t v = 0; v < c.base->count(0); ++v) {
    std::vector<Rat> w(c.size());
    Rat total = 0;
    for (std::size_t e = 0; e < c.size(); ++e)
      if (c.contains(e, 0, v)) {
        w[e] = Rat(random_int(rng, 1, 5));
        total += w[e];
      }
    for (auto& x : w) x /= total;
    p.weight.push_back(std::move(w));
  }
  return p;
}

}  // namespace

TEST_CASE("cover construction and validation") {
  Cover c = circle_arcs();
  CHECK(c.size() == 2);
  const DeltaComplex& x = *c.base;
  // A is closed under faces, so it contains all three vertices.
  for (std::size_t v = 0; v < 3; ++v) CHECK(c.contains(0, 0, v));
  CHECK(c.contains(1, 0, x.lookup("v0").index));
  CHECK(c.contains(1, 0, x.lookup("v2").index));
  CHECK_FALSE(c.contains(1, 0, x.lookup("v1").index));
  CHECK(c.element("B") == std::size_t{1});
  CHECK_FALSE(c.element("C").has_value());

  CHECK_THROWS_AS(Cover::make(space("circle_3"), {{"A", {"e01"}}}), CoverError);
  CHECK_THROWS_AS(Cover::make(space("circle_3"), {{"A", {"e01", "e12", "zz"}}, {"B", {"e20"}}}),
                  CoverError);
  CHECK_THROWS_AS(Cover::make(space("circle_3"), {{"A", {"e01", "e12"}}, {"B", {"e20"}}},
                              {{"v1", "B"}}),
                  CoverError);
}

TEST_CASE("Čech columns of the circle cover") {
  CechComplex cech(circle_arcs(), 2);
  // Column 1: each simplex tagged by ordered pairs of elements containing it.
  // Vertices: v0, v2 lie in both (4 pairs each), v1 only in A (1 pair).
  CHECK(cech.level(1).count(0) == 9);
  // Edges: e01, e12 in A only, e20 in B only.
  CHECK(cech.level(1).count(1) == 3);
  std::size_t s = cech.simplex(1, 0, 0, {0, 1});
  CHECK(cech.level(1).id(0, s) == "v0|A,B");
  CHECK(cech.base_simplex(1, 0, s) == 0);
  CHECK(cech.tags(1, 0, s) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(cech.simplex(1, 0, 1, {0, 1}), CoverError);
  for (int q = 0; q + 2 <= cech.depth(); ++q)
    for (int p = 0; p <= 1; ++p) CHECK((cech.delta(q + 1, p) * cech.delta(q, p)).is_zero());
}

TEST_CASE("ρ identities for the section variant") {
  for (const Cover& c : {circle_arcs(), torus_triangles(), Cover::single(space("rp2_min"))}) {
    CechComplex cech(c, 4);
    RhoIdentityReport r = check_rho_identities(cech, rho_section(cech), 2);
    CHECK(r.ok);
    CHECK(r.checked == 3 * 5);
    CHECK(r.failure.empty());
  }
}

TEST_CASE("ρ identities for random partitions of unity") {
  std::mt19937_64 rng(71);
  for (const Cover& c : {circle_arcs(), torus_triangles()}) {
    CechComplex cech(c, 4);
    for (int trial = 0; trial < 5; ++trial) {
      PartitionOfUnity p = random_partition(c, rng);
      RhoIdentityReport r = check_rho_identities(cech, rho_partition(cech, p), 2);
      CHECK(r.ok);
    }
    CHECK(check_rho_identities(cech, rho_partition(cech, PartitionOfUnity::uniform(c)), 2).ok);
  }
}

TEST_CASE("a flipped δ breaks the identities") {
  CechComplex cech(circle_arcs(), 3);
  RhoIdentityReport r = check_rho_identities(cech, rho_section(cech), 1, -1);
  CHECK_FALSE(r.ok);
  CHECK(r.failure.find("column 0") != std::string::npos);
}

TEST_CASE("indicator weights reduce ρ to the section") {
  Cover c = circle_arcs();
  CechComplex cech(c, 3);
  RhoOperator a = rho_section(cech);
  RhoOperator b(cech, indicator_weights(c));
  for (int q = 0; q <= 3; ++q)
    for (int p = 0; p <= 1; ++p) CHECK(a.at(q, p) == b.at(q, p));
}

TEST_CASE("partition validation and weight support") {
  Cover c = circle_arcs();
  const std::size_t v1 = c.base->lookup("v1").index;
  PartitionOfUnity p = PartitionOfUnity::uniform(c);
  CHECK_NOTHROW(p.validate(c));
  PartitionOfUnity bad = p;
  bad.weight[v1] = {Rat(1, 2), Rat(1, 2)};
  CHECK_THROWS_AS(bad.validate(c), CoverError);
  bad = p;
  bad.weight[0] = {Rat(2, 3), Rat(2, 3)};
  CHECK_THROWS_AS(bad.validate(c), CoverError);

  // The first vertex of e20 is v2; all of v2's weight on A, which misses e20.
  PartitionOfUnity skew = p;
  skew.weight[c.base->lookup("v2").index] = {1, 0};
  try {
    first_vertex_weights(c, skew);
    FAIL("expected a support violation");
  } catch (const CoverError& e) {
    CHECK(std::string(e.what()).find("weight support violation") != std::string::npos);
  }
}

TEST_CASE("row primitives") {
  std::mt19937_64 rng(72);
  Cover c = torus_triangles();
  CechComplex cech(c, 3);
  RhoOperator rho = rho_section(cech);
  for (int q = 1; q <= 2; ++q)
    for (int p = 0; p <= 2; ++p) {
      RatVec f = random_rat_vec(rng, cech.level(q - 1).count(p));
      RatVec x = cech.delta(q - 1, p) * f;
      RatVec y = row_primitive(cech, rho, q, p, x);
      CHECK(cech.delta(q - 1, p) * y == x);
    }
  RatVec junk(cech.level(1).count(0));
  junk[0] = 1;
  if (!is_zero(cech.delta(1, 0) * junk))
    CHECK_THROWS_AS(row_primitive(cech, rho, 1, 0, junk), CategoryError);
}

TEST_CASE("degree-1 descent on the circle and torus") {
  DescentReport a = descent_equivalence_h1(circle_arcs(), Ring::Z);
  CHECK(a.base_h1.to_string() == "Z");
  CHECK(a.total_h1.to_string() == "Z");
  CHECK(a.certified());
  CHECK(a.pairs_checked > 0);
  CHECK(a.objects_checked > 0);
  CHECK(a.failures.empty());

  DescentOptions opt;
  opt.partition = PartitionOfUnity::uniform(torus_triangles());
  DescentReport b = descent_equivalence_h1(torus_triangles(), Ring::Q, opt);
  CHECK(b.base_h1.to_string() == "Q^2");
  CHECK(b.certified());

  DescentReport c = descent_equivalence_h1(torus_triangles(), Ring::Z);
  CHECK(c.total_h1.to_string() == "Z^2");
  CHECK(c.certified());
}

TEST_CASE("descent negative control and rejected options") {
  DescentOptions flip;
  flip.flip_delta = true;
  DescentReport r = descent_equivalence_h1(circle_arcs(), Ring::Z, flip);
  CHECK_FALSE(r.certified());
  CHECK_FALSE(r.identities_hold);
  CHECK_FALSE(r.failures.empty());

  CHECK_THROWS_AS(descent_equivalence_h1(circle_arcs(), Ring::QZ), DimensionError);
  DescentOptions part;
  part.partition = PartitionOfUnity::uniform(circle_arcs());
  CHECK_THROWS_AS(descent_equivalence_h1(circle_arcs(), Ring::Z, part), DimensionError);
}
