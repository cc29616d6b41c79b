#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchar/dccomplex.hpp"
#include "support.hpp"

using namespace dchar;
using namespace testing_support;

namespace {

ComplexPtr space(const std::string& name) {
  return std::make_shared<const DeltaComplex>(standard_space(name));
}

RatVec random_element_of(const MixedComplex& m, int n, std::mt19937_64& rng) {
  std::vector<bool> mask = m.integral(n);
  RatVec v(mask.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = mask[i] ? Rat(random_int(rng, -4, 4)) : random_rat(rng);
  return v;
}

}  // namespace

TEST_CASE("layout of DC_s") {
  DCComplex k(space("circle_3"), 2);
  // DC^1 = C¹_ℤ ⊕ C⁰_ℚ, DC^2 = C²_ℤ ⊕ C¹_ℚ ⊕ C²_ℚ.
  CHECK(k.mixed().dim(1) == 6);
  CHECK(k.mixed().dim(2) == 3);
  DCTriple z = k.zero(1);
  CHECK(z.c.size() == 3);
  CHECK(z.h.size() == 3);
  CHECK(z.omega.empty());
  DCComplex k1(space("circle_3"), 1);
  CHECK(k1.zero(1).omega.size() == 3);
  CHECK_THROWS_AS(k.pack(DCTriple{1, {Rat(1, 2), 0, 0}, {0, 0, 0}, {}}), DimensionError);
  CHECK_THROWS_AS(k.pack(DCTriple{1, {0, 0}, {0, 0, 0}, {}}), DimensionError);
}

TEST_CASE("the DC differential") {
  auto x = space("torus_min");
  DCComplex k(x, 1);
  DCTriple t{1, {1, 0, 2}, {Rat(1, 2)}, {Rat(1, 3), 0, Rat(-1, 4)}};
  DCTriple dt = dc_diff(k, t);
  RatMatrix d1 = to_rat(x->coboundary_matrix(1)), d0 = to_rat(x->coboundary_matrix(0));
  CHECK(dt.c == d1 * t.c);
  CHECK(dt.h == sub(sub(t.omega, t.c), d0 * t.h));
  CHECK(dt.omega == d1 * t.omega);
  // Below degree s there is no ω: d(c) = (dc, −c).
  DCTriple v{0, {3}, {}, {}};
  DCTriple dv = dc_diff(k, v);
  CHECK(dv.c == RatVec{0, 0, 0});
  CHECK(dv.h == RatVec{-3});
}

TEST_CASE("dc_diff ∘ dc_diff = 0") {
  std::mt19937_64 rng(51);
  for (const auto& name : standard_space_names())
    for (int s : {1, 2}) {
      DCComplex k(space(name), s);
      for (int n = 0; n + 2 <= k.mixed().top(); ++n)
        for (int trial = 0; trial < 10; ++trial) {
          DCTriple x = k.unpack(n, random_element_of(k.mixed(), n, rng));
          CHECK(dc_is_cocycle(k, dc_diff(k, x)));
        }
    }
}

TEST_CASE("H⁰(DC_s) vanishes") {
  for (const auto& name : standard_space_names())
    for (int s : {1, 2}) {
      CAPTURE(name);
      CHECK(DCComplex(space(name), s).cohomology(0).is_trivial());
    }
}

TEST_CASE("DC_2 cohomology of the circle") {
  DCComplex k(space("circle_3"), 2);
  CHECK(k.cohomology(1).to_string() == "(Q/Z)^1");
  CHECK(k.cohomology(2).to_string() == "(Q/Z)^1");
  DCComplex k1(space("circle_3"), 1);
  // In degree s the cocycles (c, h, c + dh) carry the vertex values h mod constants.
  CHECK(k1.cohomology(1).to_string() == "Z + Q^2 + (Q/Z)^1");
  CHECK(k1.cohomology(2).is_trivial());
}

TEST_CASE("DC_1 and DC_2 cohomology of the sphere and torus") {
  DCComplex s1(space("sphere_octahedron"), 1);
  CHECK(s1.cohomology(2).to_string() == "Z");
  DCComplex t1(space("torus_min"), 1);
  CHECK(t1.cohomology(1).to_string() == "Z^2 + (Q/Z)^1");
  CHECK(t1.cohomology(2).to_string() == "Z");
  // H²(DC_2) of the torus: flat part (ℚ/ℤ)² and curvature lattice Z + Q.
  DCComplex t2(space("torus_min"), 2);
  CHECK(t2.cohomology(2).to_string() == "Z + Q + (Q/Z)^2");
}

TEST_CASE("differential characters of cocycles") {
  auto x = space("circle_3");
  DCComplex k(x, 2);
  // The circle has no 2-simplices, so every h is a degree-2 cocycle.
  DCTriple t{2, {}, {Rat(1, 3), Rat(1, 3), Rat(1, 2)}, {}};
  REQUIRE(dc_is_cocycle(k, t));
  DiffCharacter ch = to_character(k, t);
  CHECK(ch.holonomy.size() == 1);
  IntVec loop{1, 1, 1};
  CHECK(ch(Chain{1, loop}) == Rat(1, 6));
  CHECK(character_check(ch));
  CHECK_THROWS_AS(ch(Chain{1, IntVec{1, 0, 0}}), DimensionError);
}

TEST_CASE("character identity on random cocycles") {
  std::mt19937_64 rng(52);
  for (const char* name : {"sphere_octahedron", "torus_min", "rp2_min"}) {
    DCComplex k(space(name), 2);
    MixedGroup z = k.mixed().cocycles(2);
    for (int trial = 0; trial < 10; ++trial) {
      DCTriple x = k.unpack(2, random_element(z, rng));
      DiffCharacter ch = to_character(k, x);
      CAPTURE(name);
      CHECK(character_check(ch));
    }
    DCTriple bad = k.zero(2);
    bad.h[0] = Rat(1, 3);
    CHECK_THROWS_AS(to_character(k, bad), CategoryError);
  }
}
