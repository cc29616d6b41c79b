#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchar/complex.hpp"
#include "support.hpp"

using namespace dchar;
using namespace testing_support;

namespace {

struct Known {
  const char* name;
  std::vector<std::string> h;  // H^0, H^1, H^2 over ℤ
  long euler;
};

const std::vector<Known> kKnown = {
    {"point", {"Z", "0", "0"}, 1},
    {"interval", {"Z", "0", "0"}, 1},
    {"circle_3", {"Z", "Z", "0"}, 0},
    {"sphere_octahedron", {"Z", "0", "Z"}, 2},
    {"torus_min", {"Z", "Z^2", "Z"}, 0},
    {"rp2_min", {"Z", "0", "Z/2"}, 1},
};

}  // namespace

TEST_CASE("standard spaces validate and have d∘d = 0") {
  for (const auto& name : standard_space_names()) {
    DeltaComplex x = standard_space(name);
    CHECK_NOTHROW(x.validate());
    for (int n = -1; n <= x.dimension(); ++n)
      CHECK((x.coboundary_matrix(n + 1) * x.coboundary_matrix(n)).is_zero());
  }
  CHECK_THROWS_AS(standard_space("klein_bottle"), ComplexError);
}

TEST_CASE("integral cohomology of the standard spaces") {
  for (const auto& k : kKnown) {
    DeltaComplex x = standard_space(k.name);
    CAPTURE(k.name);
    CHECK(x.euler_characteristic() == k.euler);
    for (int n = 0; n < 3; ++n) CHECK(simplicial_cohomology(x, n, Ring::Z).to_string() == k.h[n]);
  }
}

TEST_CASE("cohomology with ℚ and ℚ/ℤ coefficients") {
  DeltaComplex t = standard_space("torus_min"), r = standard_space("rp2_min");
  CHECK(simplicial_cohomology(t, 1, Ring::Q).to_string() == "Q^2");
  CHECK(simplicial_cohomology(t, 1, Ring::QZ).to_string() == "(Q/Z)^2");
  CHECK(simplicial_cohomology(r, 1, Ring::QZ).to_string() == "Z/2");
  CHECK(simplicial_cohomology(r, 2, Ring::QZ).to_string() == "0");
  CHECK(simplicial_cohomology(r, 2, Ring::Q).to_string() == "0");
}

TEST_CASE("mod-p Betti numbers agree with universal coefficients") {
  for (const auto& name : standard_space_names()) {
    DeltaComplex x = standard_space(name);
    for (long p : {2L, 3L, 5L}) {
      for (int n = 0; n <= x.dimension(); ++n) {
        std::size_t betti = x.count(n) - rank_mod_p(x.coboundary_matrix(n), p) -
                            rank_mod_p(x.coboundary_matrix(n - 1), p);
        AbGroupPresentation h = simplicial_cohomology(x, n, Ring::Z);
        AbGroupPresentation h1 = simplicial_cohomology(x, n + 1, Ring::Z);
        std::size_t expect = h.free_rank;
        for (const auto& t : h.torsion) expect += t % p == 0 ? 1 : 0;
        for (const auto& t : h1.torsion) expect += t % p == 0 ? 1 : 0;
        CAPTURE(name);
        CAPTURE(n);
        CHECK(betti == expect);
      }
    }
  }
}

TEST_CASE("Stokes pairing and cycle bases") {
  std::mt19937_64 rng(21);
  for (const auto& name : standard_space_names()) {
    auto x = std::make_shared<const DeltaComplex>(standard_space(name));
    for (int n = 0; n < x->dimension(); ++n) {
      Cochain c = Cochain::make(x, n, Ring::Q, random_rat_vec(rng, x->count(n)));
      IntVec s(x->count(n + 1));
      for (auto& v : s) v = random_int(rng, -3, 3);
      Chain z{n + 1, s};
      CHECK(evaluate(coboundary(c), z) == evaluate(c, boundary(*x, z)));
    }
    for (int n = 0; n <= x->dimension(); ++n) {
      IntMatrix b = x->cycle_basis(n);
      for (std::size_t j = 0; j < b.cols(); ++j) CHECK(is_cycle(*x, Chain{n, b.col(j)}));
    }
  }
  DeltaComplex s = standard_space("sphere_octahedron");
  CHECK(s.cycle_basis(2).cols() == 1);
  CHECK(s.cycle_basis(1).cols() == 7);
}

TEST_CASE("construction errors name the simplex") {
  DeltaComplex x;
  x.add_simplex("v", {});
  CHECK_THROWS_AS(x.add_simplex("v", {}), ComplexError);
  CHECK_THROWS_AS(x.add_simplex("e", {"v", "w"}), ComplexError);
  x.add_simplex("w", {});
  x.add_simplex("e", {"w", "v"});
  x.add_simplex("f", {"w", "v"});
  CHECK_THROWS_AS(x.add_simplex("t", {"e", "v", "f"}), ComplexError);
  DeltaComplex y;
  y.add_simplex("a", {});
  y.add_simplex("b", {});
  y.add_simplex("c", {});
  y.add_simplex("ab", {"b", "a"});
  y.add_simplex("bc", {"c", "b"});
  y.add_simplex("ac", {"c", "a"});
  y.add_simplex("t", {"bc", "ab", "ac"});
  try {
    y.validate();
    FAIL("expected a simplicial identity violation");
  } catch (const ComplexError& e) {
    CHECK(std::string(e.what()).find("'t'") != std::string::npos);
  }
}

TEST_CASE("cochains") {
  auto x = std::make_shared<const DeltaComplex>(standard_space("circle_3"));
  CHECK_THROWS_AS(Cochain::make(x, 1, Ring::Z, {Rat(1, 2), 0, 0}), DimensionError);
  CHECK_THROWS_AS(Cochain::make(x, 1, Ring::Q, {0, 0}), DimensionError);
  Cochain q = Cochain::make(x, 1, Ring::QZ, {Rat(3, 2), Rat(-1, 3), 0});
  CHECK(q.values == RatVec{Rat(1, 2), Rat(2, 3), 0});
  Cochain v = Cochain::make(x, 0, Ring::Z, {1, 1, 1});
  CHECK(is_cocycle(v));
  CHECK(x->first_vertex(1, 0) == 0);
  CHECK(x->vertices(1, 2) == std::vector<std::size_t>{2, 0});
}
