#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchar/classify.hpp"
#include "support.hpp"

using namespace dchar;
using namespace testing_support;

namespace {

ComplexPtr space(const std::string& name) {
  return std::make_shared<const DeltaComplex>(standard_space(name));
}

ComplexPtr tetrahedron() {
  auto x = std::make_shared<DeltaComplex>();
  for (const char* v : {"v0", "v1", "v2", "v3"}) x->add_simplex(v, {});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      x->add_simplex("e" + std::to_string(a) + std::to_string(b),
                     {"v" + std::to_string(b), "v" + std::to_string(a)});
  auto e = [](int a, int b) { return "e" + std::to_string(a) + std::to_string(b); };
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        x->add_simplex("t" + std::to_string(a) + std::to_string(b) + std::to_string(c),
                       {e(b, c), e(a, c), e(a, b)});
  x->add_simplex("T", {"t123", "t023", "t013", "t012"});
  return x;
}

GaugeField field(const ComplexPtr& x, const std::vector<std::pair<std::string, Rat>>& values) {
  RatVec a(x->count(1));
  for (const auto& [id, v] : values) a[x->lookup(id).index] = v;
  return GaugeField::make(x, a);
}

GaugeField random_field(const ComplexPtr& x, std::mt19937_64& rng) {
  RatVec a(x->count(1));
  for (auto& v : a) v = frac(random_rat(rng, 1, 8));
  return GaugeField::make(x, a);
}

GaugeField flux_one() {
  return field(space("sphere_octahedron"),
               {{"e02", Rat(7, 8)}, {"e03", Rat(1, 8)}, {"e04", Rat(1, 4)}, {"e12", Rat(1, 8)},
                {"e13", Rat(7, 8)}, {"e14", Rat(3, 4)}, {"e24", Rat(1, 2)}});
}

}  // namespace

TEST_CASE("holonomy of a gauge field on the circle") {
  auto x = space("circle_3");
  GaugeField a = GaugeField::make(x, {Rat(1, 3), Rat(1, 3), Rat(1, 2)});
  CHECK(holonomy(a, Chain{1, IntVec{1, 1, 1}}) == Rat(1, 6));
  CHECK(holonomy(a, Chain{1, IntVec{-2, -2, -2}}) == Rat(2, 3));
  CHECK_THROWS_AS(holonomy(a, Chain{1, IntVec{1, 0, 0}}), DimensionError);
  CHECK(GaugeField::make(x, {Rat(-1, 3), 2, Rat(5, 2)}).a == RatVec{Rat(2, 3), 0, Rat(1, 2)});
}

TEST_CASE("the zero field has the zero cocycle") {
  for (const auto& name : {"circle_3", "sphere_octahedron", "torus_min"}) {
    auto x = space(name);
    DCComplex k(x, 2);
    DCTriple t = dch(k, GaugeField::make(x, RatVec(x->count(1))));
    CHECK(is_zero(k.pack(t)));
  }
}

TEST_CASE("gauge invariance and lift independence") {
  std::mt19937_64 rng(61);
  for (const auto& name : {"circle_3", "sphere_octahedron", "torus_min", "rp2_min"}) {
    auto x = space(name);
    DCComplex k(x, 2);
    IntMatrix loops = x->cycle_basis(1);
    for (int trial = 0; trial < 15; ++trial) {
      GaugeField a = random_field(x, rng);
      DCTriple t;
      try {
        t = dch(k, a);
      } catch (const MonopoleDetected&) {
        continue;
      }
      REQUIRE(dc_is_cocycle(k, t));
      CHECK(preq(k, t).a == a.a);

      RatVec g(x->count(0));
      for (auto& v : g) v = random_rat(rng, 1, 6);
      GaugeField b = gauge_act(GaugeTransformation::make(g), a);
      auto back = gauge_equivalent(a, b);
      REQUIRE(back.has_value());
      CHECK(gauge_act(*back, a).a == b.a);
      for (std::size_t j = 0; j < loops.cols(); ++j)
        CHECK(holonomy(a, Chain{1, loops.col(j)}) == holonomy(b, Chain{1, loops.col(j)}));
      CHECK(same_class(k, t, dch(k, b)));

      RatVec lift = a.a;
      for (auto& v : lift) v += Rat(random_int(rng, -2, 2));
      CHECK(same_class(k, t, dch(k, a, lift)));
    }
  }
}

TEST_CASE("fields with different holonomy are not gauge equivalent") {
  auto x = space("circle_3");
  GaugeField a = GaugeField::make(x, {Rat(1, 3), 0, 0});
  GaugeField b = GaugeField::make(x, {Rat(1, 4), 0, 0});
  CHECK_FALSE(gauge_equivalent(a, b).has_value());
  DCComplex k(x, 2);
  CHECK_FALSE(same_class(k, dch(k, a), dch(k, b)));
  CHECK_THROWS_AS(dch(k, a, RatVec{Rat(1, 2), 0, 0}), DimensionError);
}

TEST_CASE("a monopole on the tetrahedron") {
  auto x = tetrahedron();
  CHECK_NOTHROW(x->validate());
  DCComplex k(x, 2);
  GaugeField a = field(x, {{"e13", Rat(1, 4)}, {"e23", Rat(1, 2)}});
  try {
    dch(k, a);
    FAIL("expected a monopole");
  } catch (const MonopoleDetected& m) {
    CHECK(m.simplex() == "T");
  }
  CHECK_NOTHROW(dch(k, field(x, {{"e13", Rat(1, 4)}})));
}

TEST_CASE("preq rejects non-cocycles") {
  auto x = space("sphere_octahedron");
  DCComplex k(x, 2);
  DCTriple t = k.zero(2);
  t.h[0] = Rat(1, 3);
  CHECK_THROWS_AS(preq(k, t), CategoryError);
}

TEST_CASE("Chern number of a unit flux") {
  GaugeField a = flux_one();
  DCComplex k(a.base, 2);
  DCTriple t = dch(k, a);
  CHECK(chern_numbers(*a.base, t.c) == std::vector<Rat>{1});
  RatVec g(a.base->count(0));
  g[2] = Rat(1, 5);
  g[4] = Rat(2, 3);
  DCTriple u = dch(k, gauge_act(GaugeTransformation::make(g), a));
  CHECK(chern_numbers(*a.base, u.c) == std::vector<Rat>{1});
}

TEST_CASE("Chern morphism of a gauge transformation") {
  auto x = space("torus_min");
  DCComplex k1(x, 1);
  GaugeTransformation g = GaugeTransformation::make({Rat(1, 3)});
  DCTriple m = chern_morphism(k1, g, {Rat(1, 3)});
  CHECK(dc_is_cocycle(k1, m));
  DCTriple m2 = chern_morphism(k1, g, {Rat(4, 3)});
  CHECK(same_class(k1, m, m2));

  auto c = space("circle_3");
  DCComplex kc(c, 1);
  GaugeTransformation h = GaugeTransformation::make({0, Rat(1, 3), Rat(2, 3)});
  DCTriple w = chern_morphism(kc, h, {0, Rat(1, 3), Rat(2, 3)});
  // Winding once around the circle is not the trivial class.
  CHECK_FALSE(same_class(kc, w, kc.zero(1)));
  CHECK_THROWS_AS(chern_morphism(kc, h, {0, Rat(1, 3), Rat(1, 3)}), DimensionError);
}

TEST_CASE("Weil lift and projection") {
  for (const auto& name : {"sphere_octahedron", "torus_min", "rp2_min"}) {
    auto x = space(name);
    DCComplex k1(x, 1);
    IntMatrix d1 = x->coboundary_matrix(1);
    for (std::size_t i = 0; i < x->count(2); ++i) {
      RatVec c(x->count(2));
      c[i] = 1;
      DCTriple t = weil_lift(k1, c);
      CHECK(dc_is_cocycle(k1, t));
      CHECK(weil_project(k1, t) == c);
    }
    // A coboundary db lifts to an exact cocycle with an explicit primitive.
    RatVec b(x->count(1));
    b[0] = 1;
    RatVec db = to_rat(d1) * b;
    DCTriple t = weil_lift(k1, db);
    DCTriple y = weil_injectivity_witness(k1, t, b);
    DCTriple dy = dc_diff(k1, y);
    CHECK(dy.c == t.c);
    CHECK(dy.h == t.h);
    CHECK(dy.omega == t.omega);
  }
  auto s = space("sphere_octahedron");
  DCComplex k1(s, 1);
  RatVec c(s->count(2));
  c[0] = 1;
  CHECK_THROWS_AS(weil_lift(k1, c, RatVec(s->count(2))), NotCohomologous);
  RatVec e(s->count(1));
  e[0] = Rat(1, 2);
  RatVec w = add(c, to_rat(s->coboundary_matrix(1)) * e);
  DCTriple t = weil_lift(k1, c, w);
  CHECK(dc_is_cocycle(k1, t));
  CHECK(t.omega == w);
}

TEST_CASE("equivariant gauge fields") {
  auto x = space("circle_3");
  Nerve n(FinGroupAction::cyclic_trivial(2, x), 2);
  EquivariantGaugeField f{GaugeField::make(x, {Rat(1, 3), 0, 0}), RatVec(n.level(1).count(0))};
  CHECK(f.is_valid(n));
  for (std::size_t v = 0; v < 3; ++v) f.t[n.simplex(1, 0, v, {1})] = Rat(1, 2);
  CHECK(f.is_valid(n));
  for (std::size_t v = 0; v < 3; ++v) f.t[n.simplex(1, 0, v, {1})] = Rat(1, 3);
  CHECK_FALSE(f.is_valid(n));
  f.t[n.simplex(1, 0, 0, {1})] = Rat(1, 2);
  CHECK_FALSE(f.is_valid(n));
}

TEST_CASE("equivariant Weil lift") {
  std::mt19937_64 rng(62);
  auto pt = space("point");
  for (std::size_t order : {2, 3}) {
    EquivariantSetting st(FinGroupAction::cyclic_trivial(order, pt), 1);
    const MixedComplex& z = st.integral.complex();
    MixedGroup cyc = z.cocycles(2);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec c = random_element(cyc, rng);
      RatVec x = equivariant_weil_lift(st, c);
      CHECK(st.dc.complex().is_cocycle(2, x));
      CHECK(equivariant_weil_project(st, x) == c);
      RatVec b = random_int_vec(rng, z.dim(1), 3);
      RatVec e = z.apply_diff(1, b);
      CHECK(st.dc.complex().primitive(2, equivariant_weil_lift(st, e)).has_value());
    }
  }
}

TEST_CASE("Kostant sequence on a point with ℤ/2") {
  EquivariantSetting st(FinGroupAction::cyclic_trivial(2, space("point")), 2);
  KostantReport r = kostant_sequence_check(st);
  CHECK(r.kernel.to_string() == "Z/2");
  CHECK(r.flat.to_string() == "Z/2");
  CHECK(r.image.is_trivial());
  CHECK(r.h2.to_string() == "Z/2");
  CHECK(r.exact());
}

TEST_CASE("Kostant sequence on the torus and sphere") {
  EquivariantSetting t(FinGroupAction::trivial(space("torus_min")), 2);
  KostantReport r = kostant_sequence_check(t);
  CHECK(r.kernel.to_string() == "(Q/Z)^2");
  CHECK(r.exact());
  EquivariantSetting s(FinGroupAction::trivial(space("sphere_octahedron")), 2);
  KostantReport q = kostant_sequence_check(s, 4);
  CHECK(q.kernel.is_trivial());
  CHECK(q.image.free_rank == 1);
  CHECK(q.exact());
  // A curvature with a non-integral total flux has no preimage.
  RatVec w(s.nerve.level(0).count(2));
  w[0] = Rat(1, 2);
  CHECK_FALSE(is_integral_closed_basic(s, w));
  CHECK_FALSE(kostant_preimage(s, w).has_value());
}
