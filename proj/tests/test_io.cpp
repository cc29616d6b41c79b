#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchar/io.hpp"

#include <functional>
#include <string>

using namespace dchar;

namespace {

std::string data(const std::string& name) { return std::string(DCHAR_DATA_DIR) + "/" + name; }

ComplexPtr load(const std::string& name) {
  return std::make_shared<const DeltaComplex>(parse_complex(read_file(data(name)), name));
}

std::string message(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool same_complex(const DeltaComplex& a, const DeltaComplex& b) {
  return format_complex(a) == format_complex(b);
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-2/4") == Rat(-1, 2));
  CHECK(parse_rational("+7/3") == Rat(7, 3));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("1/-2").has_value());
  CHECK_FALSE(parse_rational("0.5").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("-").has_value());
}

TEST_CASE("digests") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
  Report r;
  r.add("x", "1");
  r.add("ok", true);
  r.add_input("complex", "p.dcx", "");
  CHECK(r.str() == "x = 1\nok = true\ninput.complex = p.dcx fnv1a64:cbf29ce484222325\n");
  CHECK(format_vector({Rat(1, 2), -3}) == "(1/2, -3)");
}

TEST_CASE("complex round trip and the shipped data files") {
  for (const auto& name : standard_space_names()) {
    DeltaComplex x = standard_space(name);
    CHECK(same_complex(parse_complex(format_complex(x), name), x));
  }
  CHECK(same_complex(*load("circle.dcx"), standard_space("circle_3")));
  CHECK(same_complex(*load("sphere.dcx"), standard_space("sphere_octahedron")));
  CHECK(same_complex(*load("torus.dcx"), standard_space("torus_min")));
  CHECK(same_complex(*load("rp2.dcx"), standard_space("rp2_min")));
  CHECK(same_complex(*load("point.dcx"), standard_space("point")));
  CHECK(same_complex(*load("interval.dcx"), standard_space("interval")));
}

TEST_CASE("complex parse errors carry line numbers") {
  CHECK(message([] { parse_complex("simplex a\nsimplex e : a b\n", "x.dcx"); })
            .starts_with("x.dcx:2: "));
  CHECK(message([] { parse_complex("simplex a\nvertex b\n", "x.dcx"); }).starts_with("x.dcx:2: "));
  CHECK(message([] { parse_complex("# only a comment\n", "x.dcx"); }).starts_with("x.dcx: "));
  CHECK(message([] { read_file(data("no_such_file.dcx")); }).find("cannot open") !=
        std::string::npos);
  std::string bad = message([] { parse_complex(read_file(DCHAR_FIXTURE_DIR "/bad_face.dcx"), "b"); });
  CHECK(bad.find("e02") != std::string::npos);
}

TEST_CASE("cochains and chains") {
  ComplexPtr x = load("sphere.dcx");
  Cochain c = parse_cochain(read_file(data("sphere_c2.coc")), "sphere_c2.coc", x);
  CHECK(c.degree == 2);
  CHECK(c.ring == Ring::Z);
  CHECK(c.values[x->lookup("t024").index] == 1);
  Cochain back = parse_cochain(format_cochain(c), "r", x);
  CHECK(back.values == c.values);
  CHECK(message([&] { parse_cochain("degree 2 ring Z\nt024 = 1/2\n", "c", x); })
            .starts_with("c:2: "));
  CHECK(message([&] { parse_cochain("degree 2 ring R\n", "c", x); }).starts_with("c:1: "));
  CHECK(message([&] { parse_cochain("degree 2 ring Q\ne02 = 1\n", "c", x); }).starts_with("c:2: "));
  CHECK(message([&] { parse_cochain("degree 1 ring Q\ne02 = 1\ne02 = 2\n", "c", x); })
            .starts_with("c:3: "));
  Cochain qz = parse_cochain("degree 1 ring QZ\ne02 = 5/4\n", "c", x);
  CHECK(qz.values[x->lookup("e02").index] == Rat(1, 4));

  ComplexPtr circle = load("circle.dcx");
  Chain z = parse_chain(read_file(data("circle_loop.chn")), "loop", *circle);
  CHECK(z.degree == 1);
  CHECK(is_cycle(*circle, z));
  CHECK(message([&] { parse_chain("chain 1\ne01 = 1/2\n", "z", *circle); }).starts_with("z:2: "));
}

TEST_CASE("group actions") {
  ComplexPtr pt = load("point.dcx");
  FinGroupAction z2 = parse_action(read_file(data("z2.grp")), "z2", pt);
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 0);
  FinGroupAction z3 = parse_action(read_file(data("z3.grp")), "z3", pt);
  CHECK(z3.order() == 3);
  CHECK(z3.inverse(1) == 2);
  ComplexPtr two = load("two_circles.dcx");
  FinGroupAction sw = parse_action(read_file(data("swap.grp")), "swap", two);
  CHECK(sw.act(1, 0, two->lookup("a0").index) == two->lookup("b0").index);
  ComplexPtr pts = load("two_points.dcx");
  FinGroupAction sp = parse_action(read_file(data("swap_points.grp")), "sp", pts);
  CHECK(sp.act(1, 0, 0) == 1);

  CHECK(message([&] { parse_action("group 2\n", "g", pt); }).find("missing product") !=
        std::string::npos);
  CHECK(message([&] { parse_action("group 2\nmul 1 1 = 3\n", "g", pt); }).starts_with("g:2: "));
  CHECK(message([&] { parse_action("group 2\nmul 1 1 = 1\n", "g", pt); }).starts_with("g: "));
}

TEST_CASE("covers") {
  ComplexPtr circle = load("circle.dcx");
  CoverFile f = parse_cover(read_file(data("circle_arcs.cov")), "arcs", circle);
  CHECK(f.cover.size() == 2);
  REQUIRE(f.partition.has_value());
  CHECK(f.partition->weight[circle->lookup("v1").index][0] == 1);
  ComplexPtr torus = load("torus.dcx");
  CoverFile t = parse_cover(read_file(data("torus_triangles.cov")), "tri", torus);
  CHECK(t.cover.tau[0][0] == *t.cover.element("L"));
  CHECK(message([&] { parse_cover("element A : e01\n", "c", circle); }).starts_with("c: "));
  CHECK(message([&] { parse_cover("element A : e01 e12 e20\nweight v0 A = 1/2\n", "c", circle); })
            .find("sum to") != std::string::npos);
  CHECK(message([&] { parse_cover("elem A\n", "c", circle); }).starts_with("c:1: "));
}

TEST_CASE("gauge files") {
  std::string text = read_file(data("circle.gau"));
  CHECK(referenced_complex(text) == std::string("circle.dcx"));
  ComplexPtr circle = load("circle.dcx");
  GaugeFile g = parse_gauge(text, "circle.gau", circle);
  CHECK(holonomy(g.field, Chain{1, IntVec{1, 1, 1}}) == Rat(1, 6));
  CHECK(message([&] { parse_gauge("gauge\ne01 = 1\n", "g", circle); }).starts_with("g:2: "));
  CHECK(message([&] { parse_gauge("gauge\nv0 = 1/2\n", "g", circle); }).starts_with("g:2: "));

  GaugeFile d = parse_gauge("gauge\ne01 = 1/3\ndescent\nv0@1 = 1/2\n", "g", circle);
  Nerve n(FinGroupAction::cyclic_trivial(2, circle), 2);
  EquivariantGaugeField eq = resolve_descent(d, n, "g");
  CHECK(eq.t[n.simplex(1, 0, 0, {1})] == Rat(1, 2));
  GaugeFile bad = parse_gauge("gauge\ndescent\nv9@1 = 1/2\n", "g", circle);
  CHECK(message([&] { resolve_descent(bad, n, "g"); }).find("v9@1") != std::string::npos);
}

TEST_CASE("DC triples") {
  std::string text = read_file(data("torus.dc"));
  CHECK(referenced_complex(text) == std::string("torus.dcx"));
  ComplexPtr torus = load("torus.dcx");
  DCTriple t = parse_dc_triple(text, "torus.dc", torus, 2);
  CHECK(t.degree == 2);
  CHECK(t.h.size() == 3);
  CHECK(t.omega == RatVec{Rat(1, 4), Rat(1, 4)});
  CHECK(dc_is_cocycle(DCComplex(torus, 2), t));
  CHECK(message([&] { parse_dc_triple("h:\ndegree 1 ring Q\n", "t", torus, 2); })
            .find("missing 'c:'") != std::string::npos);
  CHECK(message([&] {
          parse_dc_triple("c:\ndegree 1 ring Z\nomega:\ndegree 1 ring Q\n", "t", torus, 2);
        }).find("no omega") != std::string::npos);
  CHECK(message([&] { parse_dc_triple("c:\ndegree 2 ring Q\n", "t", torus, 2); })
            .starts_with("t:2: "));
  CHECK(message([&] { parse_dc_triple("c:\ndegree 2 ring Z\nh:\ndegree 2 ring Q\n", "t", torus, 2); })
            .starts_with("t:4: "));
}
