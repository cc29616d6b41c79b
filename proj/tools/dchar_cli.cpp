#include "dchar/classify.hpp"
#include "dchar/descent.hpp"
#include "dchar/io.hpp"
#include "dchar/nerve.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace dchar;

namespace {

struct Loaded {
  std::string path;
  std::string text;
};

Loaded load(const std::string& path) { return Loaded{path, read_file(path)}; }

ComplexPtr load_complex(const std::string& path, Report& report) {
  Loaded f = load(path);
  report.add_input("complex", f.path, f.text);
  return std::make_shared<const DeltaComplex>(parse_complex(f.text, f.path));
}

// The complex a data file refers to: the override if given, else the path on
// its header line resolved against the file's directory.
ComplexPtr referenced(const Loaded& f, const std::string& override_path, Report& report) {
  if (!override_path.empty()) return load_complex(override_path, report);
  auto ref = referenced_complex(f.text);
  if (!ref) throw InputError(f.path, 1, "no complex named on the header line; pass --complex");
  std::filesystem::path p(*ref);
  if (p.is_relative()) p = std::filesystem::path(f.path).parent_path() / p;
  return load_complex(p.string(), report);
}

std::string named(const DeltaComplex& x, int dim, const RatVec& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + x.id(dim, i) + ": " + v[i].get_str();
  return out + "}";
}

Ring parse_ring(const std::string& s) {
  if (s == "Z") return Ring::Z;
  if (s == "Q") return Ring::Q;
  if (s == "QZ") return Ring::QZ;
  throw InputError("--ring", "unknown ring '" + s + "'");
}

struct Options {
  std::string complex, gauge, dc, cycle, cocycle, group, cover, ring = "Z", rho = "section";
  int degree = 0;
  int s = -1;
  bool flip_delta = false;
};

int run(const std::string& command, const Options& o, const std::string& echo) {
  Report r;
  r.add("command", echo);
  bool ok = true;
  std::string reason;

  if (command == "cohomology") {
    ComplexPtr x = load_complex(o.complex, r);
    Ring ring = parse_ring(o.ring);
    r.add("ring", ring_name(ring));
    r.add("degree", std::to_string(o.degree));
    r.add("cohomology", simplicial_cohomology(*x, o.degree, ring).to_string());
  } else if (command == "dc-cohomology") {
    ComplexPtr x = load_complex(o.complex, r);
    int s = o.s < 0 ? 2 : o.s;
    DCComplex dc(x, s);
    if (o.degree < 0 || o.degree > dc.mixed().top())
      throw InputError("--degree", "degree out of range 0.." + std::to_string(dc.mixed().top()));
    r.add("s", std::to_string(s));
    r.add("degree", std::to_string(o.degree));
    r.add("cohomology", dc.cohomology(o.degree).to_string());
  } else if (command == "chern") {
    Loaded f = load(o.gauge);
    r.add_input("gauge", f.path, f.text);
    ComplexPtr x = referenced(f, o.complex, r);
    GaugeFile g = parse_gauge(f.text, f.path, x);
    DCComplex dc2(x, 2);
    DCTriple t = dch(dc2, g.field);
    r.add("c", named(*x, 2, t.c));
    r.add("omega", named(*x, 2, t.omega));
    auto numbers = chern_numbers(*x, t.c);
    if (numbers.size() == 1) {
      r.add("chern_number", numbers[0].get_str());
    } else {
      r.add("chern_numbers", format_vector(numbers));
    }
  } else if (command == "preq") {
    Loaded f = load(o.dc);
    r.add_input("dc", f.path, f.text);
    ComplexPtr x = referenced(f, o.complex, r);
    DCComplex dc2(x, 2);
    DCTriple t = parse_dc_triple(f.text, f.path, x, 2);
    if (t.degree != 2) throw InputError(f.path, "preq expects a degree-2 triple");
    GaugeField a = preq(dc2, t);
    r.add("a", named(*x, 1, a.a));
    r.add("round_trip_isomorphic", same_class(dc2, dch(dc2, a), t));
  } else if (command == "holonomy") {
    Loaded f = load(o.gauge);
    r.add_input("gauge", f.path, f.text);
    ComplexPtr x = referenced(f, o.complex, r);
    GaugeFile g = parse_gauge(f.text, f.path, x);
    Loaded c = load(o.cycle);
    r.add_input("cycle", c.path, c.text);
    Chain z = parse_chain(c.text, c.path, *x);
    if (z.degree != 1 || !is_cycle(*x, z)) throw InputError(c.path, "not a 1-cycle");
    r.add("holonomy", holonomy(g.field, z).get_str());
  } else if (command == "weil") {
    ComplexPtr x = load_complex(o.complex, r);
    DCComplex dc1(x, 1);
    AbGroupPresentation hz = simplicial_cohomology(*x, 2, Ring::Z);
    AbGroupPresentation hdc = dc1.cohomology(2);
    r.add("h2_integral", hz.to_string());
    r.add("h2_dc1", hdc.to_string());
    r.add("presentations_match", hz == hdc);
    ok = hz == hdc;
    if (!ok) reason = "H^2 presentations differ";
    if (!o.cocycle.empty()) {
      Loaded f = load(o.cocycle);
      r.add_input("cocycle", f.path, f.text);
      Cochain c = parse_cochain(f.text, f.path, x);
      if (c.degree != 2 || c.ring != Ring::Z)
        throw InputError(f.path, "weil expects a degree-2 Z cocycle");
      DCTriple lift = weil_lift(dc1, c.values);
      r.add("lift.h", named(*x, 1, lift.h));
      r.add("lift.omega", named(*x, 2, lift.omega));
      bool back = weil_project(dc1, lift) == c.values;
      r.add("project_of_lift_is_input", back);
      if (!back) {
        ok = false;
        reason = "projection of the lift differs from the input";
      }
    }
  } else if (command == "equivariant") {
    ComplexPtr x = load_complex(o.complex, r);
    Loaded gf = load(o.group);
    r.add_input("group", gf.path, gf.text);
    FinGroupAction action = parse_action(gf.text, gf.path, x);
    if (o.degree < 0) throw InputError("--degree", "degree must be non-negative");
    Nerve nerve(action, std::max(o.degree + 1, 2));
    r.add("degree", std::to_string(o.degree));
    if (o.s >= 0) {
      TotalComplex tot(nerve.object(), std::make_shared<DCCoefficients>(o.s));
      r.add("coefficients", "DC_" + std::to_string(o.s));
      r.add("cohomology", tot.cohomology(o.degree).to_string());
    } else {
      Ring ring = parse_ring(o.ring);
      r.add("coefficients", ring_name(ring));
      r.add("cohomology", equivariant_cohomology(nerve, o.degree, ring).to_string());
    }
  } else if (command == "kostant") {
    ComplexPtr x = load_complex(o.complex, r);
    FinGroupAction action = FinGroupAction::trivial(x);
    if (!o.group.empty()) {
      Loaded gf = load(o.group);
      r.add_input("group", gf.path, gf.text);
      action = parse_action(gf.text, gf.path, x);
    }
    EquivariantSetting st(action, 2, 3);
    KostantReport k = kostant_sequence_check(st);
    r.add("kernel", k.kernel.to_string());
    r.add("flat_h1", k.flat.to_string());
    r.add("curvature_group", k.image.to_string());
    r.add("h2", k.h2.to_string());
    r.add("kernel_matches_flat", k.kernel_matches_flat);
    r.add("eta_surjective", k.surjective);
    r.add("h2_splits", k.splits);
    r.add("witnesses_consistent", k.witnesses_consistent);
    r.add("preimages_checked", std::to_string(k.preimages_checked));
    r.add("witnesses_checked", std::to_string(k.witnesses_checked));
    ok = k.exact();
    if (!ok) reason = "sequence is not exact";
  } else if (command == "descent-check") {
    ComplexPtr x = load_complex(o.complex, r);
    Loaded cf = load(o.cover);
    r.add_input("cover", cf.path, cf.text);
    CoverFile cover = parse_cover(cf.text, cf.path, x);
    Ring ring = parse_ring(o.ring);
    DescentOptions opt;
    opt.flip_delta = o.flip_delta;
    if (o.rho == "partition") {
      opt.partition = cover.partition ? *cover.partition : PartitionOfUnity::uniform(cover.cover);
    } else if (o.rho != "section") {
      throw InputError("--rho", "expected 'section' or 'partition'");
    }
    DescentReport d = descent_equivalence_h1(cover.cover, ring, opt);
    r.add("ring", ring_name(ring));
    r.add("rho", o.rho);
    r.add("h1_base", d.base_h1.to_string());
    r.add("h1_total", d.total_h1.to_string());
    r.add("rho_identities", d.identities_hold);
    r.add("fully_faithful", d.fully_faithful);
    r.add("essentially_surjective", d.essentially_surjective);
    r.add("pairs_checked", std::to_string(d.pairs_checked));
    r.add("objects_checked", std::to_string(d.objects_checked));
    for (std::size_t i = 0; i < d.failures.size(); ++i)
      r.add("failure." + std::to_string(i), d.failures[i]);
    ok = d.certified();
    if (!ok) reason = d.failures.empty() ? "not certified" : d.failures.front();
  }

  r.add("status", ok ? "ok" : "failed");
  std::cout << r.str();
  if (!ok) std::cerr << command << " check failed: " << reason << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential cohomology and lattice gauge field classification"};
  app.require_subcommand(1);
  Options o;

  auto add_complex = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--complex", o.complex, "Δ-complex file");
    if (required) opt->required();
  };
  auto* coh = app.add_subcommand("cohomology", "H^n of the simplicial cochains");
  add_complex(coh, true);
  coh->add_option("--ring", o.ring, "Z, Q or QZ")->required();
  coh->add_option("--degree", o.degree)->required();

  auto* dcc = app.add_subcommand("dc-cohomology", "H^n of DC_s");
  add_complex(dcc, true);
  dcc->add_option("--s", o.s)->required();
  dcc->add_option("--degree", o.degree)->required();

  auto* chern = app.add_subcommand("chern", "Chern numbers of a gauge field");
  chern->add_option("--gauge", o.gauge)->required();
  add_complex(chern, false);

  auto* pq = app.add_subcommand("preq", "gauge field of a DC_2 cocycle");
  pq->add_option("--dc", o.dc)->required();
  add_complex(pq, false);

  auto* hol = app.add_subcommand("holonomy", "holonomy around a 1-cycle");
  hol->add_option("--gauge", o.gauge)->required();
  hol->add_option("--cycle", o.cycle)->required();
  add_complex(hol, false);

  auto* weil = app.add_subcommand("weil", "integral classes versus DC_1 classes in degree 2");
  add_complex(weil, true);
  weil->add_option("--cocycle", o.cocycle, "degree-2 Z cocycle to lift");

  auto* eq = app.add_subcommand("equivariant", "cohomology of the action groupoid");
  add_complex(eq, true);
  eq->add_option("--group", o.group)->required();
  eq->add_option("--degree", o.degree)->required();
  eq->add_option("--s", o.s, "use DC_s coefficients");
  eq->add_option("--ring", o.ring, "Z, Q or QZ (without --s)");

  auto* kos = app.add_subcommand("kostant", "flat / curvature exact sequence in degree 2");
  add_complex(kos, true);
  kos->add_option("--group", o.group);

  auto* desc = app.add_subcommand("descent-check", "gluing of degree-1 objects along a cover");
  add_complex(desc, true);
  desc->add_option("--cover", o.cover)->required();
  desc->add_option("--ring", o.ring, "Z or Q");
  desc->add_option("--rho", o.rho, "section or partition");
  desc->add_flag("--flip-delta", o.flip_delta, "negate the Čech differential (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string echo = "dchar";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o, echo);
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CategoryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
