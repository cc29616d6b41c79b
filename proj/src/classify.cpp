#include "dchar/classify.hpp"

namespace dchar {

MonopoleDetected::MonopoleDetected(const std::string& simplex, const Rat& charge)
    : MathError("monopole detected: dK = " + charge.get_str() + " on 3-simplex '" + simplex +
                "'"),
      simplex_(simplex) {}

VortexDetected::VortexDetected(const std::string& simplex)
    : MathError("vortex detected: the rounded coboundary of the lift is not closed on '" +
                simplex + "'") {}

GaugeField GaugeField::make(ComplexPtr base, RatVec a) {
  if (base->dimension() < 1) throw DimensionError("gauge fields need a complex with edges");
  if (a.size() != base->count(1))
    throw DimensionError("gauge field has " + std::to_string(a.size()) + " values, expected " +
                         std::to_string(base->count(1)));
  for (auto& v : a) v = frac(v);
  return GaugeField{std::move(base), std::move(a)};
}

GaugeTransformation GaugeTransformation::make(RatVec g) {
  for (auto& v : g) v = frac(v);
  return GaugeTransformation{std::move(g)};
}

bool EquivariantGaugeField::is_valid(const Nerve& nerve) const {
  if (a.a.size() != nerve.level(0).count(1) || t.size() != nerve.level(1).count(0)) return false;
  RatVec lhs = sub(nerve_delta(nerve, 0, 1, a.a), to_rat(nerve.level(1).coboundary_matrix(0)) * t);
  if (!is_integral(lhs)) return false;
  return nerve.depth() < 2 || is_integral(nerve_delta(nerve, 1, 0, t));
}

GaugeField gauge_act(const GaugeTransformation& g, const GaugeField& a) {
  if (g.g.size() != a.base->count(0)) throw DimensionError("gauge transformation length");
  RatVec dg = to_rat(a.base->coboundary_matrix(0)) * g.g;
  return GaugeField::make(a.base, add(a.a, dg));
}

Rat holonomy(const GaugeField& a, const Chain& z) {
  if (z.degree != 1) throw DimensionError("holonomy is evaluated on 1-cycles");
  if (!is_cycle(*a.base, z)) throw DimensionError("holonomy of a chain that is not a cycle");
  return holonomy(a.a, z);
}

std::optional<GaugeTransformation> gauge_equivalent(const GaugeField& a, const GaugeField& b) {
  const std::size_t e = a.base->count(1);
  IntMatrix id(e, e);
  for (std::size_t i = 0; i < e; ++i) id(i, i) = 1;
  auto sol = solve_mixed(id, to_rat(a.base->coboundary_matrix(0)), sub(b.a, a.a));
  if (!sol) return std::nullopt;
  return GaugeTransformation::make(sol->rational);
}

DCTriple dch(const DCComplex& dc2, const GaugeField& a, const std::optional<RatVec>& lift) {
  if (dc2.s() != 2) throw DimensionError("dch produces DC_2 cocycles");
  const DeltaComplex& x = *dc2.base();
  RatVec h = a.a;
  if (lift) {
    if (lift->size() != h.size()) throw DimensionError("lift length mismatch");
    for (std::size_t i = 0; i < h.size(); ++i)
      if (frac((*lift)[i]) != a.a[i])
        throw DimensionError("lift disagrees with the field on edge '" + x.id(1, i) + "'");
    h = *lift;
  }
  RatVec dh = to_rat(x.coboundary_matrix(1)) * h;
  RatVec k(dh.size()), omega(dh.size()), c(dh.size());
  for (std::size_t i = 0; i < dh.size(); ++i) {
    k[i] = Rat(nearest_int(dh[i]));
    omega[i] = dh[i] - k[i];
    c[i] = -k[i];
  }
  RatVec dk = to_rat(x.coboundary_matrix(2)) * k;
  for (std::size_t i = 0; i < dk.size(); ++i)
    if (sgn(dk[i]) != 0) throw MonopoleDetected(x.id(3, i), dk[i]);
  return DCTriple{2, c, h, omega};
}

GaugeField preq(const DCComplex& dc2, const DCTriple& x) {
  if (x.degree != 2) throw DimensionError("preq expects a degree-2 DC triple");
  if (!dc_is_cocycle(dc2, x)) throw CategoryError("preq: input is not a DC_2 cocycle");
  return GaugeField::make(dc2.base(), x.h);
}

DCTriple chern_morphism(const DCComplex& dc1, const GaugeTransformation& g, const RatVec& lift) {
  if (dc1.s() != 1) throw DimensionError("chern_morphism lives in DC_1");
  const DeltaComplex& x = *dc1.base();
  if (lift.size() != g.g.size() || g.g.size() != x.count(0))
    throw DimensionError("gauge transformation length mismatch");
  for (std::size_t i = 0; i < lift.size(); ++i)
    if (frac(lift[i]) != g.g[i])
      throw DimensionError("lift disagrees with the transformation at '" + x.id(0, i) + "'");
  RatVec df = to_rat(x.coboundary_matrix(0)) * lift;
  RatVec m(df.size()), alpha(df.size());
  for (std::size_t i = 0; i < df.size(); ++i) {
    m[i] = Rat(nearest_int(df[i]));
    alpha[i] = df[i] - m[i];
  }
  RatVec dm = to_rat(x.coboundary_matrix(1)) * m;
  for (std::size_t i = 0; i < dm.size(); ++i)
    if (sgn(dm[i]) != 0) throw VortexDetected(x.id(2, i));
  return DCTriple{1, m, scale(lift, Rat(-1)), scale(alpha, Rat(-1))};
}

bool same_class(const DCComplex& dc, const DCTriple& x, const DCTriple& y) {
  if (x.degree != y.degree) return false;
  return dc.mixed().primitive(x.degree, sub(dc.pack(x), dc.pack(y))).has_value();
}

RatVec weil_project(const DCComplex& dc1, const DCTriple& x) {
  if (!dc_is_cocycle(dc1, x)) throw CategoryError("weil_project: input is not a cocycle");
  return x.c;
}

DCTriple weil_lift(const DCComplex& dc1, const RatVec& c, const std::optional<RatVec>& omega) {
  if (dc1.s() != 1) throw DimensionError("weil_lift produces DC_1 cocycles");
  const DeltaComplex& x = *dc1.base();
  if (c.size() != x.count(2) || !is_integral(c))
    throw DimensionError("weil_lift expects an integral 2-cochain");
  RatMatrix d1 = to_rat(x.coboundary_matrix(1)), d2 = to_rat(x.coboundary_matrix(2));
  if (!is_zero(d2 * c)) throw CategoryError("weil_lift: c is not a cocycle");
  RatVec w = omega ? *omega : c;
  if (w.size() != c.size()) throw DimensionError("ω has the wrong length");
  if (!is_zero(d2 * w)) throw CategoryError("weil_lift: ω is not closed");
  auto h = solve_linear(d1, sub(w, c));
  if (!h) throw NotCohomologous("ω is not cohomologous to c over Q");
  return DCTriple{2, c, *h, w};
}

DCTriple weil_injectivity_witness(const DCComplex& dc1, const DCTriple& x, const RatVec& b) {
  const DeltaComplex& k = *dc1.base();
  if (!dc_is_cocycle(dc1, x)) throw CategoryError("witness: input is not a cocycle");
  if (b.size() != k.count(1) || !is_integral(b))
    throw DimensionError("witness expects an integral 1-cochain b");
  if (to_rat(k.coboundary_matrix(1)) * b != x.c)
    throw CategoryError("witness: db differs from the c-component");
  DCTriple y{1, b, RatVec(k.count(0)), add(b, x.h)};
  DCTriple dy = dc_diff(dc1, y);
  if (dy.c != x.c || dy.h != x.h || dy.omega != x.omega)
    throw std::logic_error("weil_injectivity_witness: constructed primitive is wrong");
  return y;
}

std::vector<Rat> chern_numbers(const DeltaComplex& x, const RatVec& c) {
  IntMatrix basis = x.cycle_basis(2);
  std::vector<Rat> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    IntVec z = basis.col(j);
    int sign = 0;
    for (const auto& v : z)
      if (sgn(v) != 0) {
        sign = sgn(v);
        break;
      }
    Rat s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += c[i] * Rat(z[i]);
    out.push_back(sign < 0 ? Rat(-s) : s);
  }
  return out;
}

// ---------------------------------------------------------------------------

EquivariantSetting::EquivariantSetting(const FinGroupAction& action, int s_, int depth)
    : nerve(action, depth),
      s(s_),
      integral(nerve.object(), std::make_shared<CochainCoefficients>(Ring::Z)),
      dc(nerve.object(), std::make_shared<DCCoefficients>(s_)) {}

std::vector<DCTriple> EquivariantSetting::triples(int n, const RatVec& x) const {
  std::vector<DCTriple> out;
  for (const auto& b : dc.blocks(n))
    out.push_back(split_triple(nerve.level(b.q), s, b.p, dc.component(n, x, b.q)));
  return out;
}

RatVec EquivariantSetting::assemble(int n, const std::vector<DCTriple>& parts) const {
  std::vector<RatVec> by_q;
  for (std::size_t q = 0; q < parts.size(); ++q)
    by_q.push_back(join_triple(nerve.level(static_cast<int>(q)), s, parts[q]));
  return dc.assemble(n, by_q);
}

RatVec equivariant_weil_lift(const EquivariantSetting& st, const RatVec& c) {
  if (st.s != 1) throw DimensionError("equivariant_weil_lift needs DC_1");
  if (!st.integral.complex().is_element(2, c) || !st.integral.complex().is_cocycle(2, c))
    throw CategoryError("equivariant_weil_lift: input is not a total Z-cocycle");
  const Nerve& nv = st.nerve;
  RatVec c1 = st.integral.component(2, c, 0);
  RatVec c2 = st.integral.component(2, c, 1);
  RatVec c3 = st.integral.component(2, c, 2);

  // Level 0: (c₁, 0, c₁).
  RatVec h1(nv.level(0).count(1));
  RatVec w1 = c1;
  // Level 1: start from h₂' = 0, ω₂' = c₂ + δh₁, then correct by f with δf = c₃ − δh₂'.
  RatVec h2p(nv.level(1).count(0));
  RatVec w2p = add(c2, nerve_delta(nv, 0, 1, h1));
  RatVec f = avg_contract(nv, 2, 0, sub(c3, nerve_delta(nv, 1, 0, h2p)));
  RatVec h2 = add(h2p, f);
  RatVec w2 = add(w2p, to_rat(nv.level(1).coboundary_matrix(0)) * f);

  RatVec x = st.assemble(2, {DCTriple{2, c1, h1, w1}, DCTriple{1, c2, h2, w2},
                             DCTriple{0, c3, {}, {}}});
  if (!st.dc.complex().is_cocycle(2, x))
    throw std::logic_error("equivariant_weil_lift: lift is not closed");
  return x;
}

RatVec equivariant_weil_project(const EquivariantSetting& st, const RatVec& x) {
  std::vector<RatVec> parts;
  for (const auto& t : st.triples(2, x)) parts.push_back(t.c);
  return st.integral.assemble(2, parts);
}

RatVec kostant_eta(const EquivariantSetting& st, const RatVec& x) {
  if (st.s != 2) throw DimensionError("kostant_eta needs DC_2");
  if (!st.dc.complex().is_cocycle(2, x)) throw CategoryError("kostant_eta: not a cocycle");
  return st.triples(2, x)[0].omega;
}

bool is_integral_closed_basic(const EquivariantSetting& st, const RatVec& omega) {
  const DeltaComplex& g0 = st.nerve.level(0);
  if (!is_zero(to_rat(g0.coboundary_matrix(2)) * omega)) return false;
  if (!is_zero(nerve_delta(st.nerve, 0, 2, omega))) return false;
  IntMatrix cycles = g0.cycle_basis(2);
  for (std::size_t j = 0; j < cycles.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < omega.size(); ++i) s += omega[i] * Rat(cycles(i, j));
    if (!is_integral(s)) return false;
  }
  return true;
}

RatVec kostant_kernel_witness(const EquivariantSetting& st, const RatVec& x) {
  if (!st.dc.complex().is_cocycle(2, x)) throw CategoryError("kernel witness: not a cocycle");
  auto t = st.triples(2, x);
  if (!is_zero(t[0].omega)) throw CategoryError("kernel witness: curvature is not zero");
  RatVec u1 = t[0].h, u2 = scale(t[1].h, Rat(-1));
  for (auto& v : u1) v = frac(v);
  for (auto& v : u2) v = frac(v);
  return st.integral.assemble(1, {u1, u2});
}

bool qz_classes_equal(const EquivariantSetting& st, const RatVec& u, const RatVec& v) {
  const MixedComplex& z = st.integral.complex();
  const std::size_t n = z.dim(1);
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return solve_mixed(id, z.diff(0), sub(u, v)).has_value();
}

namespace {

RatMatrix coordinate_rows(std::size_t total, std::size_t offset, std::size_t len) {
  RatMatrix p(len, total);
  for (std::size_t i = 0; i < len; ++i) p(i, offset + i) = 1;
  return p;
}

// Places `b` at (r0, c0) inside a matrix of the given shape.
void put(RatMatrix& m, std::size_t r0, std::size_t c0, const RatMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

}  // namespace

std::optional<RatVec> kostant_preimage(const EquivariantSetting& st, const RatVec& omega) {
  const MixedComplex& z = st.integral.complex();
  const std::size_t n2 = z.dim(2), n1 = z.dim(1), n3 = z.dim(3);
  // Unknowns (c ∈ ℤ-total², h ∈ ℚ-total¹): c + d h = (ω, 0, 0), d c = 0.
  RatMatrix a(n2 + n3, n2 + n1);
  put(a, 0, 0, RatMatrix::identity(n2));
  put(a, 0, n2, z.diff(1));
  put(a, n2, 0, z.diff(2));
  std::vector<bool> mask(n2, true);
  mask.resize(n2 + n1, false);
  RatVec rhs(n2 + n3);
  const TotalBlock& b0 = st.integral.block(2, 0);
  if (omega.size() != b0.size) throw DimensionError("curvature has the wrong length");
  for (std::size_t i = 0; i < b0.size; ++i) rhs[b0.offset + i] = omega[i];
  auto sol = MixedSystem(a, mask).solve(rhs);
  if (!sol) return std::nullopt;
  RatVec c(sol->begin(), sol->begin() + n2), h(sol->begin() + n2, sol->end());
  RatVec c1 = st.integral.component(2, c, 0), c2 = st.integral.component(2, c, 1),
         c3 = st.integral.component(2, c, 2);
  RatVec h1 = st.integral.component(1, h, 0), h2 = st.integral.component(1, h, 1);
  RatVec x = st.assemble(2, {DCTriple{2, c1, h1, omega}, DCTriple{1, c2, scale(h2, Rat(-1)), {}},
                             DCTriple{0, c3, {}, {}}});
  if (!st.dc.complex().is_cocycle(2, x))
    throw std::logic_error("kostant_preimage: constructed cochain is not closed");
  return x;
}

KostantReport kostant_sequence_check(const EquivariantSetting& st, std::size_t samples,
                                     unsigned long seed) {
  if (st.s != 2) throw DimensionError("the Kostant sequence uses DC_2");
  if (st.nerve.depth() < 3) throw DimensionError("the Kostant sequence needs nerve depth ≥ 3");
  KostantReport r;
  const MixedComplex& d = st.dc.complex();
  const MixedComplex& z = st.integral.complex();

  // ker η: cocycles with ω₁ = 0, modulo coboundaries.
  const TotalBlock& b0 = st.dc.block(2, 0);
  const DeltaComplex& g0 = st.nerve.level(0);
  const std::size_t nc = g0.count(2), nh = g0.count(1), nw = g0.count(2);
  RatMatrix eta = coordinate_rows(d.dim(2), b0.offset + nc + nh, nw);
  MixedGroup flat_cocycles = mixed_kernel(vstack(d.diff(2), eta), d.integral(2));
  r.kernel = subquotient(flat_cocycles, d.coboundaries(2));
  r.flat = cohomology_qz(to_int(z.diff(0)), to_int(z.diff(1)));
  r.h2 = d.cohomology(2);

  // Ω²_{ℤ,cl,bas}: unknowns (ω, c, h) with dω = 0, δω = 0, d c = 0, (ω,0,0) = c + d h.
  const std::size_t n1 = z.dim(1), n2 = z.dim(2), n3 = z.dim(3);
  const std::size_t rows3 = g0.count(3), rows_delta = st.nerve.level(1).count(2);
  RatMatrix m(rows3 + rows_delta + n3 + n2, nw + n2 + n1);
  put(m, 0, 0, to_rat(g0.coboundary_matrix(2)));
  put(m, rows3, 0, st.integral.delta(0, 2));
  put(m, rows3 + rows_delta, nw, z.diff(2));
  const TotalBlock& zb0 = st.integral.block(2, 0);
  RatMatrix embed(n2, nw);
  for (std::size_t i = 0; i < nw; ++i) embed(zb0.offset + i, i) = 1;
  put(m, rows3 + rows_delta + n3, 0, embed);
  put(m, rows3 + rows_delta + n3, nw, scaled(RatMatrix::identity(n2), Rat(-1)));
  put(m, rows3 + rows_delta + n3, nw + n2, scaled(z.diff(1), Rat(-1)));
  std::vector<bool> mask(nw, false);
  mask.resize(nw + n2, true);
  mask.resize(nw + n2 + n1, false);
  r.curvatures = apply(coordinate_rows(nw + n2 + n1, 0, nw), mixed_kernel(m, mask));
  r.image = subquotient(r.curvatures, MixedGroup::zero(nw));

  r.kernel_matches_flat = r.kernel == r.flat;
  r.splits = r.h2 == direct_sum(r.kernel, r.image);

  r.surjective = true;
  auto check_preimage = [&](const RatVec& w) {
    auto x = kostant_preimage(st, w);
    ++r.preimages_checked;
    if (!x || kostant_eta(st, *x) != w || !is_integral_closed_basic(st, w)) r.surjective = false;
  };
  for (std::size_t j = 0; j < r.curvatures.lattice.cols(); ++j)
    check_preimage(r.curvatures.lattice.col(j));
  for (std::size_t j = 0; j < r.curvatures.subspace.cols(); ++j)
    check_preimage(r.curvatures.subspace.col(j));

  // Flat cocycles: exactness in H²_tot(DC_2) must match triviality of the witness.
  std::mt19937_64 rng(seed);
  std::vector<RatVec> xs;
  for (std::size_t j = 0; j < flat_cocycles.lattice.cols(); ++j)
    xs.push_back(flat_cocycles.lattice.col(j));
  for (std::size_t k = 0; k < samples; ++k) xs.push_back(random_element(flat_cocycles, rng));
  r.witnesses_consistent = true;
  const RatVec zero1(z.dim(1));
  std::vector<RatVec> us;
  for (const auto& x : xs) {
    RatVec u = kostant_kernel_witness(st, x);
    us.push_back(u);
    ++r.witnesses_checked;
    if (!is_integral(z.apply_diff(1, u))) r.witnesses_consistent = false;
    bool exact = d.primitive(2, x).has_value();
    if (exact != qz_classes_equal(st, u, zero1)) r.witnesses_consistent = false;
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    bool iso = d.primitive(2, sub(xs[i + 1], xs[i])).has_value();
    if (iso != qz_classes_equal(st, us[i + 1], us[i])) r.witnesses_consistent = false;
  }
  return r;
}

}  // namespace dchar
