#include "dchar/dccomplex.hpp"

namespace dchar {

namespace {

void place(RatMatrix& m, std::size_t r0, std::size_t c0, const RatMatrix& b, const Rat& s) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(b(i, j)) != 0) m(r0 + i, c0 + j) += s * b(i, j);
}

struct Layout {
  std::size_t nc, nh, nw;
  std::size_t size() const { return nc + nh + nw; }
};

Layout layout(const DeltaComplex& x, int s, int p) {
  if (p < 0 || p > x.dimension() + 1) return {0, 0, 0};
  return {x.count(p), x.count(p - 1), p >= s ? x.count(p) : 0};
}

}  // namespace

DCCoefficients::DCCoefficients(int s) : s_(s) {
  if (s < 0) throw DimensionError("DC parameter s must be non-negative");
}

std::string DCCoefficients::name() const { return "DC_" + std::to_string(s_); }

int DCCoefficients::top(const DeltaComplex& x) const { return x.dimension() + 1; }

std::vector<bool> DCCoefficients::mask(const DeltaComplex& x, int p) const {
  Layout l = layout(x, s_, p);
  std::vector<bool> m(l.size(), false);
  for (std::size_t i = 0; i < l.nc; ++i) m[i] = true;
  return m;
}

RatMatrix DCCoefficients::diff(const DeltaComplex& x, int p) const {
  Layout a = layout(x, s_, p), b = layout(x, s_, p + 1);
  RatMatrix m(b.size(), a.size());
  if (a.size() == 0 || b.size() == 0) return m;
  RatMatrix dp = to_rat(x.coboundary_matrix(p));
  RatMatrix dq = to_rat(x.coboundary_matrix(p - 1));
  // c' = dc
  place(m, 0, 0, dp, 1);
  // h' = ω − c − dh
  place(m, b.nc, 0, RatMatrix::identity(a.nc), -1);
  place(m, b.nc, a.nc, dq, -1);
  if (a.nw > 0) place(m, b.nc, a.nc + a.nh, RatMatrix::identity(a.nw), 1);
  // ω' = dω
  if (a.nw > 0 && b.nw > 0) place(m, b.nc + b.nh, a.nc + a.nh, dp, 1);
  return m;
}

RatMatrix DCCoefficients::pullback(const SimplicialMap& f, int p) const {
  Layout a = layout(*f.to, s_, p), b = layout(*f.from, s_, p);
  RatMatrix m(b.size(), a.size());
  place(m, 0, 0, cochain_pullback(f, p), 1);
  if (a.nh > 0 || b.nh > 0) place(m, b.nc, a.nc, cochain_pullback(f, p - 1), 1);
  if (a.nw > 0 || b.nw > 0) place(m, b.nc + b.nh, a.nc + a.nh, cochain_pullback(f, p), 1);
  return m;
}

DCTriple split_triple(const DeltaComplex& x, int s, int p, const RatVec& v) {
  Layout l = layout(x, s, p);
  if (v.size() != l.size()) throw DimensionError("DC vector has the wrong length");
  DCTriple t;
  t.degree = p;
  t.c.assign(v.begin(), v.begin() + l.nc);
  t.h.assign(v.begin() + l.nc, v.begin() + l.nc + l.nh);
  t.omega.assign(v.begin() + l.nc + l.nh, v.end());
  return t;
}

RatVec join_triple(const DeltaComplex& x, int s, const DCTriple& t) {
  Layout l = layout(x, s, t.degree);
  if (t.c.size() != l.nc || t.h.size() != l.nh || t.omega.size() != l.nw)
    throw DimensionError("DC triple of degree " + std::to_string(t.degree) +
                         " has component lengths (" + std::to_string(t.c.size()) + ", " +
                         std::to_string(t.h.size()) + ", " + std::to_string(t.omega.size()) +
                         "), expected (" + std::to_string(l.nc) + ", " + std::to_string(l.nh) +
                         ", " + std::to_string(l.nw) + ")");
  if (!is_integral(t.c)) throw DimensionError("c-component of a DC triple must be integral");
  RatVec v = t.c;
  v.insert(v.end(), t.h.begin(), t.h.end());
  v.insert(v.end(), t.omega.begin(), t.omega.end());
  return v;
}

DCComplex::DCComplex(ComplexPtr base, int s)
    : base_(std::move(base)), coeff_(s), mixed_(coeff_.complex(*base_)) {}

DCTriple DCComplex::zero(int n) const {
  return split_triple(*base_, s(), n, RatVec(mixed_.dim(n)));
}

RatVec DCComplex::pack(const DCTriple& x) const { return join_triple(*base_, s(), x); }

DCTriple DCComplex::unpack(int n, const RatVec& v) const {
  return split_triple(*base_, s(), n, v);
}

DCTriple dc_diff(const DCComplex& k, const DCTriple& x) {
  if (x.degree + 1 > k.mixed().top())
    throw DimensionError("dc_diff: degree " + std::to_string(x.degree) + " overflows");
  return k.unpack(x.degree + 1, k.mixed().apply_diff(x.degree, k.pack(x)));
}

bool dc_is_cocycle(const DCComplex& k, const DCTriple& x) {
  return k.mixed().is_cocycle(x.degree, k.pack(x));
}

ChainCategory dc_cocycles_h2(ComplexPtr x) {
  DCComplex k(std::move(x), 2);
  return ChainCategory(k.mixed(), 2);
}

// ---------------------------------------------------------------------------

Rat holonomy(const RatVec& h, const Chain& z) {
  if (h.size() != z.coeffs.size()) throw DimensionError("holonomy: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * Rat(z.coeffs[i]);
  return frac(s);
}

Rat DiffCharacter::operator()(const Chain& z) const {
  if (z.degree != k - 1) throw DimensionError("character evaluated on a chain of wrong degree");
  if (!is_cycle(*base, z)) throw DimensionError("character evaluated on a non-cycle");
  auto coords = solve_linear(to_rat(cycle_basis), to_rat(z.coeffs));
  if (!coords || !is_integral(*coords))
    throw std::logic_error("cycle has no integral coordinates in the cycle basis");
  Rat s = 0;
  for (std::size_t i = 0; i < coords->size(); ++i) s += (*coords)[i] * holonomy[i];
  return frac(s);
}

DiffCharacter to_character(const DCComplex& k, const DCTriple& x) {
  if (!dc_is_cocycle(k, x)) throw CategoryError("to_character: input is not a DC cocycle");
  DiffCharacter ch;
  ch.base = k.base();
  ch.k = x.degree;
  ch.curvature = x.omega.empty() ? RatVec(k.base()->count(x.degree)) : x.omega;
  ch.cycle_basis = k.base()->cycle_basis(x.degree - 1);
  for (std::size_t j = 0; j < ch.cycle_basis.cols(); ++j)
    ch.holonomy.push_back(holonomy(x.h, Chain{x.degree - 1, ch.cycle_basis.col(j)}));
  return ch;
}

bool character_check(const DiffCharacter& ch) {
  const DeltaComplex& x = *ch.base;
  for (std::size_t s = 0; s < x.count(ch.k); ++s) {
    IntVec e(x.count(ch.k));
    e[s] = 1;
    Chain bd = boundary(x, Chain{ch.k, e});
    Rat lhs = ch(bd);
    Rat rhs = frac(ch.curvature[s]);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace dchar
