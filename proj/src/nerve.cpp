#include "dchar/nerve.hpp"

#include <numeric>

namespace dchar {

FinGroupAction::FinGroupAction(std::vector<std::vector<std::size_t>> mul, ComplexPtr base,
                               std::vector<std::vector<std::vector<std::size_t>>> perm)
    : mul_(std::move(mul)), base_(std::move(base)), perm_(std::move(perm)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw ActionError("group has no elements");
  for (const auto& row : mul_) {
    if (row.size() != n) throw ActionError("multiplication table is not square");
    for (auto x : row)
      if (x >= n) throw ActionError("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (mul_[0][a] != a || mul_[a][0] != a) throw ActionError("element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw ActionError("multiplication is not associative at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
  for (std::size_t a = 0; a < n; ++a) (void)inverse(a);

  const DeltaComplex& x = *base_;
  if (perm_.empty()) {
    perm_.resize(n);
    for (auto& pg : perm_)
      for (int d = 0; d <= x.dimension(); ++d) {
        pg.emplace_back(x.count(d));
        std::iota(pg.back().begin(), pg.back().end(), 0);
      }
  }
  if (perm_.size() != n) throw ActionError("action table does not cover every group element");
  for (std::size_t g = 0; g < n; ++g) {
    if (static_cast<int>(perm_[g].size()) != x.dimension() + 1)
      throw ActionError("action of element " + std::to_string(g) + " has the wrong dimensions");
    for (int d = 0; d <= x.dimension(); ++d) {
      const auto& p = perm_[g][d];
      if (p.size() != x.count(d)) throw ActionError("action table has the wrong size");
      std::vector<bool> hit(p.size(), false);
      for (auto v : p) {
        if (v >= p.size() || hit[v])
          throw ActionError("element " + std::to_string(g) + " does not permute " +
                            std::to_string(d) + "-simplices");
        hit[v] = true;
      }
      for (std::size_t s = 0; s < p.size(); ++s) {
        if (g == 0 && p[s] != s) throw ActionError("identity element moves '" + x.id(d, s) + "'");
        if (d > 0) {
          const auto& fa = x.faces(d, s);
          const auto& fb = x.faces(d, p[s]);
          for (std::size_t k = 0; k < fa.size(); ++k)
            if (perm_[g][d - 1][fa[k]] != fb[k])
              throw ActionError("element " + std::to_string(g) +
                                " is not simplicial on '" + x.id(d, s) + "'");
        }
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (int d = 0; d <= x.dimension(); ++d)
        for (std::size_t s = 0; s < x.count(d); ++s)
          if (perm_[g][d][perm_[h][d][s]] != perm_[mul_[g][h]][d][s])
            throw ActionError("action is not a homomorphism at '" + x.id(d, s) + "'");
}

FinGroupAction FinGroupAction::cyclic_trivial(std::size_t n, ComplexPtr base) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return FinGroupAction(std::move(mul), std::move(base), {});
}

FinGroupAction FinGroupAction::trivial(ComplexPtr base) { return cyclic_trivial(1, std::move(base)); }

std::size_t FinGroupAction::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul_[a][b] == 0 && mul_[b][a] == 0) return b;
  throw ActionError("element " + std::to_string(a) + " has no inverse");
}

// ---------------------------------------------------------------------------

namespace {

std::size_t power(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string tuple_suffix(const std::vector<std::size_t>& ks) {
  if (ks.empty()) return "";
  std::string s = "@";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s;
}

}  // namespace

std::size_t Nerve::tuple_index(const std::vector<std::size_t>& ks) const {
  std::size_t t = 0;
  for (auto k : ks) t = t * action_.order() + k;
  return t;
}

std::vector<std::size_t> Nerve::tuple(int q, std::size_t t) const {
  std::vector<std::size_t> ks(q);
  for (int i = q - 1; i >= 0; --i) {
    ks[i] = t % action_.order();
    t /= action_.order();
  }
  return ks;
}

std::size_t Nerve::simplex(int q, int dim, std::size_t sigma,
                           const std::vector<std::size_t>& ks) const {
  (void)q;
  return tuple_index(ks) * action_.base()->count(dim) + sigma;
}

Nerve::Nerve(const FinGroupAction& action, int depth) : action_(action) {
  if (depth < 0) throw DimensionError("nerve depth must be non-negative");
  const DeltaComplex& x = *action_.base();
  const std::size_t g = action_.order();

  for (int q = 0; q <= depth; ++q) {
    auto level = std::make_shared<DeltaComplex>();
    const std::size_t copies = power(g, q);
    for (int d = 0; d <= x.dimension(); ++d)
      for (std::size_t t = 0; t < copies; ++t) {
        auto ks = tuple(q, t);
        for (std::size_t s = 0; s < x.count(d); ++s) {
          std::vector<std::size_t> faces;
          if (d > 0)
            for (auto f : x.faces(d, s)) faces.push_back(t * x.count(d - 1) + f);
          level->add_simplex_by_index(x.id(d, s) + tuple_suffix(ks), d, faces);
        }
      }
    obj_.levels.push_back(level);
  }

  obj_.faces.resize(depth + 1);
  for (int q = 1; q <= depth; ++q)
    for (int i = 0; i <= q; ++i) {
      SimplicialMap f{obj_.levels[q], obj_.levels[q - 1], {}};
      for (int d = 0; d <= x.dimension(); ++d) {
        std::vector<std::size_t> img;
        for (std::size_t t = 0; t < power(g, q); ++t) {
          auto ks = tuple(q, t);
          for (std::size_t s = 0; s < x.count(d); ++s) {
            std::size_t sigma = s;
            std::vector<std::size_t> rest;
            if (i == 0) {
              sigma = action_.act(ks[0], d, s);
              rest.assign(ks.begin() + 1, ks.end());
            } else if (i == q) {
              rest.assign(ks.begin(), ks.end() - 1);
            } else {
              for (int j = 0; j < q; ++j) {
                if (j == i - 1) rest.push_back(action_.mul(ks[i], ks[i - 1]));
                else if (j != i) rest.push_back(ks[j]);
              }
            }
            img.push_back(simplex(q - 1, d, sigma, rest));
          }
        }
        f.images.push_back(std::move(img));
      }
      obj_.faces[q].push_back(std::move(f));
    }
  obj_.validate();
}

Nerve build_nerve(const FinGroupAction& action, int depth) { return Nerve(action, depth); }

RatVec nerve_delta(const Nerve& nerve, int q, int p, const RatVec& f) {
  if (q + 1 > nerve.depth()) throw DimensionError("delta beyond nerve depth");
  if (f.size() != nerve.level(q).count(p)) throw DimensionError("delta: cochain length");
  RatVec out(nerve.level(q + 1).count(p));
  for (int i = 0; i <= q + 1; ++i) {
    RatVec pb = cochain_pullback(nerve.object().faces[q + 1][i], p) * f;
    out = i % 2 == 0 ? add(out, pb) : sub(out, pb);
  }
  return out;
}

namespace {

// s_g : Γ_{q−1} → Γ_q, (σ; k₁..k_{q−1}) ↦ (σ; k₁..k_{q−1}, g).
SimplicialMap append_element(const Nerve& nerve, int q, std::size_t g) {
  const DeltaComplex& x = *nerve.action().base();
  SimplicialMap s{nerve.level_ptr(q - 1), nerve.level_ptr(q), {}};
  const std::size_t copies = nerve.level(q - 1).count(0) / std::max<std::size_t>(x.count(0), 1);
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<std::size_t> img;
    for (std::size_t t = 0; t < copies; ++t) {
      auto ks = nerve.tuple(q - 1, t);
      ks.push_back(g);
      for (std::size_t sg = 0; sg < x.count(d); ++sg) img.push_back(nerve.simplex(q, d, sg, ks));
    }
    s.images.push_back(std::move(img));
  }
  return s;
}

}  // namespace

RatMatrix avg_contract_matrix(const Nerve& nerve, const CoefficientComplex& coeff, int q, int p) {
  if (q < 1 || q > nerve.depth()) throw DimensionError("avg_contract needs 1 ≤ q ≤ depth");
  const std::size_t g = nerve.action().order();
  RatMatrix m(coeff.dim(nerve.level(q - 1), p), coeff.dim(nerve.level(q), p));
  for (std::size_t k = 0; k < g; ++k) m = m + coeff.pullback(append_element(nerve, q, k), p);
  Rat w = Rat(q % 2 == 0 ? 1 : -1) / Rat(static_cast<unsigned long>(g));
  return scaled(m, w);
}

RatVec avg_contract(const Nerve& nerve, int q, int p, const RatVec& f) {
  CochainCoefficients coeff(Ring::Q);
  if (f.size() != nerve.level(q).count(p)) throw DimensionError("avg_contract: cochain length");
  return avg_contract_matrix(nerve, coeff, q, p) * f;
}

AbGroupPresentation equivariant_cohomology(const Nerve& nerve, int n, Ring ring) {
  if (n + 1 > nerve.depth())
    throw DimensionError("equivariant cohomology in degree " + std::to_string(n) +
                         " needs nerve depth at least " + std::to_string(n + 1));
  Ring base = ring == Ring::QZ ? Ring::Z : ring;
  TotalComplex total(nerve.object(), std::make_shared<CochainCoefficients>(base));
  if (ring != Ring::QZ) return total.cohomology(n);
  const MixedComplex& c = total.complex();
  return cohomology_qz(to_int(c.diff(n - 1)), to_int(c.diff(n)));
}

// ---------------------------------------------------------------------------

EquivariantCategory::EquivariantCategory(const Nerve& nerve, Ring ring, int n)
    : nerve_(nerve), ring_(ring), n_(n) {
  if (n != 0 && n != 1) throw DimensionError("equivariant categories are built for n = 0, 1");
  if (nerve.depth() < 2) throw DimensionError("equivariant objects need nerve depth ≥ 2");
  if (ring == Ring::QZ) throw DimensionError("use Z or Q coefficients");
}

namespace {

RatVec pull(const Nerve& nerve, int q, int i, int p, const RatVec& x) {
  return cochain_pullback(nerve.object().faces[q][i], p) * x;
}

}  // namespace

bool EquivariantCategory::is_object(const RatVec& z, const RatVec& phi) const {
  CochainCoefficients coeff(ring_);
  ChainCategory c0(coeff.complex(nerve_.level(0)), n_);
  ChainCategory c1(coeff.complex(nerve_.level(1)), n_);
  if (!c0.is_object(z)) return false;
  CatMorphism m{pull(nerve_, 1, 0, n_, z), pull(nerve_, 1, 1, n_, z), phi};
  if (!c1.is_morphism(m)) return false;
  if (n_ == 0) return true;
  RatVec cyc = add(sub(pull(nerve_, 2, 0, n_ - 1, phi), pull(nerve_, 2, 1, n_ - 1, phi)),
                   pull(nerve_, 2, 2, n_ - 1, phi));
  return is_zero(cyc);
}

bool EquivariantCategory::is_morphism(const RatVec& xi, const RatVec& z, const RatVec& phi,
                                      const RatVec& z2, const RatVec& phi2) const {
  if (!is_object(z, phi) || !is_object(z2, phi2)) return false;
  CochainCoefficients coeff(ring_);
  ChainCategory c0(coeff.complex(nerve_.level(0)), n_);
  ChainCategory c1(coeff.complex(nerve_.level(1)), n_);
  if (!c0.is_morphism(CatMorphism{z, z2, xi})) return false;
  RatVec d0z = pull(nerve_, 1, 0, n_, z), d1z = pull(nerve_, 1, 1, n_, z);
  RatVec d0z2 = pull(nerve_, 1, 0, n_, z2), d1z2 = pull(nerve_, 1, 1, n_, z2);
  CatMorphism d0xi{d0z, d0z2, pull(nerve_, 1, 0, n_ - 1, xi)};
  CatMorphism d1xi{d1z, d1z2, pull(nerve_, 1, 1, n_ - 1, xi)};
  CatMorphism f{d0z, d1z, phi}, f2{d0z2, d1z2, phi2};
  return c1.morphisms_equal(c1.compose(d0xi, f2), c1.compose(f, d1xi));
}

RatVec equivariant_to_total(const TotalComplex& total, int n, const RatVec& z,
                            const RatVec& phi) {
  return total.assemble(n, {z, scale(phi, Rat(-1))});
}

std::pair<RatVec, RatVec> total_to_equivariant(const TotalComplex& total, int n,
                                               const RatVec& x) {
  return {total.component(n, x, 0), scale(total.component(n, x, 1), Rat(-1))};
}

}  // namespace dchar
