#include "dchar/descent.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace dchar {

namespace {

void close_under_faces(const DeltaComplex& x, std::vector<std::vector<bool>>& m, int dim,
                       std::size_t i) {
  if (m[dim][i]) return;
  m[dim][i] = true;
  if (dim == 0) return;
  for (std::size_t f : x.faces(dim, i)) close_under_faces(x, m, dim - 1, f);
}

std::vector<std::vector<bool>> empty_membership(const DeltaComplex& x) {
  std::vector<std::vector<bool>> m;
  for (int n = 0; n <= x.dimension(); ++n) m.emplace_back(x.count(n), false);
  return m;
}

std::string tagged_id(const Cover& c, const std::string& sigma,
                      const std::vector<std::size_t>& tags) {
  std::string s = sigma + "|";
  for (std::size_t i = 0; i < tags.size(); ++i) s += (i ? "," : "") + c.names[tags[i]];
  return s;
}

class SignedCochains : public CochainCoefficients {
 public:
  SignedCochains(Ring ring, int sign) : CochainCoefficients(ring), sign_(sign) {}
  RatMatrix pullback(const SimplicialMap& f, int p) const override {
    return scaled(CochainCoefficients::pullback(f, p), Rat(sign_));
  }

 private:
  int sign_;
};

}  // namespace

Cover Cover::make(ComplexPtr base,
                  const std::vector<std::pair<std::string, std::vector<std::string>>>& elements,
                  const std::map<std::string, std::string>& tau) {
  Cover c;
  c.base = std::move(base);
  const DeltaComplex& x = *c.base;
  if (elements.empty()) throw CoverError("a cover needs at least one element");
  for (const auto& [name, ids] : elements) {
    if (c.element(name)) throw CoverError("duplicate cover element '" + name + "'");
    c.names.push_back(name);
    auto m = empty_membership(x);
    for (const auto& id : ids) {
      auto ref = x.find(id);
      if (!ref) throw CoverError("cover element '" + name + "' names unknown simplex '" + id + "'");
      close_under_faces(x, m, ref->dim, ref->index);
    }
    c.member.push_back(std::move(m));
  }
  for (int n = 0; n <= x.dimension(); ++n) {
    c.tau.emplace_back(x.count(n), c.size());
    for (std::size_t i = 0; i < x.count(n); ++i)
      for (std::size_t e = 0; e < c.size(); ++e)
        if (c.member[e][n][i]) {
          c.tau[n][i] = e;
          break;
        }
  }
  for (const auto& [id, name] : tau) {
    auto ref = x.find(id);
    if (!ref) throw CoverError("tau names unknown simplex '" + id + "'");
    auto e = c.element(name);
    if (!e) throw CoverError("tau names unknown cover element '" + name + "'");
    c.tau[ref->dim][ref->index] = *e;
  }
  c.validate();
  return c;
}

Cover Cover::single(ComplexPtr base) {
  std::vector<std::string> all;
  for (int n = 0; n <= base->dimension(); ++n)
    for (std::size_t i = 0; i < base->count(n); ++i) all.push_back(base->id(n, i));
  return make(std::move(base), {{"M", all}});
}

std::optional<std::size_t> Cover::element(const std::string& name) const {
  for (std::size_t e = 0; e < names.size(); ++e)
    if (names[e] == name) return e;
  return std::nullopt;
}

void Cover::validate() const {
  const DeltaComplex& x = *base;
  if (member.size() != names.size() || names.empty()) throw CoverError("malformed cover");
  for (std::size_t e = 0; e < size(); ++e)
    for (int n = 1; n <= x.dimension(); ++n)
      for (std::size_t i = 0; i < x.count(n); ++i)
        if (member[e][n][i])
          for (std::size_t f : x.faces(n, i))
            if (!member[e][n - 1][f])
              throw CoverError("cover element '" + names[e] + "' contains '" + x.id(n, i) +
                               "' but not its face '" + x.id(n - 1, f) + "'");
  for (int n = 0; n <= x.dimension(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) {
      if (tau[n][i] >= size()) throw CoverError("simplex '" + x.id(n, i) + "' is not covered");
      if (!member[tau[n][i]][n][i])
        throw CoverError("tau('" + x.id(n, i) + "') = '" + names[tau[n][i]] +
                         "' does not contain it");
    }
}

PartitionOfUnity PartitionOfUnity::uniform(const Cover& cover) {
  PartitionOfUnity pou;
  for (std::size_t v = 0; v < cover.base->count(0); ++v) {
    std::vector<Rat> w(cover.size());
    std::size_t k = 0;
    for (std::size_t e = 0; e < cover.size(); ++e) k += cover.contains(e, 0, v) ? 1 : 0;
    for (std::size_t e = 0; e < cover.size(); ++e)
      if (cover.contains(e, 0, v)) w[e] = Rat(1) / Rat(static_cast<unsigned long>(k));
    pou.weight.push_back(std::move(w));
  }
  return pou;
}

void PartitionOfUnity::validate(const Cover& cover) const {
  const DeltaComplex& x = *cover.base;
  if (weight.size() != x.count(0)) throw CoverError("partition of unity: wrong vertex count");
  for (std::size_t v = 0; v < weight.size(); ++v) {
    if (weight[v].size() != cover.size()) throw CoverError("partition of unity: wrong width");
    Rat s = 0;
    for (std::size_t e = 0; e < cover.size(); ++e) {
      if (sgn(weight[v][e]) < 0)
        throw CoverError("negative weight at vertex '" + x.id(0, v) + "'");
      if (sgn(weight[v][e]) != 0 && !cover.contains(e, 0, v))
        throw CoverError("weight at vertex '" + x.id(0, v) + "' on element '" + cover.names[e] +
                         "' which does not contain it");
      s += weight[v][e];
    }
    if (s != 1) throw CoverError("weights at vertex '" + x.id(0, v) + "' sum to " + s.get_str());
  }
}

SimplexWeights indicator_weights(const Cover& cover) {
  const DeltaComplex& x = *cover.base;
  SimplexWeights w(x.dimension() + 1);
  for (int n = 0; n <= x.dimension(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) {
      std::vector<Rat> row(cover.size());
      row[cover.tau[n][i]] = 1;
      w[n].push_back(std::move(row));
    }
  return w;
}

SimplexWeights first_vertex_weights(const Cover& cover, const PartitionOfUnity& pou) {
  pou.validate(cover);
  const DeltaComplex& x = *cover.base;
  SimplexWeights w(x.dimension() + 1);
  for (int n = 0; n <= x.dimension(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) {
      std::size_t v = x.first_vertex(n, i);
      std::vector<Rat> row(cover.size());
      Rat s = 0;
      for (std::size_t e = 0; e < cover.size(); ++e)
        if (cover.contains(e, n, i)) {
          row[e] = pou.weight[v][e];
          s += row[e];
        }
      if (sgn(s) == 0)
        throw CoverError("weight support violation: no weight of vertex '" + x.id(0, v) +
                         "' lies on an element containing '" + x.id(n, i) + "'");
      for (auto& r : row) r /= s;
      w[n].push_back(std::move(row));
    }
  return w;
}

// ---------------------------------------------------------------------------

CechComplex::CechComplex(Cover cover, int depth) : cover_(std::move(cover)) {
  if (depth < 0) throw DimensionError("Čech depth must be non-negative");
  cover_.validate();
  const DeltaComplex& x = *cover_.base;
  const int top = x.dimension();
  entries_.resize(depth + 1);
  index_.resize(depth + 1);
  for (int q = 0; q <= depth; ++q) {
    auto level = std::make_shared<DeltaComplex>();
    entries_[q].resize(top + 1);
    for (int n = 0; n <= top; ++n)
      for (std::size_t s = 0; s < x.count(n); ++s) {
        std::vector<std::size_t> avail;
        for (std::size_t e = 0; e < cover_.size(); ++e)
          if (cover_.contains(e, n, s)) avail.push_back(e);
        std::vector<std::size_t> pos(q + 1, 0);
        while (true) {
          std::vector<std::size_t> tags(q + 1);
          for (int k = 0; k <= q; ++k) tags[k] = avail[pos[k]];
          std::vector<std::size_t> faces;
          if (n > 0)
            for (std::size_t f : x.faces(n, s)) faces.push_back(simplex(q, n - 1, f, tags));
          std::size_t idx = level->add_simplex_by_index(tagged_id(cover_, x.id(n, s), tags), n,
                                                        faces);
          index_[q][{n, s, tags}] = idx;
          entries_[q][n].push_back(Entry{s, tags});
          int k = q;
          while (k >= 0 && ++pos[k] == avail.size()) pos[k--] = 0;
          if (k < 0) break;
        }
      }
    obj_.levels.push_back(level);
  }
  obj_.faces.resize(depth + 1);
  for (int q = 1; q <= depth; ++q)
    for (int i = 0; i <= q; ++i) {
      SimplicialMap f{obj_.levels[q], obj_.levels[q - 1], {}};
      for (int n = 0; n <= top; ++n) {
        f.images.emplace_back();
        for (const auto& e : entries_[q][n]) {
          auto tags = e.tags;
          tags.erase(tags.begin() + i);
          f.images.back().push_back(simplex(q - 1, n, e.sigma, tags));
        }
      }
      obj_.faces[q].push_back(std::move(f));
    }
  obj_.validate();
  aug_ = SimplicialMap{obj_.levels[0], cover_.base, {}};
  for (int n = 0; n <= top; ++n) {
    aug_.images.emplace_back();
    for (const auto& e : entries_[0][n]) aug_.images.back().push_back(e.sigma);
  }
  aug_.validate();
}

std::size_t CechComplex::simplex(int q, int dim, std::size_t sigma,
                                 const std::vector<std::size_t>& tags) const {
  auto it = index_.at(q).find({dim, sigma, tags});
  if (it == index_.at(q).end())
    throw CoverError("no Čech simplex over '" + cover_.base->id(dim, sigma) + "' with tags " +
                     tagged_id(cover_, "", tags));
  return it->second;
}

std::size_t CechComplex::base_simplex(int q, int dim, std::size_t i) const {
  return entries_.at(q).at(dim).at(i).sigma;
}

const std::vector<std::size_t>& CechComplex::tags(int q, int dim, std::size_t i) const {
  return entries_.at(q).at(dim).at(i).tags;
}

RatMatrix CechComplex::upsilon(int p) const { return cochain_pullback(aug_, p); }

RatMatrix CechComplex::delta(int q, int p) const {
  if (q < 0 || q + 1 > depth()) throw DimensionError("Čech δ out of range");
  RatMatrix m(level(q + 1).count(p), level(q).count(p));
  for (int i = 0; i <= q + 1; ++i) {
    RatMatrix f = cochain_pullback(obj_.faces[q + 1][i], p);
    m = i % 2 == 0 ? m + f : m - f;
  }
  return m;
}

// ---------------------------------------------------------------------------

RhoOperator::RhoOperator(const CechComplex& cech, SimplexWeights weights)
    : cech_(&cech), w_(std::move(weights)) {}

RatMatrix RhoOperator::at(int q, int p) const {
  const CechComplex& c = *cech_;
  if (q < 0 || q > c.depth()) throw DimensionError("ρ out of range");
  const std::size_t cols = c.level(q).count(p);
  const std::size_t rows = q == 0 ? c.cover().base->count(p) : c.level(q - 1).count(p);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t sigma = q == 0 ? r : c.base_simplex(q - 1, p, r);
    std::vector<std::size_t> rest;
    if (q > 0) rest = c.tags(q - 1, p, r);
    const auto& w = w_.at(p).at(sigma);
    for (std::size_t b = 0; b < w.size(); ++b) {
      if (sgn(w[b]) == 0) continue;
      std::vector<std::size_t> tags{b};
      tags.insert(tags.end(), rest.begin(), rest.end());
      m(r, c.simplex(q, p, sigma, tags)) += w[b];
    }
  }
  return m;
}

RhoOperator rho_section(const CechComplex& cech) {
  return RhoOperator(cech, indicator_weights(cech.cover()));
}

RhoOperator rho_partition(const CechComplex& cech, const PartitionOfUnity& pou) {
  return RhoOperator(cech, first_vertex_weights(cech.cover(), pou));
}

RhoIdentityReport check_rho_identities(const CechComplex& cech, const RhoOperator& rho,
                                       int max_p, int delta_sign) {
  RhoIdentityReport r;
  const Rat s(delta_sign);
  auto expect = [&](const RatMatrix& m, const std::string& what) {
    ++r.checked;
    if (m == RatMatrix::identity(m.rows())) return;
    if (r.ok) r.failure = what;
    r.ok = false;
  };
  for (int p = 0; p <= max_p; ++p) {
    RatMatrix u = cech.upsilon(p);
    expect(rho.at(0, p) * u, "ρυ* = id at p = " + std::to_string(p));
    if (cech.depth() >= 1)
      expect(u * rho.at(0, p) + rho.at(1, p) * scaled(cech.delta(0, p), s),
             "υ*ρ + ρδ = id on column 0 at p = " + std::to_string(p));
    for (int q = 1; q + 1 <= cech.depth(); ++q)
      expect(scaled(cech.delta(q - 1, p), s) * rho.at(q, p) +
                 rho.at(q + 1, p) * scaled(cech.delta(q, p), s),
             "δρ + ρδ = id on column " + std::to_string(q) + " at p = " + std::to_string(p));
  }
  return r;
}

RatVec row_primitive(const CechComplex& cech, const RhoOperator& rho, int q, int p,
                     const RatVec& x) {
  if (q < 1) throw DimensionError("row primitives live in columns q ≥ 1");
  if (q + 1 <= cech.depth() && !is_zero(cech.delta(q, p) * x))
    throw CategoryError("row_primitive: input is not a row cocycle");
  RatVec y = rho.apply(q, p, x);
  if (cech.delta(q - 1, p) * y != x) throw std::logic_error("row_primitive: δρx ≠ x");
  return y;
}

// ---------------------------------------------------------------------------

DescentReport descent_equivalence_h1(const Cover& cover, Ring ring, const DescentOptions& opt) {
  if (ring == Ring::QZ) throw DimensionError("descent check supports Z or Q coefficients");
  if (opt.partition && ring != Ring::Q)
    throw DimensionError("the partition-of-unity homotopy needs Q coefficients");
  DescentReport r;
  auto fail = [&](const std::string& what) {
    if (std::find(r.failures.begin(), r.failures.end(), what) == r.failures.end())
      r.failures.push_back(what);
  };
  const int sign = opt.flip_delta ? -1 : 1;

  CechComplex cech(cover, 3);
  RhoOperator rho = opt.partition ? rho_partition(cech, *opt.partition) : rho_section(cech);
  RhoIdentityReport ids = check_rho_identities(cech, rho, 2, sign);
  r.identities_hold = ids.ok;
  if (!ids.ok) fail("identity: " + ids.failure);

  const DeltaComplex& base = *cover.base;
  MixedComplex mc = CochainCoefficients(ring).complex(base);
  TotalComplex tot(cech.object(), std::make_shared<SignedCochains>(ring, sign));
  const MixedComplex& tc = tot.complex();
  ChainCategory base_cat(mc, 1), tot_cat(tc, 1);
  r.base_h1 = mc.cohomology(1);
  r.total_h1 = tot.cohomology(1);

  const RatMatrix u0 = cech.upsilon(0), u1 = cech.upsilon(1);
  const RatMatrix rho00 = rho.at(0, 0), rho01 = rho.at(0, 1), rho10 = rho.at(1, 0);
  const RatMatrix delta00 = scaled(cech.delta(0, 0), Rat(sign));
  auto restrict1 = [&](const RatVec& z) { return tot.assemble(1, {u1 * z}); };
  auto restrict0 = [&](const RatVec& b) { return tot.assemble(0, {u0 * b}); };

  std::mt19937_64 rng(opt.seed);
  MixedGroup cocycles = mc.cocycles(1);
  MixedGroup cochains0 = MixedGroup::coordinate(mc.integral(0));
  std::vector<RatVec> zs;
  for (std::size_t k = 0; k <= opt.samples; ++k) zs.push_back(random_element(cocycles, rng));

  // (a) hom-set bijections b ↦ υ*b and a ↦ ρa.
  r.fully_faithful = true;
  auto check_pair = [&](const RatVec& z, const RatVec& z2) {
    ++r.pairs_checked;
    auto hm = base_cat.hom_exists(z, z2);
    auto ht = tot_cat.hom_exists(restrict1(z), restrict1(z2));
    if (hm.has_value() != ht.has_value()) {
      r.fully_faithful = false;
      fail("hom-sets disagree on emptiness");
      return;
    }
    if (hm) {
      RatVec a = restrict0(hm->rep);
      if (!tot_cat.is_morphism(CatMorphism{restrict1(z), restrict1(z2), a}) ||
          rho00 * (u0 * hm->rep) != hm->rep) {
        r.fully_faithful = false;
        fail("restriction of a morphism is not a morphism");
      }
    }
    if (ht) {
      RatVec a = tot.component(0, ht->rep, 0);
      RatVec b = rho00 * a;
      if (!base_cat.is_morphism(CatMorphism{z, z2, b}) || restrict0(b) != ht->rep) {
        r.fully_faithful = false;
        fail("ρ of a total morphism is not its global preimage");
      }
    }
  };
  for (std::size_t k = 0; k + 1 < zs.size(); ++k) {
    RatVec b = random_element(cochains0, rng);
    check_pair(zs[k], add(zs[k], mc.apply_diff(0, b)));
    check_pair(zs[k], zs[k + 1]);
  }

  // (b) every total cocycle (z, t) is isomorphic to the restriction of a global y.
  r.essentially_surjective = true;
  MixedGroup total_cocycles = tc.cocycles(1);
  std::vector<RatVec> xs;
  for (std::size_t j = 0; j < total_cocycles.lattice.cols(); ++j)
    xs.push_back(total_cocycles.lattice.col(j));
  for (std::size_t j = 0; j < total_cocycles.subspace.cols(); ++j)
    xs.push_back(total_cocycles.subspace.col(j));
  for (std::size_t k = 0; k < opt.samples; ++k) xs.push_back(random_element(total_cocycles, rng));
  for (const auto& x : xs) {
    ++r.objects_checked;
    RatVec z = tot.component(1, x, 0), t = tot.component(1, x, 1);
    RatVec c = rho10 * t;
    if (delta00 * c != t) {
      r.essentially_surjective = false;
      fail("δc ≠ t for c = ρt");
      continue;
    }
    RatVec w = sub(z, tot.vertical(0, 0) * c);
    RatVec y = rho01 * w;
    bool ok = u1 * y == w && mc.is_element(1, y) && mc.is_cocycle(1, y) &&
              tot_cat.is_morphism(
                  CatMorphism{x, restrict1(y), scale(tot.assemble(0, {c}), Rat(-1))});
    if (!ok) {
      r.essentially_surjective = false;
      fail("global representative check failed");
    }
  }
  return r;
}

}  // namespace dchar
