#include "dchar/chaincat.hpp"

#include <algorithm>

namespace dchar {

namespace {

bool preserves_structure(const RatMatrix& m, const std::vector<bool>& from,
                         const std::vector<bool>& to) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!to[i]) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (from[j] ? !is_integral(m(i, j)) : sgn(m(i, j)) != 0) return false;
    }
  }
  return true;
}

RatMatrix projection(std::size_t total, std::size_t offset, std::size_t len) {
  RatMatrix p(len, total);
  for (std::size_t i = 0; i < len; ++i) p(i, offset + i) = 1;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

MixedComplex::MixedComplex(std::vector<std::vector<bool>> masks,
                           std::vector<RatMatrix> diffs)
    : integral_(std::move(masks)), diffs_(std::move(diffs)) {
  const int t = top();
  if (static_cast<int>(diffs_.size()) > t + 1)
    throw DimensionError("more differentials than degrees");
  diffs_.resize(std::max(t + 1, 0));
  for (int n = 0; n <= t; ++n) {
    RatMatrix& d = diffs_[n];
    if (d.rows() == 0 && d.cols() == 0) d = RatMatrix(dim(n + 1), dim(n));
    if (d.rows() != dim(n + 1) || d.cols() != dim(n))
      throw DimensionError("differential " + std::to_string(n) + " has shape " +
                           std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                           ", expected " + std::to_string(dim(n + 1)) + "x" +
                           std::to_string(dim(n)));
    if (!preserves_structure(d, integral_[n], integral(n + 1)))
      throw DimensionError("differential " + std::to_string(n) +
                           " does not map the lattice part into the lattice part");
  }
  for (int n = 0; n + 1 <= t; ++n)
    if (!(diffs_[n + 1] * diffs_[n]).is_zero())
      throw NotAComplexError("d∘d ≠ 0 at degree " + std::to_string(n));
}

std::size_t MixedComplex::dim(int n) const {
  if (n < 0 || n > top()) return 0;
  return integral_[n].size();
}

std::vector<bool> MixedComplex::integral(int n) const {
  if (n < 0 || n > top()) return {};
  return integral_[n];
}

RatMatrix MixedComplex::diff(int n) const {
  if (n < 0 || n > top()) return RatMatrix(dim(n + 1), dim(n));
  return diffs_[n];
}

RatVec MixedComplex::apply_diff(int n, const RatVec& x) const { return diff(n) * x; }

bool MixedComplex::is_element(int n, const RatVec& x) const {
  if (x.size() != dim(n)) return false;
  const auto mask = integral(n);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mask[i] && !dchar::is_integral(x[i])) return false;
  return true;
}

bool MixedComplex::is_cocycle(int n, const RatVec& x) const {
  return is_zero(apply_diff(n, x));
}

MixedGroup MixedComplex::cocycles(int n) const { return mixed_kernel(diff(n), integral(n)); }

MixedGroup MixedComplex::coboundaries(int n) const {
  return mixed_image(diff(n - 1), integral(n - 1));
}

AbGroupPresentation MixedComplex::cohomology(int n) const {
  if (n < 0 || n > top()) return {};
  return subquotient(cocycles(n), coboundaries(n));
}

std::optional<RatVec> MixedComplex::primitive(int n, const RatVec& x) const {
  if (x.size() != dim(n)) throw DimensionError("primitive: length mismatch");
  if (n <= 0) {
    if (is_zero(x)) return RatVec{};
    return std::nullopt;
  }
  return MixedSystem(diff(n - 1), integral(n - 1)).solve(x);
}

bool MixedComplex::is_integral() const {
  for (const auto& m : integral_)
    if (std::find(m.begin(), m.end(), false) != m.end()) return false;
  return true;
}

// ---------------------------------------------------------------------------

ChainCategory::ChainCategory(const MixedComplex& complex, int n) : complex_(complex), n_(n) {
  if (n < 0) throw DimensionError("chain category degree must be non-negative");
}

bool ChainCategory::is_object(const RatVec& z) const {
  return complex_.is_element(n_, z) && complex_.is_cocycle(n_, z);
}

void ChainCategory::require_object(const RatVec& z, const char* what) const {
  if (!is_object(z)) throw CategoryError(std::string(what) + " is not an object (cocycle)");
}

bool ChainCategory::is_morphism(const CatMorphism& f) const {
  if (!is_object(f.source) || !is_object(f.target)) return false;
  if (n_ == 0) return f.rep.empty() && f.source == f.target;
  if (!complex_.is_element(n_ - 1, f.rep)) return false;
  return complex_.apply_diff(n_ - 1, f.rep) == sub(f.target, f.source);
}

CatMorphism ChainCategory::identity(const RatVec& z) const {
  require_object(z, "identity source");
  return CatMorphism{z, z, RatVec(complex_.dim(n_ - 1))};
}

std::optional<CatMorphism> ChainCategory::hom_exists(const RatVec& z, const RatVec& z2) const {
  require_object(z, "source");
  require_object(z2, "target");
  auto b = complex_.primitive(n_, sub(z2, z));
  if (!b) return std::nullopt;
  return CatMorphism{z, z2, *b};
}

CatMorphism ChainCategory::compose(const CatMorphism& f, const CatMorphism& g) const {
  if (f.target != g.source) throw CategoryError("composition mismatch");
  return CatMorphism{f.source, g.target, add(f.rep, g.rep)};
}

CatMorphism ChainCategory::inverse(const CatMorphism& f) const {
  return CatMorphism{f.target, f.source, scale(f.rep, Rat(-1))};
}

bool ChainCategory::morphisms_equal(const CatMorphism& f, const CatMorphism& g) const {
  if (f.source != g.source || f.target != g.target) return false;
  if (n_ == 0) return true;
  return complex_.primitive(n_ - 1, sub(g.rep, f.rep)).has_value();
}

AbGroupPresentation ChainCategory::automorphisms() const {
  return complex_.cohomology(n_ - 1);
}

AbGroupPresentation ChainCategory::classes() const { return complex_.cohomology(n_); }

// ---------------------------------------------------------------------------

ChainMap::ChainMap(const MixedComplex& source, const MixedComplex& target,
                   std::vector<RatMatrix> maps)
    : source_(source), target_(target), maps_(std::move(maps)) {
  const int t = std::max(source_.top(), target_.top());
  maps_.resize(std::max(t + 1, 0));
  for (int n = 0; n <= t; ++n) {
    RatMatrix& m = maps_[n];
    if (m.rows() == 0 && m.cols() == 0) m = RatMatrix(target_.dim(n), source_.dim(n));
    if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n))
      throw CategoryError("not a chain map: component " + std::to_string(n) +
                          " has the wrong shape");
    if (n <= std::min(source_.top(), target_.top()) &&
        !preserves_structure(m, source_.integral(n), target_.integral(n)))
      throw CategoryError("not a chain map: component " + std::to_string(n) +
                          " does not preserve the lattice part");
  }
  for (int n = -1; n <= t; ++n) {
    RatMatrix lhs = target_.diff(n) * at(n);
    RatMatrix rhs = at(n + 1) * source_.diff(n);
    if (!(lhs == rhs))
      throw CategoryError("not a chain map: d φ ≠ φ d at degree " + std::to_string(n));
  }
}

RatMatrix ChainMap::at(int n) const {
  if (n < 0 || n >= static_cast<int>(maps_.size()))
    return RatMatrix(target_.dim(n), source_.dim(n));
  return maps_[n];
}

RatVec ChainMap::apply(int n, const RatVec& x) const { return at(n) * x; }

ChainMap ChainMap::identity(const MixedComplex& a) {
  std::vector<RatMatrix> m;
  for (int n = 0; n <= a.top(); ++n) m.push_back(RatMatrix::identity(a.dim(n)));
  return ChainMap(a, a, std::move(m));
}

ChainMap ChainMap::zero(const MixedComplex& a, const MixedComplex& b) {
  return ChainMap(a, b, {});
}

InducedFunctor::InducedFunctor(const ChainMap& phi, int n) : phi_(phi), n_(n) {}

RatVec InducedFunctor::on_object(const RatVec& z) const { return phi_.apply(n_, z); }

CatMorphism InducedFunctor::on_morphism(const CatMorphism& f) const {
  return CatMorphism{on_object(f.source), on_object(f.target), phi_.apply(n_ - 1, f.rep)};
}

ChainHomotopy::ChainHomotopy(const ChainMap& f, const ChainMap& g, std::vector<RatMatrix> maps)
    : f_(f), g_(g), maps_(std::move(maps)) {
  const MixedComplex& a = f_.source();
  const MixedComplex& b = f_.target();
  const int t = std::max(a.top(), b.top()) + 1;
  maps_.resize(std::max(t + 1, 0));
  for (int n = 0; n <= t; ++n) {
    RatMatrix& m = maps_[n];
    if (m.rows() == 0 && m.cols() == 0) m = RatMatrix(b.dim(n - 1), a.dim(n));
    if (m.rows() != b.dim(n - 1) || m.cols() != a.dim(n))
      throw CategoryError("not a homotopy: component " + std::to_string(n) +
                          " has the wrong shape");
    if (n - 1 >= 0 && n <= a.top() && n - 1 <= b.top() &&
        !preserves_structure(m, a.integral(n), b.integral(n - 1)))
      throw CategoryError("not a homotopy: component " + std::to_string(n) +
                          " does not preserve the lattice part");
  }
  for (int n = 0; n <= t; ++n) {
    RatMatrix lhs = b.diff(n - 1) * at(n) + at(n + 1) * a.diff(n);
    RatMatrix rhs = g_.at(n) - f_.at(n);
    if (!(lhs == rhs))
      throw CategoryError("not a homotopy: dk + kd ≠ g − f at degree " + std::to_string(n));
  }
}

RatMatrix ChainHomotopy::at(int n) const {
  const MixedComplex& a = f_.source();
  const MixedComplex& b = f_.target();
  if (n < 0 || n >= static_cast<int>(maps_.size())) return RatMatrix(b.dim(n - 1), a.dim(n));
  return maps_[n];
}

NaturalTransformation::NaturalTransformation(const ChainHomotopy& k, int n) : k_(k), n_(n) {}

CatMorphism NaturalTransformation::component(const RatVec& z) const {
  ChainCategory src(k_.from().source(), n_);
  if (!src.is_object(z)) throw CategoryError("component requested at a non-object");
  return CatMorphism{k_.from().apply(n_, z), k_.to().apply(n_, z), k_.at(n_) * z};
}

bool NaturalTransformation::naturality_holds(const CatMorphism& m) const {
  ChainCategory tgt(k_.from().target(), n_);
  InducedFunctor ff(k_.from(), n_), gg(k_.to(), n_);
  CatMorphism left = tgt.compose(ff.on_morphism(m), component(m.target));
  CatMorphism right = tgt.compose(component(m.source), gg.on_morphism(m));
  return tgt.is_morphism(left) && tgt.is_morphism(right) && tgt.morphisms_equal(left, right);
}

// ---------------------------------------------------------------------------

AbGroupPresentation induced_kernel(const ChainMap& phi, int k) {
  const MixedComplex& a = phi.source();
  const MixedComplex& b = phi.target();
  const std::size_t na = a.dim(k), nb = b.dim(k - 1);
  // {(x, y) : d x = 0, φ x = d y} projected to x.
  RatMatrix top_rows = hstack(a.diff(k), RatMatrix(a.dim(k + 1), nb));
  RatMatrix bottom = hstack(phi.at(k), scaled(b.diff(k - 1), Rat(-1)));
  RatMatrix m = vstack(top_rows, bottom);
  std::vector<bool> mask = a.integral(k);
  std::vector<bool> mb = b.integral(k - 1);
  mask.insert(mask.end(), mb.begin(), mb.end());
  MixedGroup kern = apply(projection(na + nb, 0, na), mixed_kernel(m, mask));
  return subquotient(kern, a.coboundaries(k));
}

AbGroupPresentation induced_cokernel(const ChainMap& phi, int k) {
  const MixedComplex& a = phi.source();
  const MixedComplex& b = phi.target();
  MixedGroup image = sum(apply(phi.at(k), a.cocycles(k)), b.coboundaries(k));
  return subquotient(b.cocycles(k), image);
}

EquivalenceReport is_equivalence(const ChainMap& phi, int n) {
  EquivalenceReport r;
  r.equivalence = true;
  for (int k = std::max(n - 1, 0); k <= n; ++k) {
    r.degrees.push_back(k);
    r.kernels.push_back(induced_kernel(phi, k));
    r.cokernels.push_back(induced_cokernel(phi, k));
    r.source_groups.push_back(phi.source().cohomology(k));
    r.target_groups.push_back(phi.target().cohomology(k));
    if (!r.kernels.back().is_trivial() || !r.cokernels.back().is_trivial())
      r.equivalence = false;
  }
  return r;
}

}  // namespace dchar
