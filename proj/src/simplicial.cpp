#include "dchar/simplicial.hpp"

#include <algorithm>

namespace dchar {

void SimplicialMap::validate() const {
  if (!from || !to) throw ComplexError("simplicial map without endpoints");
  if (static_cast<int>(images.size()) != from->dimension() + 1)
    throw ComplexError("simplicial map has the wrong number of dimensions");
  for (int n = 0; n <= from->dimension(); ++n) {
    if (images[n].size() != from->count(n))
      throw ComplexError("simplicial map is not total in dimension " + std::to_string(n));
    for (std::size_t i = 0; i < from->count(n); ++i) {
      std::size_t j = images[n][i];
      if (j >= to->count(n))
        throw ComplexError("simplicial map sends '" + from->id(n, i) + "' out of range");
      if (n == 0) continue;
      const auto& fa = from->faces(n, i);
      const auto& fb = to->faces(n, j);
      for (std::size_t k = 0; k < fa.size(); ++k)
        if (images[n - 1][fa[k]] != fb[k])
          throw ComplexError("simplicial map does not commute with face " +
                             std::to_string(k) + " of '" + from->id(n, i) + "'");
    }
  }
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
  SimplicialMap out{from, g.to, images};
  for (std::size_t n = 0; n < images.size(); ++n)
    for (auto& x : out.images[n]) x = g.images[n][x];
  return out;
}

void SimplicialObject::validate() const {
  if (faces.size() != levels.size()) throw ComplexError("simplicial object: face table size");
  for (int q = 1; q <= depth(); ++q) {
    if (static_cast<int>(faces[q].size()) != q + 1)
      throw ComplexError("level " + std::to_string(q) + " needs " + std::to_string(q + 1) +
                         " face maps");
    for (const auto& f : faces[q]) {
      if (f.from != levels[q] || f.to != levels[q - 1])
        throw ComplexError("face map endpoints do not match levels");
      f.validate();
    }
  }
  for (int q = 2; q <= depth(); ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i) {
        // ∂_i ∂_j = ∂_{j−1} ∂_i
        SimplicialMap lhs = faces[q][j].then(faces[q - 1][i]);
        SimplicialMap rhs = faces[q][i].then(faces[q - 1][j - 1]);
        if (!(lhs == rhs))
          throw ComplexError("simplicial identity fails at level " + std::to_string(q) +
                             " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
      }
}

MixedComplex CoefficientComplex::complex(const DeltaComplex& x) const {
  std::vector<std::vector<bool>> masks;
  std::vector<RatMatrix> diffs;
  for (int p = 0; p <= top(x); ++p) {
    masks.push_back(mask(x, p));
    diffs.push_back(diff(x, p));
  }
  return MixedComplex(std::move(masks), std::move(diffs));
}

RatMatrix cochain_pullback(const SimplicialMap& f, int p) {
  RatMatrix m(f.from->count(p), f.to->count(p));
  for (std::size_t i = 0; i < f.from->count(p); ++i) m(i, f(p, i)) = 1;
  return m;
}

CochainCoefficients::CochainCoefficients(Ring ring) : ring_(ring) {
  if (ring == Ring::QZ)
    throw DimensionError("Q/Z cochains are handled through the Z complex");
}

std::string CochainCoefficients::name() const { return "C(" + ring_name(ring_) + ")"; }

int CochainCoefficients::top(const DeltaComplex& x) const { return x.dimension(); }

std::vector<bool> CochainCoefficients::mask(const DeltaComplex& x, int p) const {
  return std::vector<bool>(x.count(p), ring_ == Ring::Z);
}

RatMatrix CochainCoefficients::diff(const DeltaComplex& x, int p) const {
  return to_rat(x.coboundary_matrix(p));
}

RatMatrix CochainCoefficients::pullback(const SimplicialMap& f, int p) const {
  return cochain_pullback(f, p);
}

// ---------------------------------------------------------------------------

TotalComplex::TotalComplex(const SimplicialObject& obj,
                           std::shared_ptr<const CoefficientComplex> coeff)
    : obj_(obj), coeff_(std::move(coeff)) {
  const int depth = obj_.depth();
  if (depth < 0) throw DimensionError("simplicial object has no levels");

  std::vector<std::vector<bool>> masks(depth + 1);
  blocks_.resize(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    std::size_t offset = 0;
    for (int q = 0; q <= std::min(n, depth); ++q) {
      int p = n - q;
      std::vector<bool> m = coeff_->mask(*obj_.levels[q], p);
      blocks_[n].push_back(TotalBlock{q, p, offset, m.size()});
      offset += m.size();
      masks[n].insert(masks[n].end(), m.begin(), m.end());
    }
  }

  std::vector<RatMatrix> diffs;
  for (int n = 0; n < depth; ++n) {
    RatMatrix d(masks[n + 1].size(), masks[n].size());
    for (const auto& b : blocks_[n]) {
      auto place = [&](const TotalBlock& target, const RatMatrix& m, int sign) {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0)
              d(target.offset + i, b.offset + j) += sign > 0 ? m(i, j) : Rat(-m(i, j));
      };
      if (b.q + 1 <= depth) place(block(n + 1, b.q + 1), delta(b.q, b.p), 1);
      place(block(n + 1, b.q), vertical(b.q, b.p), b.q % 2 == 0 ? 1 : -1);
    }
    diffs.push_back(std::move(d));
  }
  complex_ = MixedComplex(std::move(masks), std::move(diffs));
}

const TotalBlock& TotalComplex::block(int n, int q) const {
  for (const auto& b : blocks_.at(n))
    if (b.q == q) return b;
  throw DimensionError("no block at total degree " + std::to_string(n) + ", level " +
                       std::to_string(q));
}

RatVec TotalComplex::component(int n, const RatVec& x, int q) const {
  if (x.size() != complex_.dim(n)) throw DimensionError("total cochain length mismatch");
  for (const auto& b : blocks_.at(n))
    if (b.q == q) return RatVec(x.begin() + b.offset, x.begin() + b.offset + b.size);
  return {};
}

RatVec TotalComplex::assemble(int n, const std::vector<RatVec>& by_q) const {
  RatVec out(complex_.dim(n));
  for (const auto& b : blocks_.at(n)) {
    if (b.q >= static_cast<int>(by_q.size()) || by_q[b.q].empty()) continue;
    if (by_q[b.q].size() != b.size)
      throw DimensionError("component at level " + std::to_string(b.q) + " has length " +
                           std::to_string(by_q[b.q].size()) + ", expected " +
                           std::to_string(b.size));
    std::copy(by_q[b.q].begin(), by_q[b.q].end(), out.begin() + b.offset);
  }
  return out;
}

RatMatrix TotalComplex::delta(int q, int p) const {
  const DeltaComplex& src = *obj_.levels.at(q);
  const DeltaComplex& dst = *obj_.levels.at(q + 1);
  RatMatrix m(coeff_->dim(dst, p), coeff_->dim(src, p));
  for (int i = 0; i <= q + 1; ++i) {
    RatMatrix pb = coeff_->pullback(obj_.faces[q + 1][i], p);
    m = i % 2 == 0 ? m + pb : m - pb;
  }
  return m;
}

RatMatrix TotalComplex::vertical(int q, int p) const {
  return coeff_->diff(*obj_.levels.at(q), p);
}

AbGroupPresentation TotalComplex::cohomology(int n) const {
  if (n > depth() - 1)
    throw DimensionError("total cohomology in degree " + std::to_string(n) +
                         " needs depth at least " + std::to_string(n + 1));
  return complex_.cohomology(n);
}

}  // namespace dchar
