#pragma once

// Semi-simplicial objects in Δ-complexes (levels plus face maps), coefficient
// complexes that can be evaluated on a level and pulled back along face maps,
// and the total complex of the resulting double complex.

#include "dchar/chaincat.hpp"
#include "dchar/complex.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dchar {

/// A dimension-preserving map of Δ-complexes that commutes with face maps.
struct SimplicialMap {
  ComplexPtr from;
  ComplexPtr to;
  std::vector<std::vector<std::size_t>> images;  // images[n][i] = index in `to`

  std::size_t operator()(int n, std::size_t i) const { return images.at(n).at(i); }
  /// Throws ComplexError if shapes are wrong or faces are not preserved.
  void validate() const;
  SimplicialMap then(const SimplicialMap& g) const;  // g ∘ this
  bool operator==(const SimplicialMap& o) const { return images == o.images; }
};

/// Levels X_0, …, X_depth with face maps ∂_i : X_q → X_{q−1}, 0 ≤ i ≤ q.
struct SimplicialObject {
  std::vector<ComplexPtr> levels;
  std::vector<std::vector<SimplicialMap>> faces;  // faces[q][i], faces[0] empty

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  /// Checks each face map and ∂_i ∂_j = ∂_{j−1} ∂_i for i < j.
  void validate() const;
};

/// A functorial cochain complex F•(X) of mixed ℤ/ℚ groups.
class CoefficientComplex {
 public:
  virtual ~CoefficientComplex() = default;
  virtual std::string name() const = 0;
  virtual int top(const DeltaComplex& x) const = 0;
  virtual std::vector<bool> mask(const DeltaComplex& x, int p) const = 0;
  /// d : F^p(X) → F^{p+1}(X).
  virtual RatMatrix diff(const DeltaComplex& x, int p) const = 0;
  /// f^* : F^p(f.to) → F^p(f.from).
  virtual RatMatrix pullback(const SimplicialMap& f, int p) const = 0;

  std::size_t dim(const DeltaComplex& x, int p) const { return mask(x, p).size(); }
  MixedComplex complex(const DeltaComplex& x) const;
};

/// Plain simplicial cochains with ℤ or ℚ values.
class CochainCoefficients : public CoefficientComplex {
 public:
  explicit CochainCoefficients(Ring ring);
  std::string name() const override;
  int top(const DeltaComplex& x) const override;
  std::vector<bool> mask(const DeltaComplex& x, int p) const override;
  RatMatrix diff(const DeltaComplex& x, int p) const override;
  RatMatrix pullback(const SimplicialMap& f, int p) const override;
  Ring ring() const { return ring_; }

 private:
  Ring ring_;
};

/// Matrix of the cochain pullback f^* : C^p(f.to) → C^p(f.from).
RatMatrix cochain_pullback(const SimplicialMap& f, int p);

struct TotalBlock {
  int q = 0;  // simplicial level
  int p = 0;  // coefficient degree
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Total complex of F^p(X_q) with d_tot = δ + (−1)^q d, δ = Σ (−1)^i ∂_i^*.
/// Total degrees 0..depth are built; H^n is reliable for n ≤ depth − 1.
class TotalComplex {
 public:
  TotalComplex(const SimplicialObject& obj, std::shared_ptr<const CoefficientComplex> coeff);

  const MixedComplex& complex() const { return complex_; }
  const SimplicialObject& object() const { return obj_; }
  const CoefficientComplex& coefficients() const { return *coeff_; }
  int depth() const { return obj_.depth(); }

  const std::vector<TotalBlock>& blocks(int n) const { return blocks_.at(n); }
  const TotalBlock& block(int n, int q) const;
  /// Component of a total n-cochain in column q (empty if no such block).
  RatVec component(int n, const RatVec& x, int q) const;
  /// Builds a total n-cochain from per-column components (missing → 0).
  RatVec assemble(int n, const std::vector<RatVec>& by_q) const;

  /// δ : F^p(X_q) → F^p(X_{q+1}).
  RatMatrix delta(int q, int p) const;
  /// d : F^p(X_q) → F^{p+1}(X_q) (without sign twist).
  RatMatrix vertical(int q, int p) const;

  /// H^n of the total complex; requires n ≤ depth − 1.
  AbGroupPresentation cohomology(int n) const;

 private:
  SimplicialObject obj_;
  std::shared_ptr<const CoefficientComplex> coeff_;
  std::vector<std::vector<TotalBlock>> blocks_;
  MixedComplex complex_;
};

}  // namespace dchar
