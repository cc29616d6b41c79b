#pragma once

// Chain categories H^n(A•) of finite-rank mixed ℤ/ℚ cochain complexes,
// as decision procedures: objects are n-cocycles, morphisms are
// (n−1)-cochains modulo coboundaries.

#include "dchar/exactalg.hpp"
#include "dchar/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dchar {

/// A cochain complex A^0 → A^1 → … → A^top with A^n = ℤ^{mask} ⊕ ℚ^{rest}
/// inside ℚ^{dim n}. Degrees outside [0, top] are zero.
class MixedComplex {
 public:
  MixedComplex() = default;
  /// `diffs[n]` is d : A^n → A^{n+1}; the last one maps into the zero group
  /// and may be omitted. Throws NotAComplexError if d∘d ≠ 0, DimensionError
  /// if a differential does not preserve the ℤ/ℚ structure.
  MixedComplex(std::vector<std::vector<bool>> integral, std::vector<RatMatrix> diffs);

  int top() const { return static_cast<int>(integral_.size()) - 1; }
  std::size_t dim(int n) const;
  std::vector<bool> integral(int n) const;
  /// d : A^n → A^{n+1} for any integer n.
  RatMatrix diff(int n) const;
  RatVec apply_diff(int n, const RatVec& x) const;
  /// True iff x has the right length and integral coordinates where required.
  bool is_element(int n, const RatVec& x) const;
  bool is_cocycle(int n, const RatVec& x) const;

  MixedGroup cocycles(int n) const;
  MixedGroup coboundaries(int n) const;
  AbGroupPresentation cohomology(int n) const;
  /// Whether x ∈ A^n is d of some y ∈ A^{n−1}; returns a witness.
  std::optional<RatVec> primitive(int n, const RatVec& x) const;

  /// Verbatim ℤ-complex when every coordinate is integral.
  bool is_integral() const;

 private:
  std::vector<std::vector<bool>> integral_;
  std::vector<RatMatrix> diffs_;
};

/// Thrown when data handed to a category is not an object, morphism, etc.
class CategoryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CatMorphism {
  RatVec source;
  RatVec target;
  RatVec rep;  // degree-(n−1) cochain with d rep = target − source
};

class ChainCategory {
 public:
  ChainCategory(const MixedComplex& complex, int n);

  const MixedComplex& complex() const { return complex_; }
  int degree() const { return n_; }

  bool is_object(const RatVec& z) const;
  bool is_morphism(const CatMorphism& f) const;
  CatMorphism identity(const RatVec& z) const;
  /// A morphism z → z' if one exists (i.e. z and z' are cohomologous).
  std::optional<CatMorphism> hom_exists(const RatVec& z, const RatVec& z2) const;
  /// f then g; the representative is the sum.
  CatMorphism compose(const CatMorphism& f, const CatMorphism& g) const;
  CatMorphism inverse(const CatMorphism& f) const;
  /// Same endpoints and representatives differing by a coboundary.
  bool morphisms_equal(const CatMorphism& f, const CatMorphism& g) const;
  /// Aut(z) ≅ H^{n−1}(A•).
  AbGroupPresentation automorphisms() const;
  /// Isomorphism classes of objects ≅ H^n(A•).
  AbGroupPresentation classes() const;

 private:
  void require_object(const RatVec& z, const char* what) const;
  MixedComplex complex_;
  int n_;
};

/// Degreewise maps φ_n : A^n → B^n.
class ChainMap {
 public:
  /// Verifies d_B φ = φ d_A and that φ maps A^n into B^n; throws
  /// CategoryError("not a chain map ...") otherwise.
  ChainMap(const MixedComplex& source, const MixedComplex& target,
           std::vector<RatMatrix> maps);

  const MixedComplex& source() const { return source_; }
  const MixedComplex& target() const { return target_; }
  RatMatrix at(int n) const;
  RatVec apply(int n, const RatVec& x) const;

  static ChainMap identity(const MixedComplex& a);
  static ChainMap zero(const MixedComplex& a, const MixedComplex& b);

 private:
  MixedComplex source_;
  MixedComplex target_;
  std::vector<RatMatrix> maps_;
};

/// The functor H^n(φ) : H^n(A•) → H^n(B•).
class InducedFunctor {
 public:
  InducedFunctor(const ChainMap& phi, int n);
  RatVec on_object(const RatVec& z) const;
  CatMorphism on_morphism(const CatMorphism& f) const;
  const ChainMap& map() const { return phi_; }
  int degree() const { return n_; }

 private:
  ChainMap phi_;
  int n_;
};

/// k_n : A^n → B^{n−1} with d k + k d = g − f.
class ChainHomotopy {
 public:
  /// Throws CategoryError("not a homotopy ...") if the identity fails.
  ChainHomotopy(const ChainMap& f, const ChainMap& g, std::vector<RatMatrix> maps);
  RatMatrix at(int n) const;
  const ChainMap& from() const { return f_; }
  const ChainMap& to() const { return g_; }

 private:
  ChainMap f_;
  ChainMap g_;
  std::vector<RatMatrix> maps_;
};

/// The natural transformation H^n(f) ⇒ H^n(g) with component [k(z)] at z.
class NaturalTransformation {
 public:
  NaturalTransformation(const ChainHomotopy& k, int n);
  CatMorphism component(const RatVec& z) const;
  /// Checks F(m) then η_{z'} equals η_z then G(m) in H^n(B•).
  bool naturality_holds(const CatMorphism& m) const;

 private:
  ChainHomotopy k_;
  int n_;
};

struct EquivalenceReport {
  bool equivalence = false;
  // Per degree n−1 and n: kernel and cokernel of the induced map on cohomology.
  std::vector<int> degrees;
  std::vector<AbGroupPresentation> kernels;
  std::vector<AbGroupPresentation> cokernels;
  std::vector<AbGroupPresentation> source_groups;
  std::vector<AbGroupPresentation> target_groups;
};

/// H^n(φ) is an equivalence iff φ_* is bijective on H^{n−1} and H^n.
EquivalenceReport is_equivalence(const ChainMap& phi, int n);

/// Presentations of ker and coker of φ_* : H^k(A) → H^k(B).
AbGroupPresentation induced_kernel(const ChainMap& phi, int k);
AbGroupPresentation induced_cokernel(const ChainMap& phi, int k);

}  // namespace dchar
