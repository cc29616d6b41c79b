#pragma once

// Finite group actions on Δ-complexes, the nerve of the action groupoid,
// equivariant (total) cohomology and the averaging contraction.

#include "dchar/simplicial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dchar {

class ActionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite group with elements 0..n−1 (0 the identity) acting on a Δ-complex.
class FinGroupAction {
 public:
  /// `mul[i][j]` = i·j. `perm[g][dim][k]` = index of g·σ for σ = (dim, k).
  /// Throws ActionError if the table is not a group, a permutation is not a
  /// simplicial automorphism, or the action is not a homomorphism.
  FinGroupAction(std::vector<std::vector<std::size_t>> mul, ComplexPtr base,
                 std::vector<std::vector<std::vector<std::size_t>>> perm);

  /// The trivial action of ℤ/n (cyclic table) on `base`.
  static FinGroupAction cyclic_trivial(std::size_t n, ComplexPtr base);
  /// The trivial group.
  static FinGroupAction trivial(ComplexPtr base);

  std::size_t order() const { return mul_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inverse(std::size_t a) const;
  const ComplexPtr& base() const { return base_; }
  std::size_t act(std::size_t g, int dim, std::size_t k) const { return perm_[g][dim][k]; }

 private:
  std::vector<std::vector<std::size_t>> mul_;
  ComplexPtr base_;
  std::vector<std::vector<std::vector<std::size_t>>> perm_;
};

/// Level q of the nerve is G^q × X, with simplex (σ; k₁,…,k_q) named "σ@k₁,…,k_q".
/// ∂₀ acts by k₁, ∂_i merges k_i and k_{i+1} into k_{i+1}k_i, ∂_q forgets k_q.
class Nerve {
 public:
  Nerve(const FinGroupAction& action, int depth);

  const SimplicialObject& object() const { return obj_; }
  const FinGroupAction& action() const { return action_; }
  int depth() const { return obj_.depth(); }
  const DeltaComplex& level(int q) const { return *obj_.levels.at(q); }
  ComplexPtr level_ptr(int q) const { return obj_.levels.at(q); }

  /// Index of the tuple (k₁,…,k_q) among the |G|^q copies (k₁ most significant).
  std::size_t tuple_index(const std::vector<std::size_t>& ks) const;
  std::vector<std::size_t> tuple(int q, std::size_t t) const;
  /// Index in level q of simplex (σ; ks).
  std::size_t simplex(int q, int dim, std::size_t sigma, const std::vector<std::size_t>& ks) const;

 private:
  FinGroupAction action_;
  SimplicialObject obj_;
};

Nerve build_nerve(const FinGroupAction& action, int depth);

/// δ = Σ (−1)^i ∂_i^* on degree-p cochains of level q (result on level q+1).
RatVec nerve_delta(const Nerve& nerve, int q, int p, const RatVec& f);

/// The averaging contraction h : C^p(Γ_q) → C^p(Γ_{q−1}) for q ≥ 1,
/// (h f)(σ; k₁..k_{q−1}) = (−1)^q / |G| · Σ_g f(σ; k₁..k_{q−1}, g).
/// Satisfies δh + hδ = id on columns q ≥ 1. Only ℚ coefficients make sense.
RatVec avg_contract(const Nerve& nerve, int q, int p, const RatVec& f);
/// Same as a matrix acting on any coefficient complex whose groups are built
/// blockwise from cochains (the pullback structure is what matters).
RatMatrix avg_contract_matrix(const Nerve& nerve, const CoefficientComplex& coeff, int q, int p);

/// Equivariant cohomology with coefficients Z, Q or Q/Z.
AbGroupPresentation equivariant_cohomology(const Nerve& nerve, int n, Ring ring);

/// The category of Γ•-equivariant objects of H^n(C•) for n ∈ {0, 1},
/// built from the level categories and the face pullbacks only.
/// Objects are (z, φ) with φ : ∂₀^*z → ∂₁^*z a morphism in H^n(C•(Γ₁))
/// satisfying ∂₀^*φ − ∂₁^*φ + ∂₂^*φ = 0; a morphism ξ : (z,φ) → (z',φ')
/// satisfies φ' ∘ ∂₀^*ξ = ∂₁^*ξ ∘ φ.
class EquivariantCategory {
 public:
  EquivariantCategory(const Nerve& nerve, Ring ring, int n);
  bool is_object(const RatVec& z, const RatVec& phi) const;
  bool is_morphism(const RatVec& xi, const RatVec& z, const RatVec& phi,
                   const RatVec& z2, const RatVec& phi2) const;
  int degree() const { return n_; }

 private:
  const Nerve& nerve_;
  Ring ring_;
  int n_;
};

/// The isomorphism onto the total-complex chain category: (z, φ) ↦ (z, −φ)
/// on objects and ξ ↦ ξ on morphisms.
RatVec equivariant_to_total(const TotalComplex& total, int n, const RatVec& z,
                            const RatVec& phi);
std::pair<RatVec, RatVec> total_to_equivariant(const TotalComplex& total, int n,
                                               const RatVec& x);

}  // namespace dchar
