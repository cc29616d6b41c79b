#pragma once

// Covers of a Δ-complex by closed subcomplexes, the Čech double complex of a
// cover, the contracting homotopies ρ of its rows, and the check that degree-1
// cochain categories glue along the cover.

#include "dchar/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dchar {

class CoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subcomplexes U_α covering a Δ-complex, with a chosen τ(σ) ∋ σ per simplex.
struct Cover {
  ComplexPtr base;
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<bool>>> member;  // [element][dim][index]
  std::vector<std::vector<std::size_t>> tau;           // [dim][index]

  /// Elements are given by simplex ids and closed under faces. Simplices
  /// without an explicit τ get the first element containing them.
  static Cover make(ComplexPtr base,
                    const std::vector<std::pair<std::string, std::vector<std::string>>>& elements,
                    const std::map<std::string, std::string>& tau = {});
  /// The cover by the whole complex.
  static Cover single(ComplexPtr base);

  std::size_t size() const { return names.size(); }
  bool contains(std::size_t e, int dim, std::size_t i) const { return member[e][dim][i]; }
  std::optional<std::size_t> element(const std::string& name) const;
  /// Throws CoverError if an element is not face-closed, a simplex is not
  /// covered, or τ(σ) does not contain σ.
  void validate() const;
};

/// Non-negative vertex weights per cover element, summing to 1 at each vertex
/// and supported on elements containing the vertex.
struct PartitionOfUnity {
  std::vector<std::vector<Rat>> weight;  // [vertex][element]

  /// Equal weights on the elements containing each vertex.
  static PartitionOfUnity uniform(const Cover& cover);
  void validate(const Cover& cover) const;
};

/// Weights w_σ(α) per simplex, summing to 1 and supported on elements ∋ σ.
using SimplexWeights = std::vector<std::vector<std::vector<Rat>>>;  // [dim][index][element]

/// Weight 1 on τ(σ).
SimplexWeights indicator_weights(const Cover& cover);
/// The first vertex's weights restricted to the elements containing σ and
/// renormalized. Throws CoverError when the restriction vanishes.
SimplexWeights first_vertex_weights(const Cover& cover, const PartitionOfUnity& pou);

/// Column q is the disjoint union of the (q+1)-fold intersections: simplices
/// (σ; α₀,…,α_q) with every α_i ∋ σ, named "σ|α₀,…,α_q". ∂_i drops α_i.
class CechComplex {
 public:
  explicit CechComplex(Cover cover, int depth = 3);

  const Cover& cover() const { return cover_; }
  const SimplicialObject& object() const { return obj_; }
  int depth() const { return obj_.depth(); }
  const DeltaComplex& level(int q) const { return *obj_.levels.at(q); }
  /// υ : column 0 → base, forgetting the tag.
  const SimplicialMap& augmentation() const { return aug_; }

  std::size_t simplex(int q, int dim, std::size_t sigma,
                      const std::vector<std::size_t>& tags) const;
  std::size_t base_simplex(int q, int dim, std::size_t i) const;
  const std::vector<std::size_t>& tags(int q, int dim, std::size_t i) const;

  /// υ* : C^p(M) → C^p(column 0).
  RatMatrix upsilon(int p) const;
  /// δ = Σ (−1)^i ∂_i^* : C^p(column q) → C^p(column q+1).
  RatMatrix delta(int q, int p) const;

 private:
  struct Entry {
    std::size_t sigma;
    std::vector<std::size_t> tags;
  };
  Cover cover_;
  SimplicialObject obj_;
  SimplicialMap aug_;
  std::vector<std::vector<std::vector<Entry>>> entries_;  // [q][dim][index]
  std::vector<std::map<std::tuple<int, std::size_t, std::vector<std::size_t>>, std::size_t>> index_;
};

/// The row homotopy (ρf)(σ; α₁…α_q) = Σ_β w_σ(β) f(σ; β, α₁…α_q), mapping
/// column q to column q−1 and column 0 to C^p(M).
class RhoOperator {
 public:
  RhoOperator(const CechComplex& cech, SimplexWeights weights);
  /// Matrix of ρ on degree-p cochains of column q (q ≥ 0).
  RatMatrix at(int q, int p) const;
  RatVec apply(int q, int p, const RatVec& f) const { return at(q, p) * f; }

 private:
  const CechComplex* cech_;
  SimplexWeights w_;
};

/// ρ(σ; α) = (σ; τσ, α) dualized.
RhoOperator rho_section(const CechComplex& cech);
/// ρ weighted by a partition of unity through the first-vertex rule.
RhoOperator rho_partition(const CechComplex& cech, const PartitionOfUnity& pou);

struct RhoIdentityReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first failing identity
};

/// Checks ρυ* = id, υ*ρ + ρδ = id on column 0, and δρ + ρδ = id on columns
/// 1..depth−1, as matrix identities for p = 0..max_p. `delta_sign` multiplies δ.
RhoIdentityReport check_rho_identities(const CechComplex& cech, const RhoOperator& rho,
                                       int max_p = 2, int delta_sign = 1);

/// A primitive ρx of a row cocycle x in column q ≥ 1 (δ(ρx) = x is asserted).
RatVec row_primitive(const CechComplex& cech, const RhoOperator& rho, int q, int p,
                     const RatVec& x);

struct DescentOptions {
  std::optional<PartitionOfUnity> partition;  // ρ variant; section if absent
  bool flip_delta = false;                    // negative control
  std::size_t samples = 6;
  unsigned long seed = 1;
};

struct DescentReport {
  AbGroupPresentation base_h1;   // H¹(C•(M))
  AbGroupPresentation total_h1;  // H¹ of the Čech total complex
  bool identities_hold = false;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  std::size_t pairs_checked = 0;
  std::size_t objects_checked = 0;
  std::vector<std::string> failures;
  bool certified() const {
    return identities_hold && fully_faithful && essentially_surjective && base_h1 == total_h1;
  }
};

/// Certifies that restriction H¹(C•(M)) → H¹(C(U)•_tot) is an equivalence:
/// hom-set bijections on sampled pairs via υ* and ρ, and for sampled total
/// cocycles (z, t) a c with δc = t and a global y with υ*y = z − dc.
/// Ring must be Z or Q; the partition variant needs Q.
DescentReport descent_equivalence_h1(const Cover& cover, Ring ring,
                                     const DescentOptions& options = {});

}  // namespace dchar
