#pragma once

// Lattice U(1) gauge fields and the classification maps between them,
// differential characters (DC•_2), and integral classes (DC•_1 → C•_ℤ).

#include "dchar/dccomplex.hpp"
#include "dchar/nerve.hpp"

#include <optional>

namespace dchar {

/// dK ≠ 0 for the rounded plaquette field K: a lattice monopole.
class MonopoleDetected : public MathError {
 public:
  MonopoleDetected(const std::string& simplex, const Rat& charge);
  const std::string& simplex() const { return simplex_; }

 private:
  std::string simplex_;
};

/// The rounded coboundary of a gauge transformation lift is not closed.
class VortexDetected : public MathError {
 public:
  explicit VortexDetected(const std::string& simplex);
};

/// No h with dh = ω − c exists.
class NotCohomologous : public MathError {
 public:
  using MathError::MathError;
};

/// A ℚ/ℤ value per edge, stored in [0, 1).
struct GaugeField {
  ComplexPtr base;
  RatVec a;
  static GaugeField make(ComplexPtr base, RatVec a);
};

/// A ℚ/ℤ value per vertex, stored in [0, 1).
struct GaugeTransformation {
  RatVec g;
  static GaugeTransformation make(RatVec g);
};

/// A gauge field on Γ₀ of a nerve together with descent data t on Γ₁.
struct EquivariantGaugeField {
  GaugeField a;
  RatVec t;
  /// δa = dt and δt = 0, both in ℚ/ℤ.
  bool is_valid(const Nerve& nerve) const;
};

/// a + dg in ℚ/ℤ.
GaugeField gauge_act(const GaugeTransformation& g, const GaugeField& a);
/// Holonomy of the field around a 1-cycle, in [0, 1).
Rat holonomy(const GaugeField& a, const Chain& z);
/// Whether a' = a + dg for some g (decided exactly).
std::optional<GaugeTransformation> gauge_equivalent(const GaugeField& a, const GaugeField& b);

/// The degree-2 DC_2 cocycle of a gauge field: h = lift(a), K = round(dh),
/// ω = dh − K, c = −K. `lift` defaults to the [0, 1) representatives and
/// must agree with a mod ℤ. Throws MonopoleDetected when dK ≠ 0.
DCTriple dch(const DCComplex& dc2, const GaugeField& a, const std::optional<RatVec>& lift = {});
/// The gauge field h mod ℤ of a DC_2 cocycle.
GaugeField preq(const DCComplex& dc2, const DCTriple& x);

/// The closed DC_1 1-cochain (m, −f̃, −α) with m = round(d f̃), α = d f̃ − m.
/// Throws VortexDetected if dm ≠ 0.
DCTriple chern_morphism(const DCComplex& dc1, const GaugeTransformation& g, const RatVec& lift);
/// Whether two closed DC_1 1-cochains differ by d of a DC_1 0-cochain.
bool same_class(const DCComplex& dc, const DCTriple& x, const DCTriple& y);

/// The c-component of a degree-2 DC_1 cocycle.
RatVec weil_project(const DCComplex& dc1, const DCTriple& x);
/// (c, h, ω) with dh = ω − c; by default ω = c and h = 0. Throws
/// NotCohomologous when no such h exists.
DCTriple weil_lift(const DCComplex& dc1, const RatVec& c, const std::optional<RatVec>& omega = {});
/// A primitive (b, f, α) of a DC_1 2-cocycle x whose c-component is db.
DCTriple weil_injectivity_witness(const DCComplex& dc1, const DCTriple& x, const RatVec& b);

/// Pairing of an integral 2-cocycle with the sign-normalized generators of
/// the integral 2-cycles (first non-zero coefficient positive).
std::vector<Rat> chern_numbers(const DeltaComplex& x, const RatVec& c);

// ---------------------------------------------------------------------------
// Equivariant versions over an action groupoid.

/// A nerve together with its ℤ-cochain and DC_s total complexes.
struct EquivariantSetting {
  EquivariantSetting(const FinGroupAction& action, int s, int depth = 3);
  Nerve nerve;
  int s;
  TotalComplex integral;  // ℤ-cochains
  TotalComplex dc;        // DC_s
  /// Splits a total DC_s n-cochain into per-level triples (q = 0..n).
  std::vector<DCTriple> triples(int n, const RatVec& x) const;
  RatVec assemble(int n, const std::vector<DCTriple>& parts) const;
};

/// Lifts a total ℤ 2-cocycle (c₁, c₂, c₃) to a closed total DC_1 cochain
/// ((c₁,h₁,ω₁), (c₂,h₂,ω₂), (c₃,0,0)). Requires s = 1 in the setting.
RatVec equivariant_weil_lift(const EquivariantSetting& st, const RatVec& c);
/// The ℤ part (c₁, c₂, c₃) of a total DC_1 2-cochain.
RatVec equivariant_weil_project(const EquivariantSetting& st, const RatVec& x);

/// ω₁ of a total DC_2 2-cocycle.
RatVec kostant_eta(const EquivariantSetting& st, const RatVec& x);
/// Closed, δ-closed, and integral on every integral 2-cycle of Γ₀.
bool is_integral_closed_basic(const EquivariantSetting& st, const RatVec& omega);
/// The ℚ/ℤ total 1-cocycle (h₁ mod ℤ, −h₂ mod ℤ) of a cocycle with ω₁ = 0,
/// as a vector in the ℤ total complex with entries in [0, 1).
RatVec kostant_kernel_witness(const EquivariantSetting& st, const RatVec& x);
/// Equality of two ℚ/ℤ total 1-cocycles in H¹_tot(ℚ/ℤ).
bool qz_classes_equal(const EquivariantSetting& st, const RatVec& u, const RatVec& v);
/// A total DC_2 cocycle with η = ω for an ω in the lattice Ω²_{ℤ,cl,bas}.
std::optional<RatVec> kostant_preimage(const EquivariantSetting& st, const RatVec& omega);

struct KostantReport {
  AbGroupPresentation kernel;       // ker η ⊂ H²_tot(DC_2)
  AbGroupPresentation flat;         // H¹_tot(ℚ/ℤ)
  AbGroupPresentation image;        // Ω²_{ℤ,cl,bas}
  AbGroupPresentation h2;           // H²_tot(DC_2)
  MixedGroup curvatures;            // Ω²_{ℤ,cl,bas} as a subgroup of C²_ℚ(Γ₀)
  std::size_t preimages_checked = 0;
  std::size_t witnesses_checked = 0;
  bool kernel_matches_flat = false;
  bool surjective = false;
  bool splits = false;              // h2 ≅ kernel ⊕ image
  bool witnesses_consistent = false;
  bool exact() const {
    return kernel_matches_flat && surjective && splits && witnesses_consistent;
  }
};

/// Checks 0 → H¹_tot(ℚ/ℤ) → H²_tot(DC_2) → Ω²_{ℤ,cl,bas} → 0 on presentations,
/// on every generator of the curvature lattice, and on `samples` random
/// flat cocycles (seeded, deterministic). Requires s = 2.
KostantReport kostant_sequence_check(const EquivariantSetting& st, std::size_t samples = 8,
                                     unsigned long seed = 1);

}  // namespace dchar
