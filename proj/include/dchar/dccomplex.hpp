#pragma once

// The complex DC•_s of triples (c, h, ω): c an integral n-cochain, h a
// rational (n−1)-cochain, ω a rational n-cochain that is absent below
// degree s. d(c, h, ω) = (dc, ω − c − dh, dω).

#include "dchar/chaincat.hpp"
#include "dchar/complex.hpp"
#include "dchar/simplicial.hpp"

namespace dchar {

struct DCTriple {
  int degree = 0;
  RatVec c;      // integral values
  RatVec h;
  RatVec omega;  // empty below degree s
};

/// Coefficient complex DC•_s. The ω-slot is the full ℚ-cochain group.
class DCCoefficients : public CoefficientComplex {
 public:
  explicit DCCoefficients(int s);
  std::string name() const override;
  int top(const DeltaComplex& x) const override;
  std::vector<bool> mask(const DeltaComplex& x, int p) const override;
  RatMatrix diff(const DeltaComplex& x, int p) const override;
  RatMatrix pullback(const SimplicialMap& f, int p) const override;
  int s() const { return s_; }
  bool has_omega(int p) const { return p >= s_; }

 private:
  int s_;
};

/// DC•_s over one Δ-complex, with conversions between triples and vectors.
class DCComplex {
 public:
  DCComplex(ComplexPtr base, int s);

  const ComplexPtr& base() const { return base_; }
  int s() const { return coeff_.s(); }
  const MixedComplex& mixed() const { return mixed_; }
  const DCCoefficients& coefficients() const { return coeff_; }

  DCTriple zero(int n) const;
  /// Validates component lengths and integrality of c.
  RatVec pack(const DCTriple& x) const;
  DCTriple unpack(int n, const RatVec& v) const;
  AbGroupPresentation cohomology(int n) const { return mixed_.cohomology(n); }

 private:
  ComplexPtr base_;
  DCCoefficients coeff_;
  MixedComplex mixed_;
};

/// Splits a flat DC^p vector (per the DCCoefficients layout) into a triple.
DCTriple split_triple(const DeltaComplex& x, int s, int p, const RatVec& v);
RatVec join_triple(const DeltaComplex& x, int s, const DCTriple& t);

/// d(c, h, ω) = (dc, ω − c − dh, dω).
DCTriple dc_diff(const DCComplex& k, const DCTriple& x);
bool dc_is_cocycle(const DCComplex& k, const DCTriple& x);

/// The category H²(DC•_2(X)) of differential characters.
ChainCategory dc_cocycles_h2(ComplexPtr x);

/// A curvature k-cochain together with ℚ/ℤ holonomies on a ℤ-basis of the
/// (k−1)-cycles, extended linearly to all cycles.
struct DiffCharacter {
  ComplexPtr base;
  int k = 2;
  RatVec curvature;
  IntMatrix cycle_basis;  // columns
  RatVec holonomy;        // in [0, 1), one per basis cycle

  /// χ(z) for a (k−1)-cycle z; throws DimensionError if z is not a cycle.
  Rat operator()(const Chain& z) const;
};

/// Reads off (ω, h|cycles mod ℤ) from a degree-k cocycle; throws
/// CategoryError if x is not closed.
DiffCharacter to_character(const DCComplex& k, const DCTriple& x);
/// χ(∂S) ≡ ω(S) mod ℤ for every k-simplex S.
bool character_check(const DiffCharacter& ch);
/// Holonomy of an h-cochain around a cycle, in [0, 1).
Rat holonomy(const RatVec& h, const Chain& z);

}  // namespace dchar
