#pragma once

// Finite Δ-complexes and their cochains.

#include "dchar/exactalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dchar {

/// Raised for malformed combinatorial input (unknown ids, bad faces, ...).
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SimplexRef {
  int dim = 0;
  std::size_t index = 0;
  bool operator==(const SimplexRef&) const = default;
  auto operator<=>(const SimplexRef&) const = default;
};

/// A finite semi-simplicial set. Each n-simplex (n ≥ 1) lists its n+1 faces in
/// order; face i is the one opposite vertex i.
class DeltaComplex {
 public:
  DeltaComplex() = default;

  /// Appends a simplex. `faces` is empty for a vertex; otherwise it names
  /// already-declared simplices of one lower dimension. Returns its index.
  std::size_t add_simplex(const std::string& id, const std::vector<std::string>& faces);
  std::size_t add_simplex_by_index(const std::string& id, int dim,
                                   const std::vector<std::size_t>& faces);

  /// Checks the simplicial identities; throws ComplexError naming the simplex.
  void validate() const;

  int dimension() const { return static_cast<int>(ids_.size()) - 1; }
  std::size_t count(int n) const;
  const std::string& id(int n, std::size_t i) const { return ids_.at(n).at(i); }
  const std::vector<std::size_t>& faces(int n, std::size_t i) const {
    return faces_.at(n).at(i);
  }
  std::optional<SimplexRef> find(const std::string& id) const;
  /// Like find, but throws ComplexError for unknown ids.
  SimplexRef lookup(const std::string& id) const;
  /// Vertex 0 of the simplex (obtained by repeatedly dropping the last vertex).
  std::size_t first_vertex(int n, std::size_t i) const;
  /// Vertex indices of the simplex in order.
  std::vector<std::size_t> vertices(int n, std::size_t i) const;

  /// Matrix of d : C^n → C^{n+1}; shape count(n+1) × count(n).
  /// Defined for every integer n (empty outside the range).
  IntMatrix coboundary_matrix(int n) const;
  /// Matrix of ∂ : C_n → C_{n−1}; the transpose of coboundary_matrix(n−1).
  IntMatrix boundary_matrix(int n) const;
  /// Columns form a ℤ-basis of the n-cycles.
  IntMatrix cycle_basis(int n) const;
  long euler_characteristic() const;

 private:
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::map<std::string, SimplexRef> index_;
};

using ComplexPtr = std::shared_ptr<const DeltaComplex>;

/// Names accepted: point, interval, circle_3, sphere_octahedron, torus_min, rp2_min.
DeltaComplex standard_space(const std::string& name);
std::vector<std::string> standard_space_names();

enum class Ring { Z, Q, QZ };
std::string ring_name(Ring r);

/// A cochain with values in ℤ, ℚ or ℚ/ℤ (ℚ/ℤ values kept in [0, 1)).
struct Cochain {
  ComplexPtr complex;
  int degree = 0;
  Ring ring = Ring::Q;
  RatVec values;

  static Cochain zero(ComplexPtr complex, int degree, Ring ring);
  /// Validates length and ring membership, reducing ℚ/ℤ values into [0, 1).
  static Cochain make(ComplexPtr complex, int degree, Ring ring, RatVec values);
};

/// A formal integer combination of n-simplices.
struct Chain {
  int degree = 0;
  IntVec coeffs;
};

Cochain coboundary(const Cochain& x);
Chain boundary(const DeltaComplex& k, const Chain& z);
/// Pairing ⟨x, z⟩; reduced into [0, 1) for ℚ/ℤ cochains.
Rat evaluate(const Cochain& x, const Chain& z);
bool is_cocycle(const Cochain& x);
bool is_cycle(const DeltaComplex& k, const Chain& z);

/// H^n of the ℤ-, ℚ- or ℚ/ℤ-cochain complex.
AbGroupPresentation simplicial_cohomology(const DeltaComplex& k, int n, Ring ring);

}  // namespace dchar
