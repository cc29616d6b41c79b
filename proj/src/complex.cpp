#include "dchar/complex.hpp"

#include <algorithm>

namespace dchar {

std::size_t DeltaComplex::add_simplex(const std::string& id,
                                      const std::vector<std::string>& faces) {
  std::vector<std::size_t> idx;
  const int dim = static_cast<int>(faces.size()) - 1;
  if (faces.size() == 1)
    throw ComplexError("simplex '" + id + "' lists a single face; edges need two");
  int n = faces.empty() ? 0 : dim;
  for (const auto& f : faces) {
    SimplexRef r = lookup(f);
    if (r.dim != n - 1)
      throw ComplexError("face '" + f + "' of '" + id + "' has dimension " +
                         std::to_string(r.dim) + ", expected " + std::to_string(n - 1));
    idx.push_back(r.index);
  }
  return add_simplex_by_index(id, n, idx);
}

std::size_t DeltaComplex::add_simplex_by_index(const std::string& id, int dim,
                                               const std::vector<std::size_t>& faces) {
  if (id.empty()) throw ComplexError("empty simplex identifier");
  if (index_.count(id)) throw ComplexError("duplicate simplex identifier '" + id + "'");
  if (dim < 0) throw ComplexError("negative dimension for '" + id + "'");
  if (dim == 0 ? !faces.empty() : faces.size() != static_cast<std::size_t>(dim) + 1)
    throw ComplexError("simplex '" + id + "' has the wrong number of faces");
  if (dim > 0 && (static_cast<int>(ids_.size()) < dim))
    throw ComplexError("simplex '" + id + "' refers to a missing dimension");
  for (auto f : faces)
    if (f >= ids_[dim - 1].size())
      throw ComplexError("simplex '" + id + "' refers to an unknown face");
  if (static_cast<int>(ids_.size()) <= dim) {
    ids_.resize(dim + 1);
    faces_.resize(dim + 1);
  }
  ids_[dim].push_back(id);
  faces_[dim].push_back(faces);
  std::size_t i = ids_[dim].size() - 1;
  index_[id] = {dim, i};
  return i;
}

void DeltaComplex::validate() const {
  for (int n = 2; n <= dimension(); ++n)
    for (std::size_t s = 0; s < count(n); ++s) {
      const auto& f = faces_[n][s];
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          // face_i(face_j σ) = face_{j−1}(face_i σ)
          std::size_t lhs = faces_[n - 1][f[j]][i];
          std::size_t rhs = faces_[n - 1][f[i]][j - 1];
          if (lhs != rhs)
            throw ComplexError("simplicial identity fails on '" + ids_[n][s] + "' (i=" +
                               std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
    }
}

std::size_t DeltaComplex::count(int n) const {
  if (n < 0 || n > dimension()) return 0;
  return ids_[n].size();
}

std::optional<SimplexRef> DeltaComplex::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplexRef DeltaComplex::lookup(const std::string& id) const {
  auto r = find(id);
  if (!r) throw ComplexError("unknown simplex '" + id + "'");
  return *r;
}

std::size_t DeltaComplex::first_vertex(int n, std::size_t i) const {
  while (n > 0) {
    i = faces_[n][i].back();
    --n;
  }
  return i;
}

std::vector<std::size_t> DeltaComplex::vertices(int n, std::size_t i) const {
  if (n == 0) return {i};
  // Vertex k is the first vertex of the face opposite all others but k.
  std::vector<std::size_t> out;
  std::vector<std::size_t> rest = vertices(n - 1, faces_[n][i][0]);
  out.push_back(first_vertex(n, i));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

IntMatrix DeltaComplex::coboundary_matrix(int n) const {
  IntMatrix m(count(n + 1), count(n));
  if (n < 0 || n + 1 > dimension()) return m;
  for (std::size_t s = 0; s < count(n + 1); ++s) {
    const auto& f = faces_[n + 1][s];
    for (std::size_t i = 0; i < f.size(); ++i) m(s, f[i]) += (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

IntMatrix DeltaComplex::boundary_matrix(int n) const {
  return coboundary_matrix(n - 1).transposed();
}

IntMatrix DeltaComplex::cycle_basis(int n) const {
  return integer_kernel_basis(boundary_matrix(n));
}

long DeltaComplex::euler_characteristic() const {
  long chi = 0;
  for (int n = 0; n <= dimension(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(count(n));
  return chi;
}

namespace {

DeltaComplex build(const std::vector<std::pair<std::string, std::vector<std::string>>>& decl) {
  DeltaComplex k;
  for (const auto& [id, faces] : decl) k.add_simplex(id, faces);
  k.validate();
  return k;
}

DeltaComplex octahedron() {
  DeltaComplex k;
  for (int v = 0; v < 6; ++v) k.add_simplex("v" + std::to_string(v), {});
  auto antipodal = [](int a, int b) { return a / 2 == b / 2; };
  auto edge = [](int a, int b) { return "e" + std::to_string(a) + std::to_string(b); };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (!antipodal(a, b))
        k.add_simplex(edge(a, b), {"v" + std::to_string(b), "v" + std::to_string(a)});
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 4; ++b)
      for (int c = 4; c < 6; ++c)
        k.add_simplex("t" + std::to_string(a) + std::to_string(b) + std::to_string(c),
                      {edge(b, c), edge(a, c), edge(a, b)});
  k.validate();
  return k;
}

}  // namespace

std::vector<std::string> standard_space_names() {
  return {"point", "interval", "circle_3", "sphere_octahedron", "torus_min", "rp2_min"};
}

DeltaComplex standard_space(const std::string& name) {
  if (name == "point") return build({{"v0", {}}});
  if (name == "interval") return build({{"v0", {}}, {"v1", {}}, {"e01", {"v1", "v0"}}});
  if (name == "circle_3")
    return build({{"v0", {}},
                  {"v1", {}},
                  {"v2", {}},
                  {"e01", {"v1", "v0"}},
                  {"e12", {"v2", "v1"}},
                  {"e20", {"v0", "v2"}}});
  if (name == "sphere_octahedron") return octahedron();
  if (name == "torus_min")
    return build({{"v", {}},
                  {"a", {"v", "v"}},
                  {"b", {"v", "v"}},
                  {"c", {"v", "v"}},
                  {"U", {"b", "c", "a"}},
                  {"L", {"a", "c", "b"}}});
  if (name == "rp2_min")
    return build({{"v", {}},
                  {"w", {}},
                  {"a", {"w", "v"}},
                  {"b", {"w", "v"}},
                  {"c", {"w", "w"}},
                  {"T1", {"c", "b", "a"}},
                  {"T2", {"c", "a", "b"}}});
  throw ComplexError("unknown standard space '" + name + "'");
}

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    case Ring::QZ: return "QZ";
  }
  return "?";
}

Cochain Cochain::zero(ComplexPtr complex, int degree, Ring ring) {
  std::size_t n = complex->count(degree);
  return Cochain{std::move(complex), degree, ring, RatVec(n)};
}

Cochain Cochain::make(ComplexPtr complex, int degree, Ring ring, RatVec values) {
  if (degree < 0 || degree > complex->dimension())
    throw DimensionError("cochain degree " + std::to_string(degree) + " out of range");
  if (values.size() != complex->count(degree))
    throw DimensionError("cochain has " + std::to_string(values.size()) +
                         " values, expected " + std::to_string(complex->count(degree)));
  if (ring == Ring::Z && !is_integral(values))
    throw DimensionError("non-integral value in a Z-cochain");
  if (ring == Ring::QZ)
    for (auto& v : values) v = frac(v);
  return Cochain{std::move(complex), degree, ring, std::move(values)};
}

Cochain coboundary(const Cochain& x) {
  if (x.degree >= x.complex->dimension())
    throw DimensionError("coboundary of a top-degree cochain");
  RatVec out = to_rat(x.complex->coboundary_matrix(x.degree)) * x.values;
  return Cochain::make(x.complex, x.degree + 1, x.ring, std::move(out));
}

Chain boundary(const DeltaComplex& k, const Chain& z) {
  if (z.degree == 0) return Chain{-1, {}};
  return Chain{z.degree - 1, k.boundary_matrix(z.degree) * z.coeffs};
}

Rat evaluate(const Cochain& x, const Chain& z) {
  if (x.degree != z.degree) throw DimensionError("pairing degree mismatch");
  if (x.values.size() != z.coeffs.size()) throw DimensionError("pairing length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) s += x.values[i] * Rat(z.coeffs[i]);
  return x.ring == Ring::QZ ? frac(s) : s;
}

bool is_cocycle(const Cochain& x) {
  if (x.degree >= x.complex->dimension()) return true;
  RatVec dx = to_rat(x.complex->coboundary_matrix(x.degree)) * x.values;
  if (x.ring == Ring::QZ) return is_integral(dx);
  return is_zero(dx);
}

bool is_cycle(const DeltaComplex& k, const Chain& z) {
  if (z.degree == 0) return true;
  IntVec b = k.boundary_matrix(z.degree) * z.coeffs;
  return std::all_of(b.begin(), b.end(), [](const Int& v) { return sgn(v) == 0; });
}

AbGroupPresentation simplicial_cohomology(const DeltaComplex& k, int n, Ring ring) {
  IntMatrix prev = k.coboundary_matrix(n - 1);
  IntMatrix next = k.coboundary_matrix(n);
  switch (ring) {
    case Ring::Z: return cohomology_int(prev, next);
    case Ring::Q: return cohomology_rat(to_rat(prev), to_rat(next));
    case Ring::QZ: return cohomology_qz(prev, next);
  }
  return {};
}

}  // namespace dchar
