#include "dchar/subgroup.hpp"

namespace dchar {

MixedGroup MixedGroup::zero(std::size_t ambient) {
  return MixedGroup{ambient, RatMatrix(ambient, 0), RatMatrix(ambient, 0)};
}

MixedGroup MixedGroup::coordinate(const std::vector<bool>& integral) {
  const std::size_t n = integral.size();
  std::vector<RatVec> lat, sub;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    (integral[i] ? lat : sub).push_back(std::move(e));
  }
  return MixedGroup{n, from_columns(lat, n), from_columns(sub, n)};
}

bool MixedGroup::contains(const RatVec& x) const {
  if (x.size() != ambient) throw DimensionError("subgroup membership length mismatch");
  std::vector<bool> mask(lattice.cols(), true);
  mask.resize(lattice.cols() + subspace.cols(), false);
  return MixedSystem(hstack(lattice, subspace), mask).solve(x).has_value();
}

namespace {

// Multiplies each row by the lcm of its denominators.
IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat e = m(i, j) * Rat(l);
      out(i, j) = e.get_num();
    }
  }
  return out;
}

// A ℤ-basis (as columns) of the lattice spanned by the columns of m.
RatMatrix lattice_basis(const RatMatrix& m) {
  Int den = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
  RatMatrix scaled_m = scaled(m, Rat(den));
  IntMatrix im = to_int(scaled_m);
  SmithDecomposition snf = smith_normal_form(im);
  IntMatrix mv = im * snf.V;
  const std::size_t r = snf.rank();
  RatMatrix out(m.rows(), r);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = Rat(mv(i, j)) / Rat(den);
  return out;
}

}  // namespace

MixedGroup mixed_kernel(const RatMatrix& f, const std::vector<bool>& integral) {
  if (integral.size() != f.cols()) throw DimensionError("mixed_kernel mask mismatch");
  std::vector<std::size_t> icols, rcols;
  for (std::size_t j = 0; j < f.cols(); ++j) (integral[j] ? icols : rcols).push_back(j);
  RatMatrix fi = select_columns(f, icols);
  RatMatrix fr = select_columns(f, rcols);
  const std::size_t n = f.cols();

  std::vector<RatVec> sub;
  RatMatrix kr = kernel_basis(fr);
  for (std::size_t c = 0; c < kr.cols(); ++c) {
    RatVec v(n);
    for (std::size_t k = 0; k < rcols.size(); ++k) v[rcols[k]] = kr(k, c);
    sub.push_back(std::move(v));
  }

  std::vector<RatVec> lat;
  RationalSolver rsolve(fr);
  RatMatrix proj = rsolve.left_kernel() * fi;
  IntMatrix lk = integer_kernel_basis(clear_row_denominators(proj));
  for (std::size_t c = 0; c < lk.cols(); ++c) {
    IntVec x = lk.col(c);
    RatVec rhs = scale(fi * to_rat(x), Rat(-1));
    auto y = rsolve.solve(rhs);
    if (!y) throw std::logic_error("mixed_kernel: lattice vector does not lift");
    RatVec v(n);
    for (std::size_t k = 0; k < icols.size(); ++k) v[icols[k]] = Rat(x[k]);
    for (std::size_t k = 0; k < rcols.size(); ++k) v[rcols[k]] = (*y)[k];
    lat.push_back(std::move(v));
  }
  return MixedGroup{n, from_columns(lat, n), from_columns(sub, n)};
}

MixedGroup mixed_image(const RatMatrix& f, const std::vector<bool>& integral) {
  if (integral.size() != f.cols()) throw DimensionError("mixed_image mask mismatch");
  std::vector<std::size_t> icols, rcols;
  for (std::size_t j = 0; j < f.cols(); ++j) (integral[j] ? icols : rcols).push_back(j);
  return MixedGroup{f.rows(), select_columns(f, icols), select_columns(f, rcols)};
}

MixedGroup apply(const RatMatrix& f, const MixedGroup& g) {
  if (f.cols() != g.ambient) throw DimensionError("apply: shape mismatch");
  return MixedGroup{f.rows(), f * g.lattice, f * g.subspace};
}

MixedGroup sum(const MixedGroup& a, const MixedGroup& b) {
  if (a.ambient != b.ambient) throw DimensionError("sum: ambient mismatch");
  return MixedGroup{a.ambient, hstack(a.lattice, b.lattice), hstack(a.subspace, b.subspace)};
}

AbGroupPresentation subquotient(const MixedGroup& k, const MixedGroup& i) {
  if (k.ambient != i.ambient) throw DimensionError("subquotient: ambient mismatch");
  for (std::size_t c = 0; c < i.lattice.cols(); ++c)
    if (!k.contains(i.lattice.col(c)))
      throw DimensionError("subquotient: denominator not contained in numerator");
  for (std::size_t c = 0; c < i.subspace.cols(); ++c)
    if (!k.contains(i.subspace.col(c)))
      throw DimensionError("subquotient: denominator not contained in numerator");

  const std::size_t dim_v = rank(k.subspace);
  const std::size_t dim_w = rank(i.subspace);
  RatMatrix pi = left_kernel_basis(column_space_basis(k.subspace));
  if (k.subspace.cols() == 0) pi = RatMatrix::identity(k.ambient);

  // The lattice part: π(K) / π(I) as ℤ^l / im P.
  RatMatrix beta = lattice_basis(pi * k.lattice);
  const std::size_t l = beta.cols();
  RatMatrix pil = pi * i.lattice;
  RationalSolver coords(beta);
  IntMatrix p(l, i.lattice.cols());
  for (std::size_t c = 0; c < pil.cols(); ++c) {
    auto x = coords.solve(pil.col(c));
    if (!x || !is_integral(*x)) throw std::logic_error("subquotient: lattice coordinates");
    for (std::size_t r = 0; r < l; ++r) p(r, c) = (*x)[r].get_num();
  }
  SmithDecomposition snf = smith_normal_form(p);

  AbGroupPresentation out;
  out.free_rank = l - snf.rank();
  for (const auto& f : snf.invariant_factors())
    if (f > 1) out.torsion.push_back(f);

  // The divisible part: V / (W + Λ·ker P).
  RatMatrix nk = kernel_basis(to_rat(p));
  RatMatrix u = hstack(i.subspace, i.lattice * nk);
  const std::size_t k0 = rank(u) - dim_w;
  const std::size_t m = dim_v - dim_w;
  out.divisible_rank = k0;
  out.rational_rank = m - k0;
  return out;
}

RatVec random_element(const MixedGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> num(-6, 6);
  RatVec x(g.ambient);
  for (std::size_t j = 0; j < g.lattice.cols(); ++j) x = add(x, scale(g.lattice.col(j), Rat(coef(rng))));
  for (std::size_t j = 0; j < g.subspace.cols(); ++j)
    x = add(x, scale(g.subspace.col(j), Rat(num(rng)) / Rat(6)));
  return x;
}

}  // namespace dchar
