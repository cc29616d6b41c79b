#include "dchar/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace dchar {

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

Int floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int nearest_int(const Rat& x) {
  Rat shifted = x + Rat(1, 2);
  return floor(shifted);
}

Rat frac(const Rat& x) {
  Rat out = x - Rat(floor(x));
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw DimensionError("matrix entry is not integral");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw DimensionError("vector entry is not integral");
    out[i] = v[i].get_num();
  }
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  RatMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  RatMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

RatMatrix select_columns(const RatMatrix& m, const std::vector<std::size_t>& cols) {
  RatMatrix out(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, cols[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(S.rows(), S.cols());
  while (r < n && sgn(S(r, r)) != 0) ++r;
  return r;
}

IntVec SmithDecomposition::invariant_factors() const {
  IntVec out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(S(i, i));
  return out;
}

namespace {

// row_dst += k * row_src, mirrored onto the left transform.
void add_row_multiple(IntMatrix& s, IntMatrix& u, std::size_t dst, std::size_t src,
                      const Int& k) {
  for (std::size_t c = 0; c < s.cols(); ++c)
    if (sgn(s(src, c)) != 0) s(dst, c) += k * s(src, c);
  for (std::size_t c = 0; c < u.cols(); ++c)
    if (sgn(u(src, c)) != 0) u(dst, c) += k * u(src, c);
}

// col_dst += k * col_src, mirrored onto the right transform.
void add_col_multiple(IntMatrix& s, IntMatrix& v, std::size_t dst, std::size_t src,
                      const Int& k) {
  for (std::size_t r = 0; r < s.rows(); ++r)
    if (sgn(s(r, src)) != 0) s(r, dst) += k * s(r, src);
  for (std::size_t r = 0; r < v.rows(); ++r)
    if (sgn(v(r, src)) != 0) v(r, dst) += k * v(r, src);
}

bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (sgn(s(i, j)) == 0) continue;
      Int mag = abs(s(i, j));
      if (!found || mag < best) {
        best = mag;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition out{IntMatrix::identity(m.rows()), m,
                         IntMatrix::identity(m.cols())};
  IntMatrix& s = out.S;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t diag = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    bool any = true;
    for (;;) {
      std::size_t pr = t, pc = t;
      if (!find_pivot(s, t, pr, pc)) {
        any = false;
        break;
      }
      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(s, u, i, t, Int(-q));
        if (sgn(s(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col_multiple(s, v, j, t, Int(-q));
        if (sgn(s(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (sgn(s(i, j)) == 0) continue;
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row_multiple(s, u, t, i, Int(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (!any) break;
    if (sgn(s(t, t)) < 0) {
      for (std::size_t c = 0; c < s.cols(); ++c) s(t, c) = -s(t, c);
      for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
    }
  }
  return out;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntMatrix out(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j - r) = snf.V(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Rational elimination

RowEchelon row_echelon(const RatMatrix& a) {
  RowEchelon e{a, {}, RatMatrix::identity(a.rows())};
  RatMatrix& r = e.reduced;
  RatMatrix& t = e.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && sgn(r(p, col)) == 0) ++p;
    if (p == r.rows()) continue;
    r.swap_rows(row, p);
    t.swap_rows(row, p);
    Rat inv = 1 / r(row, col);
    for (std::size_t c = 0; c < r.cols(); ++c)
      if (sgn(r(row, c)) != 0) r(row, c) *= inv;
    for (std::size_t c = 0; c < t.cols(); ++c)
      if (sgn(t(row, c)) != 0) t(row, c) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || sgn(r(i, col)) == 0) continue;
      Rat f = r(i, col);
      for (std::size_t c = 0; c < r.cols(); ++c)
        if (sgn(r(row, c)) != 0) r(i, c) -= f * r(row, c);
      for (std::size_t c = 0; c < t.cols(); ++c)
        if (sgn(t(row, c)) != 0) t(i, c) -= f * t(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RatMatrix& a) { return row_echelon(a).pivot_cols.size(); }

RatMatrix kernel_basis(const RatMatrix& a) {
  RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(a.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return from_columns(basis, a.cols());
}

RatMatrix left_kernel_basis(const RatMatrix& a) {
  RowEchelon e = row_echelon(a);
  const std::size_t r = e.pivot_cols.size();
  RatMatrix out(a.rows() - r, a.rows());
  for (std::size_t i = r; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) out(i - r, j) = e.transform(i, j);
  return out;
}

RatMatrix column_space_basis(const RatMatrix& a) {
  return select_columns(a, row_echelon(a).pivot_cols);
}

RationalSolver::RationalSolver(const RatMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), echelon_(row_echelon(a)) {}

std::optional<RatVec> RationalSolver::solve(const RatVec& b) const {
  if (b.size() != rows_) throw DimensionError("right-hand side length mismatch");
  RatVec tb = echelon_.transform * b;
  const std::size_t r = rank();
  for (std::size_t i = r; i < rows_; ++i)
    if (sgn(tb[i]) != 0) return std::nullopt;
  RatVec x(cols_);
  for (std::size_t k = 0; k < r; ++k) x[echelon_.pivot_cols[k]] = tb[k];
  return x;
}

RatMatrix RationalSolver::left_kernel() const {
  const std::size_t r = rank();
  RatMatrix out(rows_ - r, rows_);
  for (std::size_t i = r; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out(i - r, j) = echelon_.transform(i, j);
  return out;
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
  return RationalSolver(a).solve(b);
}

// ---------------------------------------------------------------------------
// Mixed systems

MixedSystem::MixedSystem(const RatMatrix& coeffs, std::vector<bool> integral_unknowns)
    : coeffs_(coeffs), integral_(std::move(integral_unknowns)) {
  if (integral_.size() != coeffs_.cols())
    throw DimensionError("integrality mask does not match unknown count");
  for (std::size_t j = 0; j < integral_.size(); ++j)
    (integral_[j] ? int_cols_ : rat_cols_).push_back(j);

  rat_echelon_ = row_echelon(select_columns(coeffs_, rat_cols_));
  const std::size_t r = rat_echelon_.pivot_cols.size();
  annihilator_ = RatMatrix(coeffs_.rows() - r, coeffs_.rows());
  for (std::size_t i = r; i < coeffs_.rows(); ++i)
    for (std::size_t j = 0; j < coeffs_.rows(); ++j)
      annihilator_(i - r, j) = rat_echelon_.transform(i, j);

  // Projecting away the rational unknowns leaves a pure ℤ-system.
  RatMatrix projected = annihilator_ * select_columns(coeffs_, int_cols_);
  row_scale_.assign(projected.rows(), Rat(1));
  IntMatrix integral(projected.rows(), projected.cols());
  for (std::size_t i = 0; i < projected.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < projected.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), projected(i, j).get_den_mpz_t());
    row_scale_[i] = Rat(l);
    for (std::size_t j = 0; j < projected.cols(); ++j) {
      Rat e = projected(i, j) * row_scale_[i];
      integral(i, j) = e.get_num();
    }
  }
  snf_ = smith_normal_form(integral);
}

std::optional<RatVec> MixedSystem::solve(const RatVec& rhs) const {
  if (rhs.size() != coeffs_.rows()) throw DimensionError("right-hand side length mismatch");

  RatVec projected = annihilator_ * rhs;
  IntVec b(projected.size());
  for (std::size_t i = 0; i < projected.size(); ++i) {
    Rat e = projected[i] * row_scale_[i];
    if (!is_integral(e)) return std::nullopt;
    b[i] = e.get_num();
  }
  IntVec y = snf_.U * b;
  const std::size_t r = snf_.rank();
  IntVec z(int_cols_.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), snf_.S(i, i).get_mpz_t())) return std::nullopt;
      z[i] = y[i] / snf_.S(i, i);
    } else if (sgn(y[i]) != 0) {
      return std::nullopt;
    }
  }
  IntVec x_int = snf_.V * z;

  RatVec full(coeffs_.cols());
  for (std::size_t k = 0; k < int_cols_.size(); ++k) full[int_cols_[k]] = Rat(x_int[k]);
  RatVec rest = sub(rhs, coeffs_ * full);
  RatVec t = rat_echelon_.transform * rest;
  const std::size_t rr = rat_echelon_.pivot_cols.size();
  for (std::size_t k = 0; k < rr; ++k) full[rat_cols_[rat_echelon_.pivot_cols[k]]] = t[k];

  if (!is_zero(sub(coeffs_ * full, rhs)))
    throw std::logic_error("mixed solver produced a non-zero residual");
  return full;
}

std::optional<MixedSolution> solve_mixed(const IntMatrix& a, const RatMatrix& b,
                                         const RatVec& v) {
  const std::size_t rows = std::max(a.rows(), b.rows());
  if ((a.cols() > 0 && a.rows() != rows) || (b.cols() > 0 && b.rows() != rows) ||
      v.size() != rows)
    throw DimensionError("solve_mixed: inconsistent dimensions");
  RatMatrix ar = a.cols() > 0 ? to_rat(a) : RatMatrix(rows, 0);
  RatMatrix br = b.cols() > 0 ? b : RatMatrix(rows, 0);
  std::vector<bool> mask(a.cols(), true);
  mask.resize(a.cols() + b.cols(), false);
  MixedSystem sys(hstack(ar, br), mask);
  auto full = sys.solve(v);
  if (!full) return std::nullopt;
  MixedSolution out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.integral.push_back((*full)[j].get_num());
  for (std::size_t j = 0; j < b.cols(); ++j) out.rational.push_back((*full)[a.cols() + j]);
  return out;
}

// ---------------------------------------------------------------------------
// Presentations

bool AbGroupPresentation::is_trivial() const {
  return free_rank == 0 && torsion.empty() && divisible_rank == 0 && rational_rank == 0;
}

std::string AbGroupPresentation::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (rational_rank == 1) parts.push_back("Q");
  else if (rational_rank > 1) parts.push_back("Q^" + std::to_string(rational_rank));
  if (divisible_rank > 0) parts.push_back("(Q/Z)^" + std::to_string(divisible_rank));
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
  return os.str();
}

bool AbGroupPresentation::operator==(const AbGroupPresentation& o) const {
  return free_rank == o.free_rank && torsion == o.torsion &&
         divisible_rank == o.divisible_rank && rational_rank == o.rational_rank;
}

IntVec normalize_torsion(const IntVec& orders) {
  IntVec kept;
  for (const auto& o : orders)
    if (abs(o) > 1) kept.push_back(abs(o));
  IntMatrix diag(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) diag(i, i) = kept[i];
  IntVec out;
  for (const auto& f : smith_normal_form(diag).invariant_factors())
    if (f > 1) out.push_back(f);
  return out;
}

AbGroupPresentation direct_sum(const AbGroupPresentation& a, const AbGroupPresentation& b) {
  AbGroupPresentation out;
  out.free_rank = a.free_rank + b.free_rank;
  out.divisible_rank = a.divisible_rank + b.divisible_rank;
  out.rational_rank = a.rational_rank + b.rational_rank;
  IntVec all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  out.torsion = normalize_torsion(all);
  return out;
}

namespace {

void check_composable(std::size_t prev_rows, std::size_t prev_cols, std::size_t next_rows,
                      std::size_t next_cols) {
  (void)prev_cols;
  (void)next_rows;
  if (next_cols != prev_rows)
    throw DimensionError("cohomology: d_next columns must equal d_prev rows");
}

}  // namespace

AbGroupPresentation cohomology_int(const IntMatrix& d_prev, const IntMatrix& d_next) {
  check_composable(d_prev.rows(), d_prev.cols(), d_next.rows(), d_next.cols());
  if (!(d_next * d_prev).is_zero()) throw NotAComplexError("d_next * d_prev != 0");
  SmithDecomposition prev = smith_normal_form(d_prev);
  SmithDecomposition next = smith_normal_form(d_next);
  AbGroupPresentation h;
  h.free_rank = d_prev.rows() - prev.rank() - next.rank();
  for (const auto& f : prev.invariant_factors())
    if (f > 1) h.torsion.push_back(f);
  return h;
}

AbGroupPresentation cohomology_qz(const IntMatrix& d_prev, const IntMatrix& d_next) {
  check_composable(d_prev.rows(), d_prev.cols(), d_next.rows(), d_next.cols());
  if (!(d_next * d_prev).is_zero()) throw NotAComplexError("d_next * d_prev != 0");
  SmithDecomposition prev = smith_normal_form(d_prev);
  SmithDecomposition next = smith_normal_form(d_next);
  AbGroupPresentation h;
  h.divisible_rank = d_prev.rows() - prev.rank() - next.rank();
  for (const auto& f : next.invariant_factors())
    if (f > 1) h.torsion.push_back(f);
  return h;
}

AbGroupPresentation cohomology_rat(const RatMatrix& d_prev, const RatMatrix& d_next) {
  check_composable(d_prev.rows(), d_prev.cols(), d_next.rows(), d_next.cols());
  if (!(d_next * d_prev).is_zero()) throw NotAComplexError("d_next * d_prev != 0");
  AbGroupPresentation h;
  h.rational_rank = d_prev.rows() - rank(d_prev) - rank(d_next);
  return h;
}

}  // namespace dchar
