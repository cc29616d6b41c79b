#pragma once

// Exact integer and rational linear algebra over GMP.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dchar {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a sequence of maps handed in as a complex has d∘d ≠ 0.
class NotAComplexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A mathematical obstruction in otherwise well-formed input (exit status 1
/// in the command-line tool).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) out[i] += a(i, k) * x[k];
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

// Vector helpers.
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);
bool is_zero(const RatVec& v);
bool is_integral(const Rat& x);
bool is_integral(const RatVec& v);
/// Largest integer not exceeding x.
Int floor(const Rat& x);
/// Nearest integer; exact half-integers round up.
Int nearest_int(const Rat& x);
/// Representative of x mod ℤ in [0, 1).
Rat frac(const Rat& x);
RatVec to_rat(const IntVec& v);
RatMatrix to_rat(const IntMatrix& m);
/// Throws DimensionError if any entry is non-integral.
IntMatrix to_int(const RatMatrix& m);
IntVec to_int(const RatVec& v);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);
RatMatrix select_columns(const RatMatrix& m, const std::vector<std::size_t>& cols);

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const;
  /// Non-zero diagonal entries of S, in order.
  IntVec invariant_factors() const;
};

/// U·M·V = S with U, V unimodular and S diagonal with a divisibility chain.
/// Pivots are the smallest-magnitude remaining entry, ties to lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Columns form a ℤ-basis of {x ∈ ℤ^n : M x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Rational elimination

struct RowEchelon {
  RatMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  RatMatrix transform;                 // transform · input = reduced
};

RowEchelon row_echelon(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
/// Columns form a basis of the right null space.
RatMatrix kernel_basis(const RatMatrix& a);
/// Rows form a basis of the left null space {y : y·A = 0}.
RatMatrix left_kernel_basis(const RatMatrix& a);
/// Columns of `a` that form a basis of its column space.
RatMatrix column_space_basis(const RatMatrix& a);

/// Reusable solver for A x = b over ℚ.
class RationalSolver {
 public:
  explicit RationalSolver(const RatMatrix& a);
  std::optional<RatVec> solve(const RatVec& b) const;
  std::size_t rank() const { return echelon_.pivot_cols.size(); }
  /// Rows spanning the left null space of A.
  RatMatrix left_kernel() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  RowEchelon echelon_;
};

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

// ---------------------------------------------------------------------------
// Mixed ℤ/ℚ systems

/// Decides A x = v where some unknowns must be integers and the rest are
/// rational. Precomputes the elimination so many right-hand sides are cheap.
class MixedSystem {
 public:
  MixedSystem(const RatMatrix& coeffs, std::vector<bool> integral_unknowns);

  /// Returns a full solution vector (integral entries at integral unknowns),
  /// or nullopt when no solution exists. The answer is exact.
  std::optional<RatVec> solve(const RatVec& rhs) const;

  std::size_t unknowns() const { return integral_.size(); }
  std::size_t equations() const { return coeffs_.rows(); }

 private:
  RatMatrix coeffs_;
  std::vector<bool> integral_;
  std::vector<std::size_t> int_cols_;
  std::vector<std::size_t> rat_cols_;
  RowEchelon rat_echelon_;   // of the rational block
  RatMatrix annihilator_;    // rows killing the rational block
  std::vector<Rat> row_scale_;
  SmithDecomposition snf_;
};

struct MixedSolution {
  IntVec integral;
  RatVec rational;
};

/// Solves A·x_ℤ + B·x_ℚ = v exactly.
std::optional<MixedSolution> solve_mixed(const IntMatrix& a, const RatMatrix& b,
                                         const RatVec& v);

// ---------------------------------------------------------------------------
// Abelian group presentations

/// ℤ^free ⊕ ℤ/t₁ ⊕ … ⊕ ℚ^rational ⊕ (ℚ/ℤ)^divisible, with t₁ | t₂ | ….
struct AbGroupPresentation {
  std::size_t free_rank = 0;
  IntVec torsion;
  std::size_t divisible_rank = 0;
  std::size_t rational_rank = 0;

  bool is_trivial() const;
  /// Canonical text, e.g. "Z^2 + Z/2 + (Q/Z)^1"; the trivial group is "0".
  std::string to_string() const;
  bool operator==(const AbGroupPresentation& o) const;
};

/// Direct sum, re-normalising torsion into invariant factors.
AbGroupPresentation direct_sum(const AbGroupPresentation& a,
                               const AbGroupPresentation& b);
/// Invariant-factor form of ⊕ ℤ/nᵢ (entries ≤ 1 are dropped).
IntVec normalize_torsion(const IntVec& orders);

/// H^n = ker(d_next) / im(d_prev) over ℤ, via two Smith normal forms.
AbGroupPresentation cohomology_int(const IntMatrix& d_prev, const IntMatrix& d_next);

/// H^n with ℚ/ℤ coefficients by universal coefficients: the free part of
/// H^n(ℤ) becomes divisible and the torsion of H^{n+1}(ℤ) moves down.
AbGroupPresentation cohomology_qz(const IntMatrix& d_prev, const IntMatrix& d_next);

/// H^n over ℚ; only rational_rank is populated.
AbGroupPresentation cohomology_rat(const RatMatrix& d_prev, const RatMatrix& d_next);

}  // namespace dchar
