#pragma once

// Exact integer and rational matrix algebra. Nothing in here touches floating
// point; every entry is an arbitrary-precision integer or a reduced rational.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extrainv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised when an operation needs an invertible matrix and gets a singular one.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix over an exact ring. Zero-row matrices are allowed so
/// that "no constraints" can still carry a column count.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix entry count " + std::to_string(data_.size()) +
                                  " does not match shape " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  /// Builds a rows.size() x cols matrix whose i-th row is rows[i].
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] const std::vector<T>& entries() const noexcept { return data_; }

  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Smith decomposition U * A * V = D with U, V unimodular.
struct LatticeSNF {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, min(rows, cols) entries.
  [[nodiscard]] IntVector diagonal() const;
  /// Number of nonzero diagonal entries.
  [[nodiscard]] std::size_t rank() const;
};

/// Smith normal form of a nonempty integer matrix. The diagonal is nonnegative
/// and each nonzero entry divides the next one.
LatticeSNF snf(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// True iff det(a) is +1 or -1. Throws std::invalid_argument for non-square input.
bool is_unimodular(const IntMatrix& a);

/// Exact inverse; throws SingularMatrixError when det = 0.
RatMatrix rational_inverse(const RatMatrix& a);

/// Columns w_j with <v_i, w_j> = delta_ij, i.e. W = (V^T)^{-1}. Unimodularity of
/// V makes W integral. Throws std::invalid_argument if V is not unimodular.
IntMatrix dual_basis(const IntMatrix& v);

/// Basis (as columns) of {x in Z^d : pairings * x in Z^r, annihilated * x = 0},
/// where d is the shared column count. The basis is saturated and returned in
/// column Hermite normal form.
IntMatrix constraint_lattice(const RatMatrix& pairings, const RatMatrix& annihilated);

/// Saturated basis (columns) of the integer kernel {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Column-style Hermite normal form of a full-column-rank basis: lower
/// echelon, positive pivots, entries left of each pivot reduced into [0, pivot).
IntMatrix hermite_columns(const IntMatrix& basis);

RatMatrix to_rational(const IntMatrix& a);
/// Throws std::domain_error if an entry is not an integer.
IntMatrix to_integer(const RatMatrix& a);

/// Least common multiple of the denominators of v (1 for an empty vector).
Integer denominator_lcm(const RatVector& v);

/// Floor division and matching nonnegative remainder for b > 0.
std::pair<Integer, Integer> floor_divmod(const Integer& a, const Integer& b);

Rational dot(const RatVector& a, const RatVector& b);
bool is_integer(const Rational& r);

}  // namespace extrainv
