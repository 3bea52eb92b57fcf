#pragma once

// Exact integer and rational linear algebra. Nothing in here touches
// floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flowalg/errors.hpp"
#include "flowalg/exec.hpp"

namespace flowalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InputError("append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixZ = Matrix<Integer>;
using MatrixI64 = Matrix<std::int64_t>;

template <class From>
MatrixQ to_rational(const Matrix<From>& m) {
  MatrixQ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

MatrixZ to_integer(const MatrixI64& m);

/// Rank over the rationals by fraction-free integer elimination.
std::size_t rank(const MatrixI64& m);
std::size_t rank(const MatrixZ& m);
std::size_t rank(const MatrixQ& m);

/// Right null space basis over Q from the reduced row echelon form; one
/// vector per free column, with a 1 in that column.
std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m);

/// Nonzero invariant factors d_1 | d_2 | ... (all positive). Their count is
/// the rank.
std::vector<Integer> smith_normal_form(const MatrixI64& m);
std::vector<Integer> smith_normal_form(const MatrixZ& m);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows
/// dropped, pivots positive, entries above each pivot reduced into [0, pivot).
MatrixZ hermite_normal_form(const MatrixZ& rows);

/// Basis (as rows, in Hermite normal form) of {x in Z^cols : m x = 0}.
MatrixZ integer_kernel_basis(const MatrixZ& m);

Rational determinant(const MatrixQ& m);
Integer determinant(const MatrixZ& m);

/// Symmetric with all leading principal minors positive.
bool is_positive_definite(const MatrixQ& gram);

/// Unique minimum-norm solution of C x = b. Throws InfeasibleError when
/// the system is inconsistent.
std::vector<Rational> min_norm_point(const MatrixQ& constraints,
                                     std::span<const Rational> rhs);

struct FixedCoordinate {
  std::size_t index;
  Rational value;
};

/// Minimum-norm point of {x : M x = 0, x_i = v_i for each fixed (i, v)}.
std::vector<Rational> min_norm_affine(const MatrixQ& kernel_constraints,
                                      std::span<const FixedCoordinate> fixed);

using IntVector = std::vector<std::int64_t>;

/// Every integer vector v with v^T G v <= bound, lexicographically sorted.
/// Throws InputError if G is not symmetric positive definite.
std::vector<IntVector> enumerate_by_norm(const MatrixQ& gram,
                                         const Integer& bound,
                                         Exec exec = Exec::Parallel);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Least r > 0 with r * v integral.
Integer denominator_lcm(std::span<const Rational> v);

Integer binomial(long n, long k);

}  // namespace flowalg
