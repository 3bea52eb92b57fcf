#include "flowalg/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

namespace flowalg {

namespace {

// int64 arithmetic that throws instead of wrapping; eliminations run on this
// first and restart on GMP integers when it throws.
struct Overflow {};

class CheckedInt {
 public:
  CheckedInt(std::int64_t v = 0) : v_(v) {}  // NOLINT(google-explicit-constructor)
  std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
      throw Overflow{};
    return a.v_ / b.v_;
  }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v_ != b.v_; }

 private:
  std::int64_t v_;
};

bool is_zero(CheckedInt a) { return a.value() == 0; }
bool is_zero(const Integer& a) { return sgn(a) == 0; }

CheckedInt abs_of(CheckedInt a) {
  if (a.value() == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return std::abs(a.value());
}
Integer abs_of(const Integer& a) { return abs(a); }

bool abs_less(CheckedInt a, CheckedInt b) {
  return abs_of(a).value() < abs_of(b).value();
}
bool abs_less(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

bool is_unit(CheckedInt a) { return a.value() == 1 || a.value() == -1; }
bool is_unit(const Integer& a) { return a == 1 || a == -1; }

CheckedInt gcd_of(CheckedInt a, CheckedInt b) {
  return std::gcd(abs_of(a).value(), abs_of(b).value());
}
Integer gcd_of(const Integer& a, const Integer& b) { return gcd(a, b); }

CheckedInt floor_div(CheckedInt a, CheckedInt b) {
  std::int64_t q = (a / b).value();
  if ((a.value() % b.value() != 0) && ((a.value() < 0) != (b.value() < 0))) --q;
  return q;
}
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(CheckedInt d, CheckedInt a) { return a.value() % d.value() == 0; }
bool divides(const Integer& d, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer to_big(CheckedInt a) { return Integer(static_cast<long>(a.value())); }
Integer to_big(const Integer& a) { return a; }

template <class T>
using Rows = std::vector<std::vector<T>>;

template <class T, class Src>
Rows<T> rows_of(const Matrix<Src>& m) {
  Rows<T> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<T> row(m.cols());
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<T, CheckedInt> && std::is_same_v<Src, Integer>) {
        if (!m(r, c).fits_slong_p()) throw Overflow{};
        row[c] = CheckedInt(m(r, c).get_si());
      } else {
        row[c] = T(m(r, c));
      }
      nonzero = nonzero || !is_zero(row[c]);
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
void divide_by_content(std::vector<T>& row, std::size_t from) {
  T g = 0;
  for (std::size_t k = from; k < row.size(); ++k) {
    if (!is_zero(row[k])) g = is_zero(g) ? abs_of(row[k]) : gcd_of(g, row[k]);
    if (is_unit(g)) return;
  }
  if (is_zero(g)) return;
  for (std::size_t k = from; k < row.size(); ++k) row[k] = row[k] / g;
}

// Integer row elimination. Unit pivots are preferred, so the matrices that
// occur here (entries in {-1,0,1}, many unit pivots) stay small.
template <class T>
std::size_t integer_rank(Rows<T> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      if (pivot == rows.size() || abs_less(rows[i][c], rows[pivot][c])) pivot = i;
      if (is_unit(rows[i][c])) break;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::vector<T>& p = rows[rank];
    const T pv = p[c];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      std::vector<T>& row = rows[i];
      if (is_zero(row[c])) continue;
      if (divides(pv, row[c])) {
        const T q = row[c] / pv;
        for (std::size_t k = c; k < cols; ++k)
          if (!is_zero(p[k])) row[k] = row[k] - q * p[k];
      } else {
        const T g = gcd_of(pv, row[c]);
        const T a = pv / g;
        const T b = row[c] / g;
        for (std::size_t k = c; k < cols; ++k) row[k] = a * row[k] - b * p[k];
        divide_by_content(row, c);
      }
    }
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<Integer> snf_factors(Rows<T> a, std::size_t cols) {
  std::vector<Integer> factors;
  const std::size_t rows = a.size();
  std::size_t t = 0;
  auto find_min = [&](std::size_t& pr, std::size_t& pc) {
    bool found = false;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (is_zero(a[i][j])) continue;
        if (!found || abs_less(a[i][j], a[pr][pc])) {
          pr = i;
          pc = j;
          found = true;
          if (is_unit(a[i][j])) return true;
        }
      }
    }
    return found;
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
  };
  while (t < rows && t < cols) {
    std::size_t pr = t, pc = t;
    if (!find_min(pr, pc)) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(a[i][t])) continue;
        const T q = floor_div(a[i][t], a[t][t]);
        for (std::size_t k = t; k < cols; ++k)
          if (!is_zero(a[t][k])) a[i][k] = a[i][k] - q * a[t][k];
        if (!is_zero(a[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(a[t][j])) continue;
        const T q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i)
          if (!is_zero(a[i][t])) a[i][j] = a[i][j] - q * a[i][t];
        if (!is_zero(a[t][j])) clean = false;
      }
      if (!clean) {
        // Move the smallest remaining entry of row/column t onto the diagonal.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!is_zero(a[i][t]) && abs_less(a[i][t], a[br][bc])) br = i, bc = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!is_zero(a[t][j]) && abs_less(a[t][j], a[br][bc])) br = t, bc = j;
        std::swap(a[t], a[br]);
        swap_cols(t, bc);
        continue;
      }
      bool divisible = true;
      if (!is_unit(a[t][t])) {
        for (std::size_t i = t + 1; i < rows && divisible; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (!divides(a[t][t], a[i][j])) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] = a[t][k] + a[i][k];
              divisible = false;
              break;
            }
          }
        }
      }
      if (divisible) break;
    }
    factors.push_back(abs(to_big(a[t][t])));
    ++t;
  }
  return factors;
}

template <class Src>
std::size_t rank_with_fallback(const Matrix<Src>& m) {
  try {
    return integer_rank(rows_of<CheckedInt>(m), m.cols());
  } catch (const Overflow&) {
    return integer_rank(rows_of<Integer>(m), m.cols());
  }
}

template <class Src>
std::vector<Integer> snf_with_fallback(const Matrix<Src>& m) {
  try {
    return snf_factors(rows_of<CheckedInt>(m), m.cols());
  } catch (const Overflow&) {
    return snf_factors(rows_of<Integer>(m), m.cols());
  }
}

MatrixZ clear_denominators(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(MatrixQ& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

MatrixZ to_integer(const MatrixI64& m) {
  MatrixZ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = Integer(static_cast<long>(m(r, c)));
  return out;
}

std::size_t rank(const MatrixI64& m) { return rank_with_fallback(m); }
std::size_t rank(const MatrixZ& m) { return rank_with_fallback(m); }
std::size_t rank(const MatrixQ& m) { return rank(clear_denominators(m)); }

std::vector<Integer> smith_normal_form(const MatrixI64& m) {
  return snf_with_fallback(m);
}
std::vector<Integer> smith_normal_form(const MatrixZ& m) {
  return snf_with_fallback(m);
}

std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m) {
  MatrixQ r = m;
  const std::vector<std::size_t> pivots = rref(r, r.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixZ hermite_normal_form(const MatrixZ& input) {
  std::vector<std::vector<Integer>> a;
  for (std::size_t r = 0; r < input.rows(); ++r)
    a.emplace_back(input.row(r).begin(), input.row(r).end());
  const std::size_t cols = input.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (sgn(a[i][c]) != 0 && (best == a.size() || abs_less(a[i][c], a[best][c])))
          best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        const Integer q = floor_div(a[i][c], a[r][c]);
        for (std::size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
        if (sgn(a[i][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < a.size() && sgn(a[r][c]) != 0) {
      if (sgn(a[r][c]) < 0)
        for (std::size_t k = c; k < cols; ++k) a[r][k] = -a[r][k];
      for (std::size_t i = 0; i < r; ++i) {
        const Integer q = floor_div(a[i][c], a[r][c]);
        if (sgn(q) != 0)
          for (std::size_t k = c; k < cols; ++k) a[i][k] -= q * a[r][k];
      }
      pivot_cols.push_back(c);
      ++r;
    }
  }
  MatrixZ out(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(a[i]);
  return out;
}

MatrixZ integer_kernel_basis(const MatrixZ& m) {
  // Unimodular row reduction of [m^T | I]; rows whose left part vanishes
  // carry a kernel basis on the right.
  const std::size_t n = m.cols();
  const std::size_t left = m.rows();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(left + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < left; ++j) a[i][j] = m(j, i);
    a[i][left + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < left && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (sgn(a[i][c]) != 0 && (best == n || abs_less(a[i][c], a[best][c])))
          best = i;
      if (best == n) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (sgn(a[i][c]) == 0) continue;
        const Integer q = floor_div(a[i][c], a[r][c]);
        for (std::size_t k = c; k < left + n; ++k)
          if (sgn(a[r][k]) != 0) a[i][k] -= q * a[r][k];
        if (sgn(a[i][c]) != 0) clean = false;
      }
      if (clean) {
        ++r;
        break;
      }
    }
  }
  MatrixZ kernel(0, n);
  for (std::size_t i = r; i < n; ++i)
    kernel.append_row(std::span<const Integer>(a[i].data() + left, n));
  return hermite_normal_form(kernel);
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  MatrixQ a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return det;
}

Integer determinant(const MatrixZ& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
  // Bareiss.
  MatrixZ a = m;
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t k = c + 1; k < n; ++k) {
        a(i, k) = (a(c, c) * a(i, k) - a(i, c) * a(c, k));
        mpz_divexact(a(i, k).get_mpz_t(), a(i, k).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(c, c);
  }
  return sign * (n == 0 ? Integer(1) : prev);
}

bool is_positive_definite(const MatrixQ& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    MatrixQ lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    if (sgn(determinant(lead)) <= 0) return false;
  }
  return true;
}

std::vector<Rational> min_norm_point(const MatrixQ& constraints,
                                     std::span<const Rational> rhs) {
  if (rhs.size() != constraints.rows())
    throw InputError("min_norm_point: right-hand side length mismatch");
  const std::size_t n = constraints.cols();
  MatrixQ aug(constraints.rows(), n + 1);
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = constraints(r, c);
    aug(r, n) = rhs[r];
  }
  const std::vector<std::size_t> pivots = rref(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (sgn(aug(r, n)) != 0)
      throw InfeasibleError("min_norm_point: constraints are inconsistent");
  const std::size_t k = pivots.size();
  if (k == 0) return std::vector<Rational>(n);
  // x = R^T y with (R R^T) y = b over the independent rows R.
  MatrixQ normal(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(aug(i, c)) != 0 && sgn(aug(j, c)) != 0) s += aug(i, c) * aug(j, c);
      normal(i, j) = s;
    }
    normal(i, k) = aug(i, n);
  }
  rref(normal, k);
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(aug(i, c)) != 0) x[c] += aug(i, c) * normal(i, k);
  return x;
}

std::vector<Rational> min_norm_affine(const MatrixQ& kernel_constraints,
                                      std::span<const FixedCoordinate> fixed) {
  const std::size_t n = kernel_constraints.cols();
  MatrixQ c(0, n);
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < kernel_constraints.rows(); ++r) {
    c.append_row(kernel_constraints.row(r));
    rhs.emplace_back(0);
  }
  std::vector<Rational> unit(n);
  for (const FixedCoordinate& f : fixed) {
    if (f.index >= n) throw InputError("min_norm_affine: coordinate out of range");
    unit[f.index] = 1;
    c.append_row(unit);
    unit[f.index] = 0;
    rhs.push_back(f.value);
  }
  if (c.rows() == 0) return std::vector<Rational>(n);
  return min_norm_point(c, rhs);
}

namespace {

struct NormEnumerator {
  std::size_t dim;
  std::vector<Rational> diag;           // D_i of G = L D L^T
  std::vector<std::vector<Rational>> lower;  // L_{ji}, j > i, stored lower[j][i]
  Rational bound;

  // Integers x with D (x + center)^2 <= remaining, ascending.
  std::vector<std::int64_t> candidates(const Rational& center, const Rational& remaining,
                                       const Rational& d) const {
    std::vector<std::int64_t> out;
    if (sgn(remaining) < 0) return out;
    const Rational target = -center;
    // Nearest integer to -center minimises (x + center)^2.
    Integer nearest;
    {
      Rational shifted = target + Rational(1, 2);
      mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    }
    auto fits = [&](const Integer& x) {
      Rational diff = Rational(x) + center;
      return d * diff * diff <= remaining;
    };
    if (!fits(nearest)) return out;
    Integer lo = nearest, hi = nearest;
    while (fits(lo - 1)) lo -= 1;
    while (fits(hi + 1)) hi += 1;
    for (Integer x = lo; x <= hi; x += 1) out.push_back(x.get_si());
    return out;
  }

  void walk(std::size_t level_plus_one, IntVector& v, const Rational& used,
            std::vector<IntVector>& out) const {
    if (level_plus_one == 0) {
      out.push_back(v);
      return;
    }
    const std::size_t i = level_plus_one - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < dim; ++j)
      if (v[j] != 0) center += lower[j][i] * static_cast<long>(v[j]);
    for (std::int64_t x : candidates(center, bound - used, diag[i])) {
      v[i] = x;
      Rational diff = Rational(static_cast<long>(x)) + center;
      walk(i, v, used + diag[i] * diff * diff, out);
    }
    v[i] = 0;
  }
};

}  // namespace

std::vector<IntVector> enumerate_by_norm(const MatrixQ& gram, const Integer& bound,
                                         Exec exec) {
  if (!is_positive_definite(gram))
    throw InputError("enumerate_by_norm: Gram matrix is not symmetric positive definite");
  const std::size_t d = gram.rows();
  if (sgn(bound) < 0) return {};
  NormEnumerator en;
  en.dim = d;
  en.bound = Rational(bound);
  en.diag.assign(d, 0);
  en.lower.assign(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    Rational s = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= en.lower[j][k] * en.lower[j][k] * en.diag[k];
    en.diag[j] = s;
    for (std::size_t i = j + 1; i < d; ++i) {
      Rational t = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= en.lower[i][k] * en.lower[j][k] * en.diag[k];
      en.lower[i][j] = t / en.diag[j];
    }
  }
  std::vector<IntVector> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  // Split on the last coordinate; each branch is independent.
  const std::size_t top = d - 1;
  const std::vector<std::int64_t> heads = en.candidates(0, en.bound, en.diag[top]);
  std::vector<std::vector<IntVector>> parts(heads.size());
  auto branch = [&](std::size_t h) {
    IntVector v(d, 0);
    v[top] = heads[h];
    Rational x(static_cast<long>(heads[h]));
    en.walk(top, v, en.diag[top] * x * x, parts[h]);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t h = 0; h < heads.size(); ++h) branch(h);
  } else {
    for (std::size_t h = 0; h < heads.size(); ++h) branch(h);
  }
  for (auto& part : parts)
    for (auto& v : part) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Integer denominator_lcm(std::span<const Rational> v) {
  Integer l = 1;
  for (const Rational& x : v) l = lcm(l, x.get_den());
  return l;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace flowalg
