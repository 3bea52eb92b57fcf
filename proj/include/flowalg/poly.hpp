#pragma once

#include <cstddef>
#include <vector>

#include "flowalg/exact.hpp"

namespace flowalg {

/// Polynomial in one variable with integer coefficients; trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coefficients);
  static UniPoly monomial(std::size_t degree, Integer coefficient = 1);

  /// Zero polynomial has no coefficients.
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  Integer evaluate(const Integer& t) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Polynomial in x and y; coefficient (i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly constant(Integer c);
  static BiPoly x_power(std::size_t i);
  static BiPoly y_power(std::size_t j);
  static BiPoly monomial(std::size_t i, std::size_t j, Integer c = 1);

  Integer coefficient(std::size_t i, std::size_t j) const;
  /// Rows indexed by the power of x; rows trimmed, trailing empty rows removed.
  const std::vector<std::vector<Integer>>& coefficients() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  long x_degree() const { return static_cast<long>(rows_.size()) - 1; }
  Integer evaluate(const Integer& x, const Integer& y) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void trim();
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace flowalg
