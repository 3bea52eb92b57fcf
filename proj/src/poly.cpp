#include "flowalg/poly.hpp"

#include <algorithm>
#include <utility>

namespace flowalg {

UniPoly::UniPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::monomial(std::size_t degree, Integer coefficient) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coefficient);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer UniPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

BiPoly BiPoly::constant(Integer c) { return monomial(0, 0, std::move(c)); }
BiPoly BiPoly::x_power(std::size_t i) { return monomial(i, 0); }
BiPoly BiPoly::y_power(std::size_t j) { return monomial(0, j); }

BiPoly BiPoly::monomial(std::size_t i, std::size_t j, Integer c) {
  BiPoly p;
  p.rows_.assign(i + 1, {});
  p.rows_[i].assign(j + 1, Integer(0));
  p.rows_[i][j] = std::move(c);
  p.trim();
  return p;
}

void BiPoly::trim() {
  for (auto& row : rows_)
    while (!row.empty() && sgn(row.back()) == 0) row.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Integer BiPoly::coefficient(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= rows_[i].size()) return 0;
  return rows_[i][j];
}

Integer BiPoly::evaluate(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Integer inner = 0;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * y + *jt;
    acc = acc * x + inner;
  }
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly c;
  c.rows_.resize(std::max(a.rows_.size(), b.rows_.size()));
  for (std::size_t i = 0; i < c.rows_.size(); ++i) {
    const std::size_t len = std::max(i < a.rows_.size() ? a.rows_[i].size() : 0,
                                     i < b.rows_.size() ? b.rows_[i].size() : 0);
    c.rows_[i].assign(len, Integer(0));
    for (std::size_t j = 0; j < len; ++j) c.rows_[i][j] = a.coefficient(i, j) + b.coefficient(i, j);
  }
  c.trim();
  return c;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly c;
  if (a.is_zero() || b.is_zero()) return c;
  c.rows_.resize(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    for (std::size_t k = 0; k < b.rows_.size(); ++k) {
      auto& out = c.rows_[i + k];
      const auto& ra = a.rows_[i];
      const auto& rb = b.rows_[k];
      if (ra.empty() || rb.empty()) continue;
      if (out.size() < ra.size() + rb.size() - 1) out.resize(ra.size() + rb.size() - 1);
      for (std::size_t j = 0; j < ra.size(); ++j)
        for (std::size_t l = 0; l < rb.size(); ++l) out[j + l] += ra[j] * rb[l];
    }
  }
  c.trim();
  return c;
}

}  // namespace flowalg
