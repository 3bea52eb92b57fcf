#pragma once

#include <map>

#include "flowalg/exact.hpp"

namespace flowalg {

/// Truncated q-series with nonnegative rational exponents. Terms with
/// exponent above the bound are never stored, nor are zero coefficients.
class QSeries {
 public:
  explicit QSeries(Integer bound) : bound_(std::move(bound)) {}
  static QSeries one(const Integer& bound);

  const Integer& bound() const { return bound_; }
  const std::map<Rational, Integer>& terms() const { return terms_; }
  Integer coefficient(const Rational& exponent) const;

  /// Ignores exponents above the bound; drops the term if it cancels to zero.
  void add_term(const Rational& exponent, const Integer& coefficient);

  bool has_integer_exponents() const;
  QSeries& operator+=(const QSeries& other);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  Integer bound_;
  std::map<Rational, Integer> terms_;
};

/// psi(alpha | w z) = sum over n in Z of q^{w (n + alpha)^2}, exponents <= bound.
QSeries psi_series(const Rational& alpha, const Integer& weight, const Integer& bound);

}  // namespace flowalg
