#include "flowalg/qseries.hpp"

namespace flowalg {

QSeries QSeries::one(const Integer& bound) {
  QSeries s(bound);
  s.add_term(0, 1);
  return s;
}

Integer QSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QSeries::add_term(const Rational& exponent, const Integer& coefficient) {
  if (sgn(coefficient) == 0 || exponent > Rational(bound_)) return;
  if (sgn(exponent) < 0) throw InputError("QSeries: negative exponent");
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool QSeries::has_integer_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e.get_den() != 1) return false;
  return true;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(a.bound_ < b.bound_ ? a.bound_ : b.bound_);
  const Rational limit(out.bound_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Rational e = ea + eb;
      if (e > limit) break;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

QSeries psi_series(const Rational& alpha, const Integer& weight, const Integer& bound) {
  if (sgn(weight) <= 0) throw InputError("psi_series: weight must be positive");
  QSeries s(bound);
  if (sgn(bound) < 0) return s;
  const Rational w(weight);
  const Rational limit(bound);
  auto exponent = [&](const Integer& n) -> Rational {
    Rational t = Rational(n) + alpha;
    return w * t * t;
  };
  // Start from the integer nearest to -alpha and walk outwards.
  Rational shifted = Rational(1, 2) - alpha;
  Integer start;
  mpz_fdiv_q(start.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  for (Integer n = start; exponent(n) <= limit; n += 1) s.add_term(exponent(n), 1);
  for (Integer n = start - 1; exponent(n) <= limit; n -= 1) s.add_term(exponent(n), 1);
  return s;
}

}  // namespace flowalg
