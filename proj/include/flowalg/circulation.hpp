#pragma once

// Functionals on edge subsets with values in Q, Z or F_p, multiplied by
// subset convolution, plus the dimension and inequality checks that sit on
// top of that product.

#include <cstddef>
#include <string>
#include <vector>

#include "flowalg/exact.hpp"
#include "flowalg/exec.hpp"
#include "flowalg/graph.hpp"

namespace flowalg {

class Ring {
 public:
  enum class Kind { Rationals, Integers, PrimeField };

  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers() { return Ring(Kind::Integers, 0); }
  /// Throws InputError unless p is a prime no larger than 97.
  static Ring prime_field(unsigned p);

  Kind kind() const { return kind_; }
  unsigned characteristic() const { return p_; }
  std::string name() const;

  /// Canonical representative: any rational over Q, integers over Z
  /// (DomainError otherwise), residues 0..p-1 over F_p.
  Rational normalize(const Rational& value) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, unsigned p) : kind_(kind), p_(p) {}
  Kind kind_;
  unsigned p_;
};

/// Dense table indexed by edge-subset bit mask.
class Circulation {
 public:
  /// The zero functional on subsets of m edges (m <= 20).
  Circulation(Ring ring, std::size_t edge_count);

  static Circulation unit(Ring ring, std::size_t edge_count);
  /// Degree-1 functional with the given value on each edge position.
  static Circulation from_edge_values(Ring ring, const std::vector<Rational>& values);
  static Circulation from_edge_values(Ring ring, const std::vector<int>& values);

  const Ring& ring() const { return ring_; }
  std::size_t edge_count() const { return m_; }
  const std::vector<Rational>& table() const { return table_; }

  const Rational& operator[](EdgeSubset s) const { return table_[s.bits()]; }
  void set(EdgeSubset s, const Rational& value);

  bool is_zero() const;
  /// Zero outside subsets of size `degree`.
  bool is_homogeneous(std::size_t degree) const;
  Circulation component(std::size_t degree) const;
  /// Values on the degree-j subsets in ascending bit-mask order.
  std::vector<Rational> slice(std::size_t degree) const;
  std::size_t support_size() const;

  friend Circulation operator+(const Circulation& a, const Circulation& b);
  friend bool operator==(const Circulation&, const Circulation&) = default;

 private:
  Ring ring_;
  std::size_t m_;
  std::vector<Rational> table_;
};

/// (a b)(s) = sum over t in s of a(t) b(s \ t). Throws InputError on ring or
/// size mismatch.
Circulation multiply(const Circulation& a, const Circulation& b, Exec exec = Exec::Parallel);

/// exp(phi)(s) = sum over set partitions of s of the product of phi over the
/// blocks. Requires phi(empty) = 0 (DomainError otherwise).
Circulation exponential(const Circulation& phi);

/// Degree-j part of exp(phi) for degree-1 phi: the product of phi over s.
Circulation divided_power(const Circulation& phi, std::size_t j);

/// Greatest n with phi^n != 0 (ordinary powers) for degree-1 phi; 0 for phi = 0.
std::size_t nilpotence(const Circulation& phi);

/// phi kills every relation row of every degree (evaluated in phi's ring).
bool annihilates_relations(const Graph& g, const Circulation& phi);

/// Rank over Q, per degree, of the monomials in basic flows with each chord
/// exponent bounded by the size of that chord's fundamental cycle.
std::vector<std::size_t> monomial_dimensions(const Graph& g, Exec exec = Exec::Parallel);

/// Macaulay pseudopower; psi_j(0) = 0. Requires j >= 1.
Integer pseudopower(const Integer& a, std::size_t j);

struct MembershipReport {
  bool full_family = false;             // every cycle-supported {-1,0,1} flow was used
  std::size_t generators = 0;           // flows theta examined
  std::size_t vanishing_checks = 0;     // (theta, r) pairs evaluated
  std::size_t failures = 0;
  Integer dimension_sum;                // sum of monomial dimensions
  Integer poincare_at_one;              // D_X(1) from the Tutte route
  bool passed() const { return failures == 0 && dimension_sum == poincare_at_one; }
};

/// Pushes the divided powers P_theta^{<1+r>}, #supp(theta) <= r <= m, of
/// cycle-supported {-1,0,1} flows through x^{<j>} -> beta^{<j>} and checks
/// they vanish. Uses every such flow when there are at most 10 chords and
/// the fundamental cycles with their pairwise sums and differences otherwise.
MembershipReport relation_membership_check(const Graph& g);

struct InjectivityEntry {
  std::size_t degree;
  std::size_t rank;
  std::size_t expected;
};

/// For phi = sum 3^i beta_{e_i} over the chords, rank of theta -> theta phi^{<m-l-2j>}
/// on the integer circulations of degree j, for 0 <= j <= (m - l) / 2.
std::vector<InjectivityEntry> multiplication_injectivity(const Graph& g);

struct Check {
  std::string name;
  bool passed = true;
  bool exploratory = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  /// Exploratory checks never count as failures.
  bool passed() const;
};

/// Structural identities and inequalities satisfied by the d_j (taken from
/// the Tutte route); log-concavity is recorded as exploratory.
CheckReport verify_inequalities(const Graph& g);

}  // namespace flowalg
