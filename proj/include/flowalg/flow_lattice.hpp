#pragma once

// The lattice of integer flows with the standard inner product on edges.

#include <optional>
#include <vector>

#include "flowalg/exact.hpp"
#include "flowalg/graph.hpp"
#include "flowalg/poly.hpp"
#include "flowalg/qseries.hpp"

namespace flowalg {

struct FlowLattice {
  std::vector<std::size_t> chords;            // edge positions, ascending
  std::vector<std::vector<int>> basis;        // basic flows of the chords
  MatrixZ gram;
  Integer determinant;                        // 1 for the empty basis
};

/// Throws std::logic_error if det(Gram) differs from the number of maximal forests.
FlowLattice lattice(const Graph& g);

struct CharacteristicFlow {
  EdgeId edge = 0;
  bool reversed = false;               // arc runs head -> tail of the stored edge
  std::vector<Rational> values;        // per edge position, value 1 (or -1 if reversed) at edge
  std::vector<Rational> potential;     // per vertex position, 0 at the arc's head
  Rational norm;
};

/// Minimum-norm rational flow taking the value 1 on the arc. Throws
/// DomainError for cut-edges.
CharacteristicFlow characteristic_flow(const Graph& g, EdgeId e, bool reversed = false);

/// chi(c) = nu(head c) - nu(tail c) for every other edge c, and
/// <chi, chi> = 1 + nu(tail of the arc).
bool potential_identities_hold(const Graph& g, const CharacteristicFlow& chi);

struct NormIdentity {
  Rational norm;
  Integer complexity;
  Integer complexity_deleted;
  bool holds = false;
};

/// <chi, chi> against kappa(X) / kappa(X - e).
NormIdentity norm_identity_check(const Graph& g, EdgeId e);

struct CosetSystem {
  std::vector<std::size_t> chords;                  // e_1..e_d as edge positions
  std::vector<std::vector<Rational>> chi;           // chi_i, zero-extended to X
  std::vector<Integer> index;                       // r_i
  std::vector<std::vector<Integer>> phi;            // r_i chi_i
  std::vector<Integer> weight;                      // <phi_i, phi_i>
  std::vector<std::vector<Integer>> representatives;  // edge vectors of sum g_i beta_i, 0 <= g_i < r_i
  bool orthogonal = false;
  bool weight_identity = false;                     // prod w_i = kappa (prod r_i)^2
};

CosetSystem coset_system(const Graph& g);

/// Theta series as a sum over coset representatives of products of psi series.
/// Throws std::logic_error if a non-integer exponent survives.
QSeries theta_product(const Graph& g, const Integer& max_norm);
QSeries theta_product(const Graph& g, const CosetSystem& system, const Integer& max_norm);

/// Theta series by enumerating lattice vectors of norm <= max_norm.
QSeries theta_enumerate(const Graph& g, const Integer& max_norm, Exec exec = Exec::Parallel);

Integer flows_of_norm(const Graph& g, const Integer& s);

struct CodichromaticReport {
  bool tutte_equal = false;
  QSeries theta_first;
  QSeries theta_second;
  std::optional<Integer> first_difference;  // least exponent where the series differ
};

CodichromaticReport codichromatic_compare(const Graph& g1, const Graph& g2, const Integer& max_norm);

}  // namespace flowalg
