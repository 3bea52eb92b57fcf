#pragma once

// Kirchhoff relations on contractions. Degree-j chains are integer vectors
// indexed by the j-element edge subsets in ascending bit-mask order; the
// relation R(X_s, v) for an (j-1)-subset s and a vertex v of X_s has entry
// [head(e) = v] - [tail(e) = v] (computed in X_s) at the column s + {e}.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowalg/exact.hpp"
#include "flowalg/exec.hpp"
#include "flowalg/graph.hpp"

namespace flowalg {

/// j-element subsets, ascending bit mask; length C(m, j).
std::vector<EdgeSubset> graded_basis(const Graph& g, std::size_t j);

struct RelationRow {
  EdgeSubset sigma;
  VertexId vertex;
};

struct RelationMatrix {
  std::size_t degree = 0;
  std::vector<RelationRow> rows;  // row labels, sigma ascending then vertex id
  MatrixI64 matrix;               // rows.size() x C(m, degree)
};

/// Degree 0 has no relations (0 x 1).
RelationMatrix relation_matrix(const Graph& g, std::size_t j);

/// d_j = C(m, j) - rank of the degree-j relations, for j = 0..m.
std::vector<std::size_t> rank_sequence(const Graph& g, Exec exec = Exec::Parallel);

/// Every nonzero invariant factor of the degree-j relations equals 1.
bool torsion_check(const Graph& g, std::size_t j);

/// Integer kernel of the degree-j relations, one basis vector per row, in
/// Hermite normal form.
MatrixZ integral_circulations(const Graph& g, std::size_t j);

struct GroupStructure {
  std::vector<Integer> torsion;  // invariant factors above 1
  std::size_t free_rank = 0;
};

/// Phi_{i+j}(X, Z) modulo the products of Phi_i(X, Z) and Phi_j(X, Z).
/// Throws DomainError unless i, j >= 1 and i + j <= m - (number of cut-edges);
/// returns the trivial group when no pair of degrees qualifies at all.
GroupStructure product_torsion(const Graph& g, std::size_t i, std::size_t j);

/// Coordinates of an integer vector in a Hermite-form basis (rows); throws
/// std::logic_error if the vector is outside the lattice.
std::vector<Integer> lattice_coordinates(const MatrixZ& hermite_basis,
                                         const std::vector<Integer>& v);

}  // namespace flowalg
