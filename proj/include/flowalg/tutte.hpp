#pragma once

#include "flowalg/exec.hpp"
#include "flowalg/graph.hpp"
#include "flowalg/poly.hpp"

namespace flowalg {

/// Deletion-contraction with loops and bridges peeled off first and
/// memoisation per call. Disconnected graphs multiply over components.
BiPoly tutte(const Graph& g);

/// Corank-nullity expansion over all 2^m edge subsets (independent oracle).
BiPoly tutte_corank_nullity(const Graph& g, Exec exec = Exec::Parallel);

/// t^rank * T(1/t, 1 + t); throws std::logic_error if a negative power or a
/// negative coefficient survives.
UniPoly poincare_from_tutte(const BiPoly& t, std::size_t rank);
UniPoly poincare(const Graph& g);

/// Number of maximal forests, as T(1, 1).
Integer complexity(const Graph& g);

/// Number of maximal forests by checking every (n - k)-subset of edges.
Integer count_maximal_forests(const Graph& g);

/// n - k.
std::size_t graph_rank(const Graph& g);

}  // namespace flowalg
