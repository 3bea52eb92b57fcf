#pragma once

// Small graphs used by the tests, the CLI and the benchmarks.

#include <cstddef>

#include "flowalg/graph.hpp"

namespace flowalg::named {

/// n vertices, n edges i -> i+1 (mod n). cycle(1) is a loop, cycle(2) a double edge.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// Two vertices joined by k parallel edges.
Graph bond(std::size_t k);
Graph single_vertex();
Graph loop();
/// K4 with one edge doubled: 4 vertices, 7 edges.
Graph doubled_k4();
/// Gray's codichromatic pair: equal Tutte polynomials, different flow lattices.
Graph gray_left();
Graph gray_right();

}  // namespace flowalg::named
