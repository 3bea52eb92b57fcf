#include "flowalg/named_graphs.hpp"

#include <utility>
#include <vector>

namespace flowalg::named {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

Graph cycle(std::size_t n) {
  Pairs p;
  for (std::size_t i = 1; i <= n; ++i) p.emplace_back(i, i % n + 1);
  return Graph::from_pairs(n, p);
}

Graph complete(std::size_t n) {
  Pairs p;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return Graph::from_pairs(n, p);
}

Graph path(std::size_t n) {
  Pairs p;
  for (std::size_t i = 1; i < n; ++i) p.emplace_back(i, i + 1);
  return Graph::from_pairs(n, p);
}

Graph bond(std::size_t k) { return Graph::from_pairs(2, Pairs(k, {1, 2})); }

Graph single_vertex() { return Graph::from_pairs(1, {}); }

Graph loop() { return Graph::from_pairs(1, {{1, 1}}); }

Graph doubled_k4() {
  return Graph::from_pairs(4, {{1, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

Graph gray_left() {
  return Graph::from_pairs(6, {{1, 4}, {1, 2}, {5, 2}, {5, 4}, {1, 3},
                               {4, 3}, {3, 5}, {5, 6}, {4, 6}, {4, 6}});
}

Graph gray_right() {
  return Graph::from_pairs(6, {{1, 4}, {1, 2}, {5, 4}, {5, 2}, {1, 3},
                               {3, 2}, {4, 6}, {5, 6}, {4, 3}, {4, 3}});
}

}  // namespace flowalg::named
