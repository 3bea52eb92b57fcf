#include "flowalg/tutte.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace flowalg {

namespace {

// Working multigraph for the recursion: vertices 0..n-1, edges kept in
// ascending original id so "lowest id" is simply the first qualifying edge.
struct Multigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Multigraph from_graph(const Graph& g) {
  Multigraph mg;
  mg.n = g.vertex_count();
  for (const Edge& e : g.edges()) mg.edges.emplace_back(g.vertex_index(e.tail), g.vertex_index(e.head));
  return mg;
}

struct Dsu {
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> p;
};

// Bridges by low-link over the edge-indexed adjacency (parallel edges safe).
std::vector<bool> bridges(const Multigraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) continue;
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  std::vector<bool> is_bridge(g.edges.size(), false);
  std::vector<long> disc(g.n, -1), low(g.n, 0);
  long clock = 0;
  struct Frame {
    std::size_t v, via, next;
  };
  for (std::size_t root = 0; root < g.n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, SIZE_MAX, 0}};
    disc[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.via) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > disc[parent.v]) is_bridge[done.via] = true;
      }
    }
  }
  return is_bridge;
}

Multigraph contract_pair(const Multigraph& g, std::size_t edge) {
  auto [a, b] = g.edges[edge];
  const std::size_t keep = std::min(a, b), drop = std::max(a, b);
  auto image = [&](std::size_t v) {
    if (v == drop) v = keep;
    return v > drop ? v - 1 : v;
  };
  Multigraph out;
  out.n = g.n - 1;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != edge) out.edges.emplace_back(image(g.edges[i].first), image(g.edges[i].second));
  return out;
}

// Key: vertex count plus the edge list after a deterministic relabelling by
// refined degree colour. Equal keys describe the same labelled graph, so a
// memo hit is always an isomorphic graph regardless of how good the
// relabelling is.
using Key = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;

Key memo_key(const Multigraph& g) {
  std::vector<std::size_t> colour(g.n, 0);
  std::vector<std::vector<std::size_t>> nbrs(g.n);
  for (auto [u, v] : g.edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (std::size_t round = 0; round < g.n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      sig[v].first = colour[v];
      for (std::size_t w : nbrs[v]) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(g.n);
    for (std::size_t v = 0; v < g.n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                         sorted.begin());
    const bool stable = next == colour;
    colour = std::move(next);
    if (stable) break;
  }
  std::vector<std::size_t> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<std::size_t> label(g.n);
  for (std::size_t i = 0; i < g.n; ++i) label[order[i]] = i;
  Key key{g.n, {}};
  for (auto [u, v] : g.edges) key.second.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
  std::sort(key.second.begin(), key.second.end());
  return key;
}

class DeletionContraction {
 public:
  BiPoly run(const Multigraph& g) {
    // Peel loops (factor y) and bridges (factor x, contract).
    Multigraph cur = g;
    std::size_t loops = 0, cut = 0;
    while (true) {
      bool changed = false;
      for (std::size_t i = 0; i < cur.edges.size();) {
        if (cur.edges[i].first == cur.edges[i].second) {
          cur.edges.erase(cur.edges.begin() + static_cast<long>(i));
          ++loops;
          changed = true;
        } else {
          ++i;
        }
      }
      const auto br = bridges(cur);
      auto it = std::find(br.begin(), br.end(), true);
      if (it != br.end()) {
        cur = contract_pair(cur, static_cast<std::size_t>(it - br.begin()));
        ++cut;
        changed = true;
      }
      if (!changed) break;
    }
    BiPoly factor = BiPoly::monomial(cut, loops);
    if (cur.edges.empty()) return factor;
    return factor * split_components(cur);
  }

 private:
  BiPoly split_components(const Multigraph& g) {
    Dsu dsu(g.n);
    for (auto [u, v] : g.edges) dsu.unite(u, v);
    std::map<std::size_t, Multigraph> parts;
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < g.n; ++v) members[dsu.find(v)].push_back(v);
    for (auto [u, v] : g.edges) {
      const auto& mem = members[dsu.find(u)];
      auto pos = [&](std::size_t x) {
        return static_cast<std::size_t>(std::lower_bound(mem.begin(), mem.end(), x) - mem.begin());
      };
      Multigraph& part = parts[dsu.find(u)];
      part.n = mem.size();
      part.edges.emplace_back(pos(u), pos(v));
    }
    BiPoly result = BiPoly::constant(1);
    for (auto& [root, part] : parts) result = result * memoised(part);
    return result;
  }

  // g is connected, loopless and bridgeless with at least one edge.
  BiPoly memoised(const Multigraph& g) {
    Key key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Multigraph deleted = g;
    deleted.edges.erase(deleted.edges.begin());
    BiPoly value = run(deleted) + run(contract_pair(g, 0));
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::map<Key, BiPoly> memo_;
};

BiPoly expand_counts(const std::vector<std::vector<std::int64_t>>& counts) {
  // sum c[a][b] (x-1)^a (y-1)^b
  BiPoly result;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (std::size_t b = 0; b < counts[a].size(); ++b) {
      if (counts[a][b] == 0) continue;
      for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b; ++j) {
          Integer c = binomial(static_cast<long>(a), static_cast<long>(i)) *
                      binomial(static_cast<long>(b), static_cast<long>(j)) * Integer(counts[a][b]);
          if ((a - i + b - j) % 2 == 1) c = -c;
          result = result + BiPoly::monomial(i, j, c);
        }
    }
  }
  return result;
}

}  // namespace

std::size_t graph_rank(const Graph& g) { return g.vertex_count() - components(g).count; }

BiPoly tutte(const Graph& g) {
  DeletionContraction dc;
  return dc.run(from_graph(g));
}

BiPoly tutte_corank_nullity(const Graph& g, Exec exec) {
  require_subset_capacity(g.edge_count(), "tutte_corank_nullity");
  const Multigraph mg = from_graph(g);
  const std::size_t m = mg.edges.size();
  const std::size_t full_rank = graph_rank(g);
  const std::uint64_t total = std::uint64_t{1} << m;

  auto count_range = [&](std::uint64_t begin, std::uint64_t end,
                         std::vector<std::vector<std::int64_t>>& counts) {
    for (std::uint64_t s = begin; s < end; ++s) {
      Dsu dsu(mg.n);
      std::size_t r = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((s >> i) & 1U) r += dsu.unite(mg.edges[i].first, mg.edges[i].second) ? 1 : 0;
      const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(s));
      ++counts[full_rank - r][size - r];
    }
  };

  auto blank = [&] {
    return std::vector<std::vector<std::int64_t>>(full_rank + 1, std::vector<std::int64_t>(m + 1, 0));
  };
  auto counts = blank();
  if (exec == Exec::Serial) {
    count_range(0, total, counts);
  } else {
    const int threads = max_threads();
    std::vector<std::vector<std::vector<std::int64_t>>> partial(static_cast<std::size_t>(threads), blank());
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
      const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
      count_range(lo, hi, partial[static_cast<std::size_t>(t)]);
    }
    for (const auto& p : partial)
      for (std::size_t a = 0; a < counts.size(); ++a)
        for (std::size_t b = 0; b < counts[a].size(); ++b) counts[a][b] += p[a][b];
  }
  return expand_counts(counts);
}

UniPoly poincare_from_tutte(const BiPoly& t, std::size_t rank) {
  // Each x^i y^j becomes t^(rank - i) (1 + t)^j.
  std::vector<Integer> coeffs;
  const auto& rows = t.coefficients();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (sgn(rows[i][j]) == 0) continue;
      if (i > rank) throw std::logic_error("poincare: negative power of t");
      const std::size_t shift = rank - i;
      if (coeffs.size() < shift + j + 1) coeffs.resize(shift + j + 1);
      for (std::size_t k = 0; k <= j; ++k)
        coeffs[shift + k] += rows[i][j] * binomial(static_cast<long>(j), static_cast<long>(k));
    }
  }
  if (coeffs.empty()) coeffs.push_back(0);
  for (const auto& c : coeffs)
    if (sgn(c) < 0) throw std::logic_error("poincare: negative coefficient");
  return UniPoly(std::move(coeffs));
}

UniPoly poincare(const Graph& g) { return poincare_from_tutte(tutte(g), graph_rank(g)); }

Integer complexity(const Graph& g) { return tutte(g).evaluate(1, 1); }

Integer count_maximal_forests(const Graph& g) {
  require_subset_capacity(g.edge_count(), "count_maximal_forests");
  const Multigraph mg = from_graph(g);
  const std::size_t want = graph_rank(g);
  const std::uint64_t total = std::uint64_t{1} << mg.edges.size();
  Integer count = 0;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != want) continue;
    Dsu dsu(mg.n);
    bool acyclic = true;
    for (std::size_t i = 0; i < mg.edges.size() && acyclic; ++i)
      if ((s >> i) & 1U) acyclic = dsu.unite(mg.edges[i].first, mg.edges[i].second);
    if (acyclic) count += 1;
  }
  return count;
}

}  // namespace flowalg
