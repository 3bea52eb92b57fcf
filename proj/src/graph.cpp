#include "flowalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace flowalg {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Keep the smaller index as root so roots name the least vertex.
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

// Adjacency as (neighbour position, edge position) pairs.
using Adjacency = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

Adjacency adjacency(const Graph& g, EdgeSubset skip = EdgeSubset()) {
  Adjacency adj(g.vertex_count());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (skip.contains(i) || edges[i].is_loop()) continue;
    const std::size_t t = g.vertex_index(edges[i].tail);
    const std::size_t h = g.vertex_index(edges[i].head);
    adj[t].emplace_back(h, i);
    adj[h].emplace_back(t, i);
  }
  return adj;
}

// BFS distances from `source`; -1 where unreachable.
std::vector<long> distances(const Adjacency& adj, std::size_t source) {
  std::vector<long> dist(adj.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto [w, e] : adj[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("duplicate vertex id");
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0 && edges_[i].id == edges_[i - 1].id)
      throw InputError("duplicate edge id " + std::to_string(edges_[i].id));
    if (!has_vertex(edges_[i].tail) || !has_vertex(edges_[i].head))
      throw InputError("edge " + std::to_string(edges_[i].id) + " has an unknown endpoint");
  }
}

Graph Graph::from_pairs(std::size_t vertex_count,
                        std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  return from_pairs(vertex_count, std::vector<std::pair<VertexId, VertexId>>(pairs));
}

Graph Graph::from_pairs(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<VertexId> vertices(vertex_count);
  std::iota(vertices.begin(), vertices.end(), VertexId{1});
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  EdgeId id = 1;
  for (auto [t, h] : pairs) edges.push_back({id++, t, h});
  return Graph(std::move(vertices), std::move(edges));
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

std::size_t Graph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) throw InputError("unknown edge " + std::to_string(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeSubset Graph::all_edges() const {
  if (edges_.size() > 64) throw CapacityError("edge subsets are limited to 64 edges");
  return EdgeSubset(edges_.size() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << edges_.size()) - 1);
}

EdgeSubset Graph::subset(std::initializer_list<EdgeId> ids) const {
  return subset(std::vector<EdgeId>(ids));
}

EdgeSubset Graph::subset(const std::vector<EdgeId>& ids) const {
  if (edges_.size() > 64) throw CapacityError("edge subsets are limited to 64 edges");
  EdgeSubset s;
  for (EdgeId e : ids) s = s.with(edge_index(e));
  return s;
}

std::vector<EdgeId> Graph::ids(EdgeSubset s) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (s.contains(i)) out.push_back(edges_[i].id);
  return out;
}

Graph Graph::with_flipped(EdgeSubset s) const {
  Graph g = *this;
  for (std::size_t i = 0; i < g.edges_.size(); ++i)
    if (s.contains(i)) std::swap(g.edges_[i].tail, g.edges_[i].head);
  return g;
}

ContractionImage contract(const Graph& g, EdgeSubset sigma) {
  if (sigma.bits() != 0 && (sigma.bits() & ~g.all_edges().bits()) != 0)
    throw InputError("contract: subset refers to edges outside the graph");
  const auto& edges = g.edges();
  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (sigma.contains(i)) sets.unite(g.vertex_index(edges[i].tail), g.vertex_index(edges[i].head));

  ContractionImage image;
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId rep = g.vertices()[sets.find(i)];
    image.vertex_map.emplace(g.vertices()[i], rep);
    if (sets.find(i) == i) vertices.push_back(rep);
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (sigma.contains(i)) continue;
    kept.push_back({edges[i].id, image.vertex_map.at(edges[i].tail),
                    image.vertex_map.at(edges[i].head)});
  }
  image.graph = Graph(std::move(vertices), std::move(kept));
  return image;
}

Graph delete_edges(const Graph& g, EdgeSubset sigma) {
  if (sigma.bits() != 0 && (sigma.bits() & ~g.all_edges().bits()) != 0)
    throw InputError("delete: subset refers to edges outside the graph");
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!sigma.contains(i)) kept.push_back(g.edges()[i]);
  return Graph(g.vertices(), std::move(kept));
}

Graph contract_edge(const Graph& g, EdgeId e) {
  return contract(g, EdgeSubset().with(g.edge_index(e))).graph;
}

Graph delete_edge(const Graph& g, EdgeId e) {
  return delete_edges(g, EdgeSubset().with(g.edge_index(e)));
}

std::vector<std::size_t> component_labels(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(g.vertex_index(e.tail), g.vertex_index(e.head));
  std::vector<std::size_t> label(g.vertex_count());
  std::vector<std::size_t> root_label(g.vertex_count(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t r = sets.find(i);
    if (root_label[r] == SIZE_MAX) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

Components components(const Graph& g) {
  const auto label = component_labels(g);
  Components c;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] >= c.parts.size()) c.parts.resize(label[i] + 1);
    c.parts[label[i]].push_back(g.vertices()[i]);
  }
  c.count = c.parts.size();
  return c;
}

bool is_cut_edge(const Graph& g, EdgeId e) {
  const std::size_t pos = g.edge_index(e);
  const Edge& edge = g.edges()[pos];
  if (edge.is_loop()) return false;
  const auto dist = distances(adjacency(g, EdgeSubset().with(pos)), g.vertex_index(edge.tail));
  return dist[g.vertex_index(edge.head)] < 0;
}

std::size_t cut_edge_count(const Graph& g) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += is_cut_edge(g, e.id) ? 1 : 0;
  return count;
}

EdgeSubset maximal_forest(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  EdgeSubset forest;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (sets.unite(g.vertex_index(e.tail), g.vertex_index(e.head))) forest = forest.with(i);
  }
  return forest;
}

std::vector<int> basic_flow(const Graph& g, EdgeSubset forest, EdgeId chord) {
  const std::size_t c = g.edge_index(chord);
  if (forest.contains(c)) throw InputError("basic_flow: chord lies in the forest");
  if ((forest.bits() & ~g.all_edges().bits()) != 0)
    throw InputError("basic_flow: forest refers to edges outside the graph");

  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!forest.contains(i)) continue;
    const Edge& e = g.edges()[i];
    if (!sets.unite(g.vertex_index(e.tail), g.vertex_index(e.head)))
      throw InputError("basic_flow: forest contains a cycle");
  }
  const auto label = component_labels(g);
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
      if (label[i] == label[j] && sets.find(i) != sets.find(j))
        throw InputError("basic_flow: forest is not maximal");

  std::vector<int> flow(g.edge_count(), 0);
  flow[c] = 1;
  const Edge& ce = g.edges()[c];
  if (ce.is_loop()) return flow;

  // The unit flow crosses the chord tail -> head and returns along the forest
  // path head -> tail.
  const Adjacency adj = adjacency(g, EdgeSubset(~forest.bits()));
  const std::size_t start = g.vertex_index(ce.head);
  const std::size_t goal = g.vertex_index(ce.tail);
  std::vector<std::pair<std::size_t, std::size_t>> came_from(g.vertex_count(), {SIZE_MAX, SIZE_MAX});
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto [w, e] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      came_from[w] = {u, e};
      queue.push_back(w);
    }
  }
  for (std::size_t v = goal; v != start; v = came_from[v].first) {
    const auto [u, e] = came_from[v];
    const Edge& fe = g.edges()[e];
    flow[e] = g.vertex_index(fe.head) == v && g.vertex_index(fe.tail) == u ? 1 : -1;
  }
  return flow;
}

FundamentalSystem fundamental_system(const Graph& g) {
  FundamentalSystem fs;
  fs.forest = maximal_forest(g);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (fs.forest.contains(i)) continue;
    fs.chords.push_back(i);
    fs.flows.push_back(basic_flow(g, fs.forest, g.edges()[i].id));
  }
  return fs;
}

std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) return 1;
    const auto dist = distances(adjacency(g, EdgeSubset().with(i)), g.vertex_index(e.tail));
    const long d = dist[g.vertex_index(e.head)];
    if (d < 0) continue;
    const std::size_t len = static_cast<std::size_t>(d) + 1;
    if (!best || len < *best) best = len;
  }
  return best;
}

std::vector<int> incidence_row(const Graph& g, VertexId v) {
  g.vertex_index(v);
  std::vector<int> row(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    row[i] = (e.head == v ? 1 : 0) - (e.tail == v ? 1 : 0);
  }
  return row;
}

Graph join(const Graph& a, const Graph& b, std::optional<std::pair<VertexId, VertexId>> glue) {
  const VertexId vshift = a.vertices().empty() ? 0 : a.vertices().back();
  const EdgeId eshift = a.edges().empty() ? 0 : a.edges().back().id;
  if (glue) {
    a.vertex_index(glue->first);
    b.vertex_index(glue->second);
  }
  auto image = [&](VertexId v) {
    return glue && v == glue->second ? glue->first : v + vshift;
  };
  std::vector<VertexId> vertices = a.vertices();
  for (VertexId v : b.vertices())
    if (!glue || v != glue->second) vertices.push_back(image(v));
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.id + eshift, image(e.tail), image(e.head)});
  return Graph(std::move(vertices), std::move(edges));
}

Graph double_edge(const Graph& g, EdgeId e, EdgeId new_id) {
  const Edge& original = g.edge(e);
  std::vector<Edge> edges = g.edges();
  edges.push_back({new_id, original.tail, original.head});
  return Graph(g.vertices(), std::move(edges));
}

}  // namespace flowalg
