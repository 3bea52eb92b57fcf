#pragma once

// Finite multigraphs with a reference orientation. Each edge is stored as
// (id, tail, head); the ordered pair is the reference arc, and an arc that
// agrees with it has sign +1.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "flowalg/errors.hpp"

namespace flowalg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Subset of a graph's edges as a bit mask over edge positions (ascending id).
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t position) const { return (bits_ >> position) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
  constexpr EdgeSubset with(std::size_t position) const {
    return EdgeSubset(bits_ | (std::uint64_t{1} << position));
  }
  constexpr EdgeSubset without(std::size_t position) const {
    return EdgeSubset(bits_ & ~(std::uint64_t{1} << position));
  }
  friend constexpr EdgeSubset operator|(EdgeSubset a, EdgeSubset b) {
    return EdgeSubset(a.bits_ | b.bits_);
  }
  friend constexpr EdgeSubset operator&(EdgeSubset a, EdgeSubset b) {
    return EdgeSubset(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

class Graph {
 public:
  Graph() = default;
  /// Validates endpoints and id uniqueness; sorts vertices and edges by id.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertices 1..n, edges given as (tail, head) pairs numbered 1..m.
  static Graph from_pairs(std::size_t vertex_count,
                          std::initializer_list<std::pair<VertexId, VertexId>> pairs);
  static Graph from_pairs(std::size_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& pairs);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  /// Position of a vertex in vertices(); throws InputError when unknown.
  std::size_t vertex_index(VertexId v) const;
  /// Position of an edge in edges(); throws InputError when unknown.
  std::size_t edge_index(EdgeId e) const;
  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  EdgeSubset all_edges() const;
  /// Mask for the given ids; throws InputError on unknown ids, CapacityError beyond 64 edges.
  EdgeSubset subset(std::initializer_list<EdgeId> ids) const;
  EdgeSubset subset(const std::vector<EdgeId>& ids) const;
  std::vector<EdgeId> ids(EdgeSubset s) const;

  /// Same graph with the stored direction of every edge in `s` reversed.
  Graph with_flipped(EdgeSubset s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

struct ContractionImage {
  Graph graph;
  std::map<VertexId, VertexId> vertex_map;
};

/// X_sigma: vertices are the classes of (V, sigma), named by their least
/// original id; the remaining edges keep their ids and orientation.
ContractionImage contract(const Graph& g, EdgeSubset sigma);
Graph delete_edges(const Graph& g, EdgeSubset sigma);
Graph contract_edge(const Graph& g, EdgeId e);
Graph delete_edge(const Graph& g, EdgeId e);

struct Components {
  std::size_t count = 0;
  std::vector<std::vector<VertexId>> parts;  // each sorted, ordered by least vertex
};
Components components(const Graph& g);

/// Component label (0..count-1, by least vertex) per vertex position.
std::vector<std::size_t> component_labels(const Graph& g);

bool is_cut_edge(const Graph& g, EdgeId e);
std::size_t cut_edge_count(const Graph& g);

/// Greedy spanning forest over ascending edge id.
EdgeSubset maximal_forest(const Graph& g);

/// Signed indicator of the fundamental cycle of `chord`, +1 on the chord,
/// indexed by edge position.
std::vector<int> basic_flow(const Graph& g, EdgeSubset forest, EdgeId chord);

/// Maximal forest together with the basic flow of every chord, chords in
/// ascending edge id.
struct FundamentalSystem {
  EdgeSubset forest;
  std::vector<std::size_t> chords;       // edge positions
  std::vector<std::vector<int>> flows;   // flows[i] belongs to chords[i]
};
FundamentalSystem fundamental_system(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Coefficients of Kirchhoff's law at v: [head(e) = v] - [tail(e) = v].
std::vector<int> incidence_row(const Graph& g, VertexId v);

/// Disjoint union after shifting the second graph's ids past the first's;
/// if `glue` is set, vertex glue->second of `b` is identified with glue->first of `a`.
Graph join(const Graph& a, const Graph& b,
           std::optional<std::pair<VertexId, VertexId>> glue = std::nullopt);

/// Adds a parallel copy of edge `e` (same tail and head) with id `new_id`.
Graph double_edge(const Graph& g, EdgeId e, EdgeId new_id);

}  // namespace flowalg
