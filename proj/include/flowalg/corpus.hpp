#pragma once

// Exhaustive corpus of small connected multigraphs and the per-graph
// cross-check pipeline run over it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flowalg/exec.hpp"
#include "flowalg/graph.hpp"

namespace flowalg::corpus {

/// Vertices 0..n-1; undirected edges (a <= b), sorted.
struct CanonicalForm {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Color refinement, then the least relabelled edge list over all orderings
/// inside each color class. Equal forms iff the underlying undirected
/// multigraphs are isomorphic.
CanonicalForm canonical_form(const Graph& g);
/// Least relabelled edge list over all n! vertex orderings.
CanonicalForm brute_canonical_form(const Graph& g);

/// Vertices 1..n, edges 1..m oriented from the smaller to the larger label.
Graph to_graph(const CanonicalForm& form);

/// One representative per isomorphism class of connected multigraphs (loops
/// and parallel edges allowed) with at most max_edges edges, ordered by edge
/// count and then by canonical form. Includes the single vertex.
std::vector<Graph> connected_multigraphs(std::size_t max_edges);

struct Options {
  std::size_t max_edges = 7;
  long max_norm = 12;
  std::size_t flip_trials = 50;
  std::uint32_t seed = 20240101;
  Exec exec = Exec::Parallel;
};

struct Tally {
  std::string name;
  bool exploratory = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // first few failing graphs
};

struct Report {
  std::size_t graphs = 0;
  std::vector<Tally> tallies;
  /// Exploratory tallies never count.
  bool passed() const;
  const Tally& tally(const std::string& name) const;
};

/// Names of the tallies produced by run, in report order.
const std::vector<std::string>& check_names();

/// Runs every cross-check on one graph and adds the outcomes to `tallies`
/// (indexed like check_names()).
void check_graph(const Graph& g, const Options& options, std::uint32_t seed, std::vector<Tally>& tallies);

Report run(const Options& options);
Report run(const std::vector<Graph>& graphs, const Options& options);

std::string describe(const Graph& g);

}  // namespace flowalg::corpus
