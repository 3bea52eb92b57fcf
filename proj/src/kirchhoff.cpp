#include "flowalg/kirchhoff.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "flowalg/subsets.hpp"

namespace flowalg {

namespace {

// Vertex classes of (V, sigma) as positions; each class is represented by
// its least position, which also carries the least vertex id.
std::vector<std::size_t> classes(const Graph& g, std::uint64_t sigma) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!((sigma >> i) & 1U)) continue;
    std::size_t a = find(g.vertex_index(g.edges()[i].tail));
    std::size_t b = find(g.vertex_index(g.edges()[i].head));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> rep(g.vertex_count());
  for (std::size_t v = 0; v < rep.size(); ++v) rep[v] = find(v);
  return rep;
}

}  // namespace

std::vector<EdgeSubset> graded_basis(const Graph& g, std::size_t j) {
  require_subset_capacity(g.edge_count(), "graded_basis");
  std::vector<EdgeSubset> out;
  for (std::uint64_t s : subsets_of_size(g.edge_count(), j)) out.emplace_back(s);
  return out;
}

RelationMatrix relation_matrix(const Graph& g, std::size_t j) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "relation_matrix");
  if (j > m) throw InputError("relation_matrix: degree exceeds edge count");
  RelationMatrix out;
  out.degree = j;
  const std::size_t cols = small_binomial(m, j);
  if (j == 0) {
    out.matrix = MatrixI64(0, 1);
    return out;
  }
  const auto sources = subsets_of_size(m, j - 1);
  std::size_t row_count = 0;
  std::vector<std::vector<std::size_t>> reps(sources.size());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    reps[s] = classes(g, sources[s]);
    for (std::size_t v = 0; v < reps[s].size(); ++v) row_count += reps[s][v] == v ? 1 : 0;
  }
  out.matrix = MatrixI64(row_count, cols);
  out.rows.reserve(row_count);
  std::size_t row = 0;
  std::vector<std::size_t> row_of(g.vertex_count());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const std::uint64_t sigma = sources[s];
    const auto& rep = reps[s];
    for (std::size_t v = 0; v < rep.size(); ++v) {
      if (rep[v] != v) continue;
      row_of[v] = row++;
      out.rows.push_back({EdgeSubset(sigma), g.vertices()[v]});
    }
    for (std::size_t e = 0; e < m; ++e) {
      if ((sigma >> e) & 1U) continue;
      const std::size_t t = rep[g.vertex_index(g.edges()[e].tail)];
      const std::size_t h = rep[g.vertex_index(g.edges()[e].head)];
      if (t == h) continue;
      const std::size_t col = colex_rank(sigma | (std::uint64_t{1} << e));
      out.matrix(row_of[h], col) += 1;
      out.matrix(row_of[t], col) -= 1;
    }
  }
  return out;
}

std::vector<std::size_t> rank_sequence(const Graph& g, Exec exec) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "rank_sequence");
  std::vector<std::size_t> d(m + 1);
  const long degrees = static_cast<long>(m + 1);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
  for (long j = 0; j < degrees; ++j) {
    const auto r = relation_matrix(g, static_cast<std::size_t>(j));
    d[static_cast<std::size_t>(j)] = small_binomial(m, static_cast<std::size_t>(j)) - rank(r.matrix);
  }
  return d;
}

bool torsion_check(const Graph& g, std::size_t j) {
  for (const Integer& f : smith_normal_form(relation_matrix(g, j).matrix))
    if (f != 1) return false;
  return true;
}

MatrixZ integral_circulations(const Graph& g, std::size_t j) {
  return integer_kernel_basis(to_integer(relation_matrix(g, j).matrix));
}

std::vector<Integer> lattice_coordinates(const MatrixZ& basis, const std::vector<Integer>& v) {
  if (v.size() != basis.cols()) throw InputError("lattice_coordinates: width mismatch");
  std::vector<Integer> residual = v;
  std::vector<Integer> coords(basis.rows());
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    std::size_t p = 0;
    while (p < basis.cols() && sgn(basis(k, p)) == 0) ++p;
    if (p == basis.cols()) throw std::logic_error("lattice_coordinates: zero basis row");
    if (sgn(residual[p]) == 0) continue;
    if (!mpz_divisible_p(residual[p].get_mpz_t(), basis(k, p).get_mpz_t()))
      throw std::logic_error("lattice_coordinates: vector not in lattice");
    coords[k] = residual[p] / basis(k, p);
    for (std::size_t c = p; c < basis.cols(); ++c) residual[c] -= coords[k] * basis(k, c);
  }
  for (const Integer& r : residual)
    if (sgn(r) != 0) throw std::logic_error("lattice_coordinates: vector not in lattice");
  return coords;
}

GroupStructure product_torsion(const Graph& g, std::size_t i, std::size_t j) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "product_torsion");
  const std::size_t top = m - cut_edge_count(g);
  if (top < 2) return {};
  if (i < 1 || j < 1 || i + j > top)
    throw DomainError("product_torsion: need i, j >= 1 and i + j <= " + std::to_string(top));

  const MatrixZ bi = integral_circulations(g, i);
  const MatrixZ bj = integral_circulations(g, j);
  const MatrixZ bij = integral_circulations(g, i + j);
  MatrixZ coords;
  for (std::size_t a = 0; a < bi.rows(); ++a) {
    const std::vector<Integer> left(bi.row(a).begin(), bi.row(a).end());
    for (std::size_t b = 0; b < bj.rows(); ++b) {
      const std::vector<Integer> right(bj.row(b).begin(), bj.row(b).end());
      const auto product = homogeneous_product(m, i, left, j, right, Exec::Serial);
      const auto c = lattice_coordinates(bij, product);
      coords.append_row(c);
    }
  }
  GroupStructure out;
  const auto factors = smith_normal_form(coords);
  for (const Integer& f : factors)
    if (f != 1) out.torsion.push_back(f);
  out.free_rank = bij.rows() - factors.size();
  return out;
}

}  // namespace flowalg
