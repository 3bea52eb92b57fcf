#include "flowalg/flow_lattice.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "flowalg/tutte.hpp"

namespace flowalg {

namespace {

MatrixQ incidence(const Graph& g) {
  MatrixQ m(g.vertex_count(), g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto row = incidence_row(g, g.vertices()[v]);
    for (std::size_t e = 0; e < row.size(); ++e) m(v, e) = row[e];
  }
  return m;
}

Rational norm_of(const std::vector<Rational>& v) { return dot(v, v); }

template <class A, class B>
Rational inner(const std::vector<A>& a, const std::vector<B>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

std::vector<std::vector<long>> gram_of(const FundamentalSystem& fs) {
  const std::size_t d = fs.flows.size();
  std::vector<std::vector<long>> gram(d, std::vector<long>(d, 0));
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t e = 0; e < fs.flows[h].size(); ++e) gram[h][k] += fs.flows[h][e] * fs.flows[k][e];
  return gram;
}

}  // namespace

FlowLattice lattice(const Graph& g) {
  const FundamentalSystem fs = fundamental_system(g);
  FlowLattice out;
  out.chords = fs.chords;
  out.basis = fs.flows;
  const std::size_t d = fs.flows.size();
  const auto gram = gram_of(fs);
  out.gram = MatrixZ(d, d);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t k = 0; k < d; ++k) out.gram(h, k) = gram[h][k];
  out.determinant = d == 0 ? Integer(1) : determinant(out.gram);
  if (out.determinant != complexity(g))
    throw std::logic_error("flow lattice determinant differs from the number of maximal forests");
  return out;
}

CharacteristicFlow characteristic_flow(const Graph& g, EdgeId e, bool reversed) {
  const std::size_t pos = g.edge_index(e);
  if (is_cut_edge(g, e))
    throw DomainError("edge " + std::to_string(e) +
                      " is a cut-edge: every flow vanishes on it, so no flow takes the value 1 there");
  CharacteristicFlow cf;
  cf.edge = e;
  cf.reversed = reversed;
  const std::vector<FixedCoordinate> fixed{{pos, Rational(reversed ? -1 : 1)}};
  cf.values = min_norm_affine(incidence(g), fixed);
  cf.norm = norm_of(cf.values);

  // Integrate chi along a spanning forest of X - e from the arc's head.
  const Edge& edge = g.edges()[pos];
  const VertexId head = reversed ? edge.tail : edge.head;
  const Graph rest = delete_edge(g, e);
  const EdgeSubset forest = maximal_forest(rest);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
  for (std::size_t i = 0; i < rest.edge_count(); ++i) {
    if (!forest.contains(i)) continue;
    const Edge& f = rest.edges()[i];
    const std::size_t t = g.vertex_index(f.tail), h = g.vertex_index(f.head);
    const std::size_t original = g.edge_index(f.id);
    adj[t].emplace_back(h, original);
    adj[h].emplace_back(t, original);
  }
  cf.potential.assign(g.vertex_count(), Rational(0));
  std::vector<bool> seen(g.vertex_count(), false);
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    seen[u] = true;
    for (auto [w, idx] : adj[u]) {
      if (seen[w]) continue;
      const Edge& f = g.edges()[idx];
      // chi(f) = nu(head f) - nu(tail f)
      if (g.vertex_index(f.head) == w)
        cf.potential[w] = cf.potential[u] + cf.values[idx];
      else
        cf.potential[w] = cf.potential[u] - cf.values[idx];
      visit(w);
    }
  };
  visit(g.vertex_index(head));
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) visit(v);
  return cf;
}

bool potential_identities_hold(const Graph& g, const CharacteristicFlow& chi) {
  const std::size_t pos = g.edge_index(chi.edge);
  const Edge& edge = g.edges()[pos];
  const VertexId head = chi.reversed ? edge.tail : edge.head;
  const VertexId tail = chi.reversed ? edge.head : edge.tail;
  if (sgn(chi.potential[g.vertex_index(head)]) != 0) return false;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == pos) continue;
    const Edge& c = g.edges()[i];
    if (chi.values[i] != chi.potential[g.vertex_index(c.head)] - chi.potential[g.vertex_index(c.tail)])
      return false;
  }
  return chi.norm == 1 + chi.potential[g.vertex_index(tail)];
}

NormIdentity norm_identity_check(const Graph& g, EdgeId e) {
  NormIdentity out;
  out.norm = characteristic_flow(g, e).norm;
  out.complexity = complexity(g);
  out.complexity_deleted = complexity(delete_edge(g, e));
  Rational ratio(out.complexity, out.complexity_deleted);
  ratio.canonicalize();
  out.holds = out.norm == ratio;
  return out;
}

CosetSystem coset_system(const Graph& g) {
  const FundamentalSystem fs = fundamental_system(g);
  const std::size_t m = g.edge_count();
  CosetSystem cs;
  cs.chords = fs.chords;
  Graph current = g;
  for (std::size_t i = 0; i < fs.chords.size(); ++i) {
    const EdgeId id = g.edges()[fs.chords[i]].id;
    const CharacteristicFlow local = characteristic_flow(current, id);
    std::vector<Rational> chi(m, Rational(0));
    for (std::size_t k = 0; k < current.edge_count(); ++k) chi[g.edge_index(current.edges()[k].id)] = local.values[k];
    const Integer r = denominator_lcm(chi);
    std::vector<Integer> phi(m);
    for (std::size_t k = 0; k < m; ++k) {
      const Rational scaled = chi[k] * Rational(r);
      phi[k] = scaled.get_num();
    }
    Integer w = 0;
    for (const auto& x : phi) w += x * x;
    cs.chi.push_back(std::move(chi));
    cs.index.push_back(r);
    cs.phi.push_back(std::move(phi));
    cs.weight.push_back(w);
    current = delete_edge(current, id);
  }

  // Representatives sum g_i beta_i with 0 <= g_i < r_i, odometer order.
  std::vector<Integer> counter(fs.chords.size(), 0);
  while (true) {
    std::vector<Integer> v(m, 0);
    for (std::size_t i = 0; i < counter.size(); ++i)
      for (std::size_t e = 0; e < m; ++e) v[e] += counter[i] * fs.flows[i][e];
    cs.representatives.push_back(std::move(v));
    std::size_t i = 0;
    while (i < counter.size()) {
      counter[i] += 1;
      if (counter[i] < cs.index[i]) break;
      counter[i] = 0;
      ++i;
    }
    if (i == counter.size()) break;
  }

  cs.orthogonal = true;
  for (std::size_t h = 0; h < cs.phi.size(); ++h)
    for (std::size_t k = h + 1; k < cs.phi.size(); ++k)
      if (sgn(inner(cs.phi[h], cs.phi[k])) != 0) cs.orthogonal = false;
  Integer weights = 1, indices = 1;
  for (std::size_t i = 0; i < cs.weight.size(); ++i) {
    weights *= cs.weight[i];
    indices *= cs.index[i];
  }
  cs.weight_identity = weights == complexity(g) * indices * indices;
  return cs;
}

QSeries theta_product(const Graph& g, const Integer& max_norm) {
  return theta_product(g, coset_system(g), max_norm);
}

QSeries theta_product(const Graph&, const CosetSystem& cs, const Integer& max_norm) {
  QSeries total(max_norm);
  for (const auto& lambda : cs.representatives) {
    QSeries term = QSeries::one(max_norm);
    for (std::size_t i = 0; i < cs.phi.size() && !term.terms().empty(); ++i) {
      const Rational alpha = inner(lambda, cs.phi[i]) / Rational(cs.weight[i]);
      term = term * psi_series(alpha, cs.weight[i], max_norm);
    }
    total += term;
  }
  if (!total.has_integer_exponents()) throw std::logic_error("theta_product: fractional exponent survived");
  return total;
}

QSeries theta_enumerate(const Graph& g, const Integer& max_norm, Exec exec) {
  QSeries out(max_norm);
  const FundamentalSystem fs = fundamental_system(g);
  if (fs.flows.empty()) {
    if (sgn(max_norm) >= 0) out.add_term(0, 1);
    return out;
  }
  const auto gram = gram_of(fs);
  const std::size_t d = gram.size();
  MatrixQ q(d, d);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t k = 0; k < d; ++k) q(h, k) = gram[h][k];
  // Coordinates of vectors within the norm bound are small, so long suffices.
  std::map<long, long> histogram;
  for (const IntVector& v : enumerate_by_norm(q, max_norm, exec)) {
    long norm = 0;
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t k = 0; k < d; ++k) norm += static_cast<long>(v[h]) * gram[h][k] * static_cast<long>(v[k]);
    ++histogram[norm];
  }
  for (auto [norm, count] : histogram) out.add_term(Rational(norm), count);
  return out;
}

Integer flows_of_norm(const Graph& g, const Integer& s) {
  return theta_enumerate(g, s).coefficient(Rational(s));
}

CodichromaticReport codichromatic_compare(const Graph& g1, const Graph& g2, const Integer& max_norm) {
  CodichromaticReport out{tutte(g1) == tutte(g2), theta_enumerate(g1, max_norm),
                          theta_enumerate(g2, max_norm), std::nullopt};
  for (Integer s = 0; s <= max_norm; ++s) {
    if (out.theta_first.coefficient(Rational(s)) != out.theta_second.coefficient(Rational(s))) {
      out.first_difference = s;
      break;
    }
  }
  return out;
}

}  // namespace flowalg
