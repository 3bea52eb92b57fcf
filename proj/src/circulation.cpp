#include "flowalg/circulation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flowalg/kirchhoff.hpp"
#include "flowalg/poly.hpp"
#include "flowalg/subsets.hpp"
#include "flowalg/tutte.hpp"

namespace flowalg {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t popcount(std::uint64_t s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }

void require_same(const Circulation& a, const Circulation& b, const char* what) {
  if (!(a.ring() == b.ring())) throw InputError(std::string(what) + ": ring mismatch");
  if (a.edge_count() != b.edge_count()) throw InputError(std::string(what) + ": size mismatch");
}

void require_degree_one(const Circulation& phi, const char* what) {
  if (!phi.is_homogeneous(1))
    throw InputError(std::string(what) + ": expected a homogeneous degree-1 functional");
}

// Edge value tables for the monomial computations. beta_c^{<p>}(s) is the
// product of beta_c over s, so it vanishes unless s lies in the cycle.
using Table = std::vector<std::int64_t>;

Table divided_power_table(std::size_t m, const std::vector<int>& flow, std::size_t p) {
  const auto subsets = subsets_of_size(m, p);
  Table out(subsets.size(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::int64_t v = 1;
    for (std::uint64_t s = subsets[i]; s && v; s &= s - 1) v *= flow[static_cast<std::size_t>(__builtin_ctzll(s))];
    out[i] = v;
  }
  return out;
}

std::size_t support(const std::vector<int>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

bool all_zero(const Table& t) {
  return std::all_of(t.begin(), t.end(), [](std::int64_t x) { return x == 0; });
}

// Support of a {-1,0,1} vector is a single cycle: connected, every vertex of
// the support has degree two (a loop counts twice).
bool supported_on_cycle(const Graph& g, const std::vector<int>& values) {
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    edges.push_back(i);
    degree[g.vertex_index(g.edges()[i].tail)] += 1;
    degree[g.vertex_index(g.edges()[i].head)] += 1;
  }
  if (edges.empty()) return false;
  for (std::size_t d : degree)
    if (d != 0 && d != 2) return false;
  std::vector<Edge> kept;
  for (std::size_t e : edges) kept.push_back(g.edges()[e]);
  std::vector<VertexId> touched;
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] != 0) touched.push_back(g.vertices()[v]);
  return components(Graph(touched, kept)).count == 1;
}

std::string join_numbers(const std::vector<Integer>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  return out.str();
}

}  // namespace

Ring Ring::prime_field(unsigned p) {
  if (p > 97 || !is_prime(p)) throw InputError("prime field needs a prime p <= 97");
  return Ring(Kind::PrimeField, p);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Rational Ring::normalize(const Rational& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (value.get_den() != 1) throw DomainError("non-integral value in a Z-circulation");
      return value;
    case Kind::PrimeField: {
      const Integer p(p_);
      Integer num = value.get_num() % p;
      Integer den = value.get_den() % p;
      if (den == 0) throw DomainError("denominator divisible by the characteristic");
      Integer inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      Integer r = (num * inv) % p;
      if (r < 0) r += p;
      return Rational(r);
    }
  }
  return value;
}

Circulation::Circulation(Ring ring, std::size_t edge_count) : ring_(ring), m_(edge_count) {
  require_subset_capacity(edge_count, "Circulation");
  table_.assign(std::size_t{1} << edge_count, Rational(0));
}

Circulation Circulation::unit(Ring ring, std::size_t edge_count) {
  Circulation c(ring, edge_count);
  c.table_[0] = 1;
  return c;
}

Circulation Circulation::from_edge_values(Ring ring, const std::vector<Rational>& values) {
  Circulation c(ring, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) c.set(EdgeSubset().with(i), values[i]);
  return c;
}

Circulation Circulation::from_edge_values(Ring ring, const std::vector<int>& values) {
  return from_edge_values(ring, std::vector<Rational>(values.begin(), values.end()));
}

void Circulation::set(EdgeSubset s, const Rational& value) {
  if (s.bits() >= table_.size()) throw InputError("Circulation::set: subset out of range");
  table_[s.bits()] = ring_.normalize(value);
}

bool Circulation::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Circulation::is_homogeneous(std::size_t degree) const {
  for (std::size_t s = 0; s < table_.size(); ++s)
    if (sgn(table_[s]) != 0 && popcount(s) != degree) return false;
  return true;
}

Circulation Circulation::component(std::size_t degree) const {
  Circulation c(ring_, m_);
  for (std::size_t s = 0; s < table_.size(); ++s)
    if (popcount(s) == degree) c.table_[s] = table_[s];
  return c;
}

std::vector<Rational> Circulation::slice(std::size_t degree) const {
  std::vector<Rational> out;
  for (std::uint64_t s : subsets_of_size(m_, degree)) out.push_back(table_[s]);
  return out;
}

std::size_t Circulation::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const Rational& x) { return sgn(x) != 0; }));
}

Circulation operator+(const Circulation& a, const Circulation& b) {
  require_same(a, b, "add");
  Circulation c(a.ring_, a.m_);
  for (std::size_t s = 0; s < c.table_.size(); ++s) c.table_[s] = a.ring_.normalize(a.table_[s] + b.table_[s]);
  return c;
}

Circulation multiply(const Circulation& a, const Circulation& b, Exec exec) {
  require_same(a, b, "multiply");
  Circulation out(a.ring(), a.edge_count());
  std::vector<Rational> values(a.table().size());
  const auto& x = a.table();
  const auto& y = b.table();
  const long total = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic, 256) if (exec == Exec::Parallel)
  for (long idx = 0; idx < total; ++idx) {
    const std::uint64_t sigma = static_cast<std::uint64_t>(idx);
    Rational acc = 0;
    for (std::uint64_t tau = sigma;; tau = (tau - 1) & sigma) {
      if (sgn(x[tau]) != 0 && sgn(y[sigma ^ tau]) != 0) acc += x[tau] * y[sigma ^ tau];
      if (tau == 0) break;
    }
    values[static_cast<std::size_t>(idx)] = a.ring().normalize(acc);
  }
  for (std::size_t s = 0; s < values.size(); ++s) out.set(EdgeSubset(s), values[s]);
  return out;
}

Circulation exponential(const Circulation& phi) {
  if (sgn(phi[EdgeSubset()]) != 0) throw DomainError("exponential: nonzero degree-0 part");
  const auto& f = phi.table();
  std::vector<Rational> e(f.size());
  e[0] = 1;
  // Split off the block containing the lowest edge of sigma.
  for (std::size_t sigma = 1; sigma < f.size(); ++sigma) {
    const std::uint64_t low = sigma & (~sigma + 1);
    const std::uint64_t rest = sigma ^ low;
    Rational acc = 0;
    for (std::uint64_t rho = rest;; rho = (rho - 1) & rest) {
      const std::uint64_t tau = rho | low;
      if (sgn(f[tau]) != 0) acc += f[tau] * e[sigma ^ tau];
      if (rho == 0) break;
    }
    e[sigma] = phi.ring().normalize(acc);
  }
  Circulation out(phi.ring(), phi.edge_count());
  for (std::size_t s = 0; s < e.size(); ++s) out.set(EdgeSubset(s), e[s]);
  return out;
}

Circulation divided_power(const Circulation& phi, std::size_t j) {
  require_degree_one(phi, "divided_power");
  Circulation out(phi.ring(), phi.edge_count());
  for (std::uint64_t s : subsets_of_size(phi.edge_count(), j)) {
    Rational v = 1;
    for (std::uint64_t r = s; r; r &= r - 1) v *= phi[EdgeSubset(r & (~r + 1))];
    out.set(EdgeSubset(s), v);
  }
  return out;
}

std::size_t nilpotence(const Circulation& phi) {
  require_degree_one(phi, "nilpotence");
  const std::size_t m = phi.edge_count();
  const auto base = phi.slice(1);
  auto power = base;
  std::size_t n = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    const bool nonzero = std::any_of(power.begin(), power.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (!nonzero) break;
    n = k;
    if (k == m) break;
    power = homogeneous_product(m, k, power, 1, base, Exec::Serial);
    for (auto& v : power) v = phi.ring().normalize(v);
  }
  return n;
}

bool annihilates_relations(const Graph& g, const Circulation& phi) {
  if (phi.edge_count() != g.edge_count()) throw InputError("annihilates_relations: size mismatch");
  for (std::size_t j = 0; j <= g.edge_count(); ++j) {
    const auto rel = relation_matrix(g, j);
    const auto values = phi.slice(j);
    for (std::size_t r = 0; r < rel.matrix.rows(); ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < values.size(); ++c)
        if (rel.matrix(r, c) != 0 && sgn(values[c]) != 0) acc += Rational(rel.matrix(r, c)) * values[c];
      if (sgn(phi.ring().normalize(acc)) != 0) return false;
    }
  }
  return true;
}

std::vector<std::size_t> monomial_dimensions(const Graph& g, Exec exec) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "monomial_dimensions");
  const FundamentalSystem fs = fundamental_system(g);
  const std::size_t d = fs.chords.size();

  // powers[c][p] = beta_c^{<p>} for p <= #supp(beta_c).
  std::vector<std::vector<Table>> powers(d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t r = support(fs.flows[c]);
    for (std::size_t p = 0; p <= r; ++p) powers[c].push_back(divided_power_table(m, fs.flows[c], p));
  }

  // Entries are signed counts of ordered set partitions of a subset of at
  // most 20 edges, so they stay below 20! and fit in 64 bits.
  std::vector<MatrixI64> rows(m + 1);
  std::function<void(std::size_t, std::size_t, const Table&)> walk =
      [&](std::size_t c, std::size_t degree, const Table& current) {
        if (c == d) {
          if (!all_zero(current)) rows[degree].append_row(current);
          return;
        }
        for (std::size_t p = 0; p < powers[c].size() && degree + p <= m; ++p) {
          if (p == 0) {
            walk(c + 1, degree, current);
            continue;
          }
          walk(c + 1, degree + p, homogeneous_product(m, degree, current, p, powers[c][p], exec));
        }
      };
  walk(0, 0, Table{1});

  std::vector<std::size_t> dims(m + 1, 0);
  const long degrees = static_cast<long>(m + 1);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
  for (long j = 0; j < degrees; ++j) dims[static_cast<std::size_t>(j)] = rank(rows[static_cast<std::size_t>(j)]);
  return dims;
}

Integer pseudopower(const Integer& a, std::size_t j) {
  if (j < 1) throw InputError("pseudopower: j must be at least 1");
  if (sgn(a) < 0) throw InputError("pseudopower: a must be nonnegative");
  Integer rest = a, out = 0;
  for (long k = static_cast<long>(j); k >= 1 && sgn(rest) > 0; --k) {
    // Largest n with C(n, k) <= rest.
    long n = k;
    while (binomial(n + 1, k) <= rest) ++n;
    rest -= binomial(n, k);
    out += binomial(n + 1, k + 1);
  }
  return out;
}

MembershipReport relation_membership_check(const Graph& g) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "relation_membership_check");
  const FundamentalSystem fs = fundamental_system(g);
  const std::size_t d = fs.chords.size();
  MembershipReport report;
  report.full_family = d <= 10;

  std::vector<std::vector<int>> candidates;
  if (report.full_family) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> coeffs(d);
      for (std::size_t i = 0, c = code; i < d; ++i, c /= 3) coeffs[i] = static_cast<int>(c % 3) - 1;
      if (std::any_of(coeffs.begin(), coeffs.end(), [](int x) { return x != 0; }))
        candidates.push_back(std::move(coeffs));
    }
  } else {
    for (std::size_t a = 0; a < d; ++a)
      for (int sa : {-1, 1}) {
        std::vector<int> single(d, 0);
        single[a] = sa;
        candidates.push_back(single);
        for (std::size_t b = a + 1; b < d; ++b)
          for (int sb : {-1, 1}) {
            std::vector<int> pair = single;
            pair[b] = sb;
            candidates.push_back(pair);
          }
      }
  }

  std::vector<std::vector<Table>> powers(d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t p = 0; p <= support(fs.flows[c]); ++p)
      powers[c].push_back(divided_power_table(m, fs.flows[c], p));

  for (const auto& coeffs : candidates) {
    std::vector<int> values(m, 0);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t e = 0; e < m; ++e) values[e] += coeffs[c] * fs.flows[c][e];
    if (std::any_of(values.begin(), values.end(), [](int v) { return v < -1 || v > 1; })) continue;
    if (!supported_on_cycle(g, values)) continue;
    ++report.generators;

    std::vector<std::size_t> active;
    for (std::size_t c = 0; c < d; ++c)
      if (coeffs[c] != 0) active.push_back(c);
    const std::size_t length = support(values);

    for (std::size_t n = length + 1; n <= m; ++n) {
      // Sum over j with |j| = n supported on active chords of
      // prod theta(c)^{j(c)} beta^{<j>}.
      Table total(small_binomial(m, n), 0);
      std::function<void(std::size_t, std::size_t, const Table&)> walk =
          [&](std::size_t i, std::size_t degree, const Table& current) {
            if (i == active.size()) {
              if (degree == n)
                for (std::size_t k = 0; k < total.size(); ++k) total[k] += current[k];
              return;
            }
            const std::size_t c = active[i];
            for (std::size_t p = 0; p < powers[c].size() && degree + p <= n; ++p) {
              Table next = p == 0 ? current : homogeneous_product(m, degree, current, p, powers[c][p], Exec::Serial);
              if (coeffs[c] < 0 && p % 2 == 1)
                for (auto& x : next) x = -x;
              walk(i + 1, degree + p, next);
            }
          };
      walk(0, 0, Table{1});
      ++report.vanishing_checks;
      if (!all_zero(total)) ++report.failures;
    }
  }

  report.dimension_sum = 0;
  for (std::size_t x : monomial_dimensions(g)) report.dimension_sum += x;
  report.poincare_at_one = poincare(g).evaluate(1);
  return report;
}

std::vector<InjectivityEntry> multiplication_injectivity(const Graph& g) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "multiplication_injectivity");
  const std::size_t top = m - cut_edge_count(g);
  const FundamentalSystem fs = fundamental_system(g);

  std::vector<Integer> phi(m, 0);
  Integer weight = 1;
  for (std::size_t i = 0; i < fs.chords.size(); ++i) {
    weight *= 3;
    for (std::size_t e = 0; e < m; ++e) phi[e] += weight * fs.flows[i][e];
  }

  std::vector<InjectivityEntry> out;
  for (std::size_t j = 0; 2 * j <= top; ++j) {
    const std::size_t k = top - 2 * j;
    std::vector<Integer> power;
    for (std::uint64_t s : subsets_of_size(m, k)) {
      Integer v = 1;
      for (std::uint64_t r = s; r; r &= r - 1) v *= phi[static_cast<std::size_t>(__builtin_ctzll(r))];
      power.push_back(v);
    }
    const MatrixZ basis = integral_circulations(g, j);
    MatrixZ images;
    for (std::size_t b = 0; b < basis.rows(); ++b) {
      const std::vector<Integer> row(basis.row(b).begin(), basis.row(b).end());
      images.append_row(homogeneous_product(m, j, row, k, power, Exec::Serial));
    }
    out.push_back({j, basis.rows() == 0 ? 0 : rank(images), basis.rows()});
  }
  return out;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.exploratory; });
}

CheckReport verify_inequalities(const Graph& g) {
  const std::size_t m = g.edge_count();
  require_subset_capacity(m, "verify_inequalities");
  const std::size_t n = g.vertex_count();
  const std::size_t k = components(g).count;
  const std::size_t top = m - cut_edge_count(g);
  const BiPoly t = tutte(g);
  const UniPoly p = poincare_from_tutte(t, n - k);
  // One trailing zero so d[1] exists for edgeless graphs.
  std::vector<Integer> d(m + 2);
  for (std::size_t j = 0; j <= m; ++j) d[j] = p[j];

  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail, bool exploratory = false) {
    report.checks.push_back({std::move(name), ok, exploratory, std::move(detail)});
  };
  const std::string seq =
      "d = [" + join_numbers(std::vector<Integer>(d.begin(), d.begin() + static_cast<long>(m + 1))) + "]";

  add("d0_equals_one", d[0] == 1, seq);
  const Integer cycle_rank = Integer(m + k) - Integer(n);
  add("d1_equals_cycle_rank", d[1] == cycle_rank, "m - n + k = " + cycle_rank.get_str());
  add("top_degree_is_one", d[top] == 1, "m - l = " + std::to_string(top));
  {
    bool ok = true;
    for (std::size_t j = 0; j <= m; ++j) ok = ok && ((sgn(d[j]) != 0) == (j <= top));
    add("support_interval", ok, "nonzero exactly for 0 <= j <= " + std::to_string(top));
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t j = 1; j + 1 <= top; ++j) {
      const Integer bound = pseudopower(d[j], j);
      if (d[j + 1] > bound) {
        ok = false;
        detail += "d" + std::to_string(j + 1) + " > psi" + std::to_string(j) + " = " + bound.get_str() + "; ";
      }
    }
    add("pseudopower_bound", ok, ok ? "d_{j+1} <= psi_j(d_j) for 1 <= j < m - l" : detail);
  }
  {
    const FundamentalSystem fs = fundamental_system(g);
    UniPoly bound({1});
    for (const auto& flow : fs.flows) bound = bound * UniPoly(std::vector<Integer>(support(flow) + 1, Integer(1)));
    bool ok = true;
    for (std::size_t j = 0; j <= m; ++j) ok = ok && d[j] <= bound[j];
    add("fundamental_cycle_bound", ok, "bound = [" + join_numbers(bound.coefficients()) + "]");
  }
  {
    const auto gi = girth(g);
    const std::size_t limit = gi ? std::min(*gi, m) : m;
    const long d1 = static_cast<long>(m + k) - static_cast<long>(n);
    bool ok = true;
    for (std::size_t j = 0; j <= limit; ++j)
      ok = ok && d[j] == binomial(d1 + static_cast<long>(j) - 1, static_cast<long>(j));
    add("girth_binomial", ok, "checked 0 <= j <= " + std::to_string(limit));
  }
  {
    bool ok = true;
    for (std::size_t j = 1; j <= top / 2; ++j) ok = ok && d[j - 1] <= d[j];
    add("front_half_monotone", ok, "d_0 <= ... <= d_" + std::to_string(top / 2));
    bool mirror = true;
    for (std::size_t j = 0; j <= top / 2; ++j) mirror = mirror && d[j] <= d[top - j];
    add("mirror_bound", mirror, "d_j <= d_{m-l-j}");
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : multiplication_injectivity(g)) {
      ok = ok && entry.rank == entry.expected;
      detail += "j=" + std::to_string(entry.degree) + ":" + std::to_string(entry.rank) + "/" +
                std::to_string(entry.expected) + " ";
    }
    add("multiplication_injective", ok, detail);
  }
  {
    Integer sum = 0;
    for (const auto& x : d) sum += x;
    const Integer t12 = t.evaluate(1, 2);
    add("dimension_equals_T12", sum == t12, "D(1) = " + sum.get_str() + ", T(1,2) = " + t12.get_str());
  }
  {
    bool ok = true;
    for (std::size_t j = 1; j + 1 <= top; ++j) ok = ok && d[j] * d[j] >= d[j - 1] * d[j + 1];
    add("log_concave", ok, "d_j^2 >= d_{j-1} d_{j+1}", true);
  }
  return report;
}

}  // namespace flowalg
