#pragma once

// Dense indexing of fixed-size edge subsets. Subsets of size k over m edges
// are listed by ascending bit mask, which is colex order, so a subset's
// position is sum_i C(p_i, i + 1) over its bit positions p_0 < p_1 < ...

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowalg/exec.hpp"

namespace flowalg {

/// C(n, k) for n <= 64 (every such value fits in 64 bits).
std::uint64_t small_binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..m-1} as bit masks, ascending.
std::vector<std::uint64_t> subsets_of_size(std::size_t m, std::size_t k);

/// Position of `bits` in subsets_of_size(m, popcount(bits)).
std::size_t colex_rank(std::uint64_t bits);

/// Calls f(tau) for every i-element submask tau of sigma.
template <class F>
void for_each_submask_of_size(std::uint64_t sigma, std::size_t i, F&& f) {
  std::size_t positions[64];
  std::size_t s = 0;
  for (std::uint64_t rest = sigma; rest; rest &= rest - 1)
    positions[s++] = static_cast<std::size_t>(__builtin_ctzll(rest));
  if (i > s) return;
  if (i == 0) {
    f(std::uint64_t{0});
    return;
  }
  // Gosper's hack over s-bit words, then spread onto sigma's positions.
  std::uint64_t word = (std::uint64_t{1} << i) - 1;
  const std::uint64_t limit = std::uint64_t{1} << s;
  while (word < limit) {
    std::uint64_t tau = 0;
    for (std::uint64_t w = word; w; w &= w - 1)
      tau |= std::uint64_t{1} << positions[__builtin_ctzll(w)];
    f(tau);
    const std::uint64_t c = word & (~word + 1);
    const std::uint64_t r = word + c;
    word = (((r ^ word) >> 2) / c) | r;
  }
}

/// Product of homogeneous tables: a over i-subsets, b over j-subsets, result
/// over (i + j)-subsets, all in colex order: out(s) = sum over i-subsets t of s
/// of a(t) * b(s \ t).
template <class T>
std::vector<T> homogeneous_product(std::size_t m, std::size_t i, const std::vector<T>& a,
                                   std::size_t j, const std::vector<T>& b,
                                   Exec exec = Exec::Parallel) {
  const auto targets = subsets_of_size(m, i + j);
  std::vector<T> out(targets.size(), T(0));
  const long count = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::Parallel)
  for (long idx = 0; idx < count; ++idx) {
    const std::uint64_t sigma = targets[static_cast<std::size_t>(idx)];
    T acc(0);
    for_each_submask_of_size(sigma, i, [&](std::uint64_t tau) {
      const T& x = a[colex_rank(tau)];
      if (x == T(0)) return;
      const T& y = b[colex_rank(sigma & ~tau)];
      if (y == T(0)) return;
      acc += x * y;
    });
    out[static_cast<std::size_t>(idx)] = acc;
  }
  return out;
}

}  // namespace flowalg
