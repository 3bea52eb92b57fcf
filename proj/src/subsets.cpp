#include "flowalg/subsets.hpp"

#include <array>

#include "flowalg/errors.hpp"

namespace flowalg {

namespace {

using Table = std::array<std::array<std::uint64_t, 65>, 65>;

Table make_table() {
  Table t{};
  for (std::size_t n = 0; n <= 64; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

const Table& table() {
  static const Table t = make_table();
  return t;
}

}  // namespace

std::uint64_t small_binomial(std::size_t n, std::size_t k) {
  if (n > 64) throw CapacityError("small_binomial: n above 64");
  return k > n ? 0 : table()[n][k];
}

std::vector<std::uint64_t> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k > m) return out;
  out.reserve(small_binomial(m, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t word = (std::uint64_t{1} << k) - 1;
  const std::uint64_t top = m == 64 ? 0 : std::uint64_t{1} << m;
  while (true) {
    out.push_back(word);
    if (out.size() == small_binomial(m, k)) break;
    const std::uint64_t c = word & (~word + 1);
    const std::uint64_t r = word + c;
    word = (((r ^ word) >> 2) / c) | r;
    if (top != 0 && word >= top) break;
  }
  return out;
}

std::size_t colex_rank(std::uint64_t bits) {
  const Table& t = table();
  std::size_t rank = 0, i = 1;
  for (; bits; bits &= bits - 1, ++i)
    rank += static_cast<std::size_t>(t[static_cast<std::size_t>(__builtin_ctzll(bits))][i]);
  return rank;
}

}  // namespace flowalg
