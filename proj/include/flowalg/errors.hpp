#pragma once

#include <stdexcept>
#include <string>

namespace flowalg {

/// Malformed input: unknown ids, bad files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a fixed ceiling (subset tables are 2^m wide).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Mathematically undefined request, e.g. a characteristic flow through a cut-edge.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The affine constraint system has no solution.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Edge-count ceiling for every computation indexed by edge subsets.
inline constexpr std::size_t kMaxSubsetEdges = 20;

inline void require_subset_capacity(std::size_t edge_count, const char* what) {
  if (edge_count > kMaxSubsetEdges) {
    throw CapacityError(std::string(what) + ": " + std::to_string(edge_count) +
                        " edges exceeds the limit of " +
                        std::to_string(kMaxSubsetEdges));
  }
}

}  // namespace flowalg
