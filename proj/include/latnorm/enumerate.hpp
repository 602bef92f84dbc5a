#pragma once

#include <optional>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

inline constexpr std::size_t kMaxEnumerationSize = 8;

/// A set flag keeps only lattices with that property.
struct EnumerationFilters {
  bool modular = false;
  bool atomistic = false;
  bool distributive = false;
};

/// All n-element lattices up to isomorphism, in a fixed order. Bottom is
/// index 0, top index n - 1, and labels are "0", "a", "b", ..., "1".
/// Throws TooLarge for n > kMaxEnumerationSize and InvalidArgument for n = 0.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n, EnumerationFilters filters = {});

}  // namespace latnorm
