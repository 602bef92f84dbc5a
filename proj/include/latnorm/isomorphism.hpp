#pragma once

#include <optional>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// Searches for an order isomorphism a -> b. On success, result[x] is the
/// image of element x of `a`. Candidates are pruned by (height, lower-cover
/// count, upper-cover count) and then matched by backtracking.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

inline bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a, b).has_value();
}

/// A value that is equal for isomorphic lattices; used to bucket candidates
/// before running the full search.
std::vector<std::size_t> isomorphism_invariant(const FiniteLattice& L);

}  // namespace latnorm
