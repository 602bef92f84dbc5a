#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "latnorm/optable.hpp"

namespace latnorm {

struct SearchConfig {
  /// Search t-norms (associative) instead of pseudo-t-norms.
  bool require_associative = false;
  /// Only commutative tables. When false, rows are searched cell by cell
  /// with T(0, y) = T(x, 0) = 0, T(1, y) = y, T(x, 1) = x fixed and
  /// join-distributivity in the second argument only.
  bool require_commutative = true;
  std::size_t solution_limit = 1;
  std::uint64_t node_budget = 100'000'000;
  /// Workers split the first decision level; 1 runs inline.
  unsigned threads = 1;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };
std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<OpTable> solutions;
  std::uint64_t nodes_explored = 0;
  /// The whole space was explored (no budget cut, no solution-limit stop).
  bool complete = false;
};

/// Commutative join-distributive operations with T(1, x) = x and T(0, x) = 0.
/// Only the values T(i, j) for nonzero join-irreducible i, j are decided;
/// the rest of the table follows by join-expansion. Every returned table is
/// re-verified; a failing one raises PostVerificationFailed.
SearchOutcome exists_join_distributive_pseudo_tnorm(const FiniteLattice& L, SearchConfig cfg = {});

/// As above with associativity; solutions are left-continuous t-norms.
SearchOutcome exists_left_continuous_tnorm(const FiniteLattice& L, SearchConfig cfg = {});

/// Generic entry point; the config decides the axioms.
SearchOutcome search_operations(const FiniteLattice& L, const SearchConfig& cfg);

/// T'(x, y) = v{T(x, j) : j join-irreducible, 0 < j <= y}. Equal to T for
/// every join-distributive T with T(x, 0) = 0.
OpTable expand_from_join_irreducibles(const OpTable& T);

}  // namespace latnorm
