#pragma once

#include <array>
#include <string>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// The n-element chain. Labels: "0", "x1" ... "x{n-2}", "1" (just "0" when n == 1).
FiniteLattice chain(std::size_t n);

/// The Boolean lattice of subsets of a k-element set. Atoms are labelled
/// "a", "b", ...; other elements by the concatenation of their atoms, with
/// the empty set as "0" and the full set as "1". Requires k <= 6.
FiniteLattice boolean_lattice(std::size_t k);

/// Every element of `lower` is placed below every element of `upper`.
/// Labels are prefixed "l." and "r."; indices of `lower` come first, then
/// those of `upper` shifted by |lower|.
FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper);

/// `upper` is stacked on `lower` with top(lower) identified with
/// bottom(upper). The identified element keeps the label "l." + top(lower).
/// Indices of `lower` come first, followed by the non-bottom elements of
/// `upper` in their original order.
FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper);

/// Index of element `x` of `upper` inside glued_sum(lower, upper).
Elem glued_upper_index(const FiniteLattice& lower, const FiniteLattice& upper, Elem x);

/// Componentwise order. Element (x, y) has index x * |right| + y and label "(x;y)".
FiniteLattice direct_product(const FiniteLattice& left, const FiniteLattice& right);

/// Same labels, reversed order.
FiniteLattice dual(const FiniteLattice& L);

/// Closed interval [lo, hi]; throws IntervalEmpty unless lo <= hi.
Interval interval(const FiniteLattice& L, Elem lo, Elem hi);

/// A covering square (lo, x, y, hi): lo covered by x and y, both covered by
/// hi, x and y distinct.
using Square = std::array<Elem, 4>;

/// Inserts a new element strictly between lo and hi of a covering square,
/// incomparable to x and y. The new element is appended as the last index.
/// When `label` is empty a fresh one ("eye1", "eye2", ...) is chosen.
FiniteLattice add_eye(const FiniteLattice& L, const Square& square, std::string label = {});

}  // namespace latnorm
