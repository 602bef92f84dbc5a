#pragma once

#include "latnorm/lattice.hpp"

namespace latnorm {

/// The pentagon: 0 < a < b < 1 and 0 < c < 1.
FiniteLattice n5();

/// The diamond: atoms a, b, c between 0 and 1.
FiniteLattice m3();

/// Seven-element modular lattice: a diamond {z, p, q, r, t} whose atom p is
/// also covered by s, with s and t both covered by 1.
FiniteLattice m3_2();

/// Ten-element modular lattice: atoms p, q, r under s; u above p, w above r;
/// x covers u and s, y covers s and w, and 1 covers x and y.
FiniteLattice m3_4();

}  // namespace latnorm
