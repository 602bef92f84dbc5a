#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latnorm/lattice.hpp"
#include "latnorm/witness.hpp"

namespace latnorm {

/// Atoms and irreducible elements, each list in ascending index order.
///
/// Irreducibility follows the literal definition: q is join-irreducible
/// when q = x v y forces q = x or q = y. The bottom is therefore
/// join-irreducible and the top meet-irreducible.
struct ElementClasses {
  std::vector<Elem> atoms;
  std::vector<Elem> join_irreducible;
  std::vector<Elem> meet_irreducible;
  std::vector<Elem> bi_irreducible;

  friend bool operator==(const ElementClasses&, const ElementClasses&) = default;
};

ElementClasses classify_elements(const FiniteLattice& L);

bool is_join_irreducible(const FiniteLattice& L, Elem q);
bool is_meet_irreducible(const FiniteLattice& L, Elem q);

/// a >= b implies a ^ (b v c) = b v (a ^ c). Witness law "modular",
/// elements (a, b, c).
Decision is_modular(const FiniteLattice& L);

/// Holds iff no sublattice is isomorphic to N5. Witness is the embedding
/// (pattern "N5", images of 0, a, b, c, 1 of n5()).
Decision is_modular_via_n5(const FiniteLattice& L);

/// x ^ (y v z) = (x ^ y) v (x ^ z). Witness law "distributive", (x, y, z).
Decision is_distributive(const FiniteLattice& L);

/// c is 1-distributive when a v b = 1 implies c = (c ^ a) v (c ^ b).
/// Witness law "1-distributive", elements (c, a, b).
Decision is_1_distributive(const FiniteLattice& L);
bool is_1_distributive_element(const FiniteLattice& L, Elem c);
std::vector<Elem> one_distributive_elements(const FiniteLattice& L);

/// Every element is the join of the atoms below it.
bool is_atomistic(const FiniteLattice& L);

/// Isomorphic to the Boolean lattice on its atoms.
bool is_boolean(const FiniteLattice& L);

/// Every element has a complement.
bool is_complemented(const FiniteLattice& L);

/// Searches for an injective lattice homomorphism pattern -> L (the image is
/// a sublattice isomorphic to the pattern). With `require_top` the pattern's
/// top must land on the top of L.
std::optional<Witness> find_sublattice_embedding(const FiniteLattice& L, const FiniteLattice& pattern,
                                                 bool require_top);

/// True iff `image` is an injective map pattern -> L preserving meet and join.
bool is_sublattice_embedding(const FiniteLattice& L, const FiniteLattice& pattern, const std::vector<Elem>& image);

/// First 1-sublattice among M3, M3,2 and M3,4 (checked in that order); the
/// witness law is "M3", "M3,2" or "M3,4" with elements indexed by the
/// corresponding pattern lattice (m3(), m3_2(), m3_4()).
std::optional<Witness> find_forbidden_1_sublattice(const FiniteLattice& L);

/// Algebraic part of rectangularity: exactly two bi-irreducible elements
/// outside {0, 1}, and they are complements. Planar boundary position is not
/// checked.
struct RectangularCheck {
  bool holds = false;
  std::optional<std::pair<Elem, Elem>> pair;
  bool boundary_checked = false;

  friend bool operator==(const RectangularCheck&, const RectangularCheck&) = default;
};

RectangularCheck is_rectangular_algebraic(const FiniteLattice& L);

/// Everything `check` reports about a lattice. `witnesses` holds one entry
/// per false flag (boolean and atomistic failures carry a short law-only
/// witness).
struct ClassificationReport {
  ElementClasses classes;
  bool modular = false;
  bool distributive = false;
  bool one_distributive = false;
  bool atomistic = false;
  bool boolean = false;
  bool complemented = false;
  std::vector<Elem> one_distributive_elements;
  RectangularCheck rectangular;
  std::optional<Witness> forbidden;
  std::vector<Witness> witnesses;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const FiniteLattice& L);

}  // namespace latnorm
