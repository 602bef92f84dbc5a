#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

enum class WitnessKind { LawViolation, PatternEmbedding };

/// A concrete counterexample or embedding. For law violations `elements` is
/// the argument tuple in the order the law names them; for embeddings
/// elements[i] is the image of pattern element i.
struct Witness {
  WitnessKind kind = WitnessKind::LawViolation;
  std::string law;
  std::vector<Elem> elements;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a decider: whether the property holds, plus a witness when it
/// does not (or, for pattern searches, when a pattern was found).
struct Decision {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

}  // namespace latnorm
