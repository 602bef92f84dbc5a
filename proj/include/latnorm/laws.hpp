#pragma once

#include <map>
#include <string>
#include <vector>

#include "latnorm/search.hpp"

namespace latnorm {

/// One evaluated equivalence or implication.
///   i   atomistic: 1-distributive <=> Boolean <=> pseudo-t-norm found <=> t-norm found
///   ii  modular: 1-distributive <=> no forbidden 1-sublattice
///   iii algebraically rectangular modular: 1-distributive <=> distributive <=> both searches found
///   iv  pairs: t-norm on L1 (+) L2 <=> t-norm on L2; L1 (+) L2 and the glued sum 1-distributive <=> L2 is
///   v   search found => 1-distributive
/// The converse of (v) is not expected to hold; lattices violating it are
/// collected separately.
struct LawCheck {
  std::string law;
  std::string subject;
  std::string detail;

  friend bool operator==(const LawCheck&, const LawCheck&) = default;
};

struct LawSuiteReport {
  std::string scope;
  std::size_t lattices = 0;
  std::size_t pairs = 0;
  std::map<std::string, std::size_t> checks;
  std::vector<LawCheck> counterexamples;
  std::vector<LawCheck> converse_witnesses;
  /// Subjects whose search hit the node budget; their checks were skipped.
  std::vector<std::string> budget_exceeded;

  bool clean() const { return counterexamples.empty(); }
};

struct LawSuiteScope {
  enum class Kind { Corpus, Enumerated } kind = Kind::Corpus;
  /// Largest lattice size for Kind::Enumerated.
  std::size_t n = 0;

  static LawSuiteScope corpus() { return {}; }
  static LawSuiteScope enumerated(std::size_t n) { return {Kind::Enumerated, n}; }
};

/// Corpus scope runs (i)-(iii) and (v) on every corpus lattice and (iv) on
/// pairs from {c2, c3, b2, m3, n5}. Enumerated(n) runs them on every lattice
/// with 2..n elements and (iv) on pairs of lattices with at most 4 elements.
LawSuiteReport run_law_suite(const LawSuiteScope& scope, const SearchConfig& cfg = {});

/// Checks (i)-(iii) and (v) on a single lattice, appending to `report`.
void check_lattice_laws(const FiniteLattice& L, const std::string& name, const SearchConfig& cfg,
                        LawSuiteReport& report);
/// Checks (iv) on one pair.
void check_pair_laws(const FiniteLattice& lower, const FiniteLattice& upper, const std::string& name,
                     const SearchConfig& cfg, LawSuiteReport& report);

}  // namespace latnorm
