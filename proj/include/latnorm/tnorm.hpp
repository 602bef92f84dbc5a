#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "latnorm/optable.hpp"
#include "latnorm/witness.hpp"

namespace latnorm {

enum class Law {
  T1,
  Monotone,
  Commutative,
  Associative,
  Neutral,
  JoinDistributive,
  MeetDistributive,
  LeftContinuous,
  RightContinuous,
  BelowMeet,
};

inline constexpr std::array kAllLaws = {Law::T1,
                                        Law::Monotone,
                                        Law::Commutative,
                                        Law::Associative,
                                        Law::Neutral,
                                        Law::JoinDistributive,
                                        Law::MeetDistributive,
                                        Law::LeftContinuous,
                                        Law::RightContinuous,
                                        Law::BelowMeet};

std::string_view to_string(Law law);
std::optional<Law> parse_law(std::string_view name);

struct LawResult {
  bool pass = true;
  std::optional<Witness> witness;

  friend bool operator==(const LawResult&, const LawResult&) = default;
};

/// Per-law verdicts. Laws that were not evaluated are empty.
class VerificationReport {
 public:
  void set(Law law, LawResult result) { results_[index(law)] = std::move(result); }
  const std::optional<LawResult>& get(Law law) const { return results_[index(law)]; }
  bool passes(Law law) const { return get(law) && get(law)->pass; }
  bool evaluated(Law law) const { return get(law).has_value(); }
  /// True iff every evaluated law passed.
  bool all_pass() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  static std::size_t index(Law law) { return static_cast<std::size_t>(law); }
  std::array<std::optional<LawResult>, kAllLaws.size()> results_{};
};

/// Witness conventions (elements, in order):
///   T1 (z, a) with z in {0, 1}; Monotone (a, b, c) with b <= c;
///   Commutative (a, b); Associative (x, y, z); Neutral (a);
///   Join/MeetDistributive (a, b, c); BelowMeet (a, b);
///   Left/RightContinuous (a, s1, s2, ...) for the failing subset S.
/// The lowest failing tuple in index order is reported, except for
/// associativity, where triples of pairwise distinct elements are
/// preferred.
LawResult check_law(const OpTable& T, Law law);

/// T1, Monotone, Commutative and, for commutative tables, BelowMeet.
VerificationReport verify_pseudo_tnorm(const OpTable& T);
/// Neutral, Monotone, Commutative, Associative.
VerificationReport verify_tnorm(const OpTable& T);
VerificationReport verify_laws(const OpTable& T, std::span<const Law> laws);
VerificationReport verify_all(const OpTable& T);

/// Throws LatticeMismatch unless T is defined on exactly L.
void require_lattice(const OpTable& T, const FiniteLattice& L);

LawResult verify_join_distributive(const OpTable& T);
LawResult verify_meet_distributive(const OpTable& T);

enum class ContinuityMode { Auto, Pairwise, SubsetSweep };
inline constexpr std::size_t kSubsetSweepLimit = 20;

/// Left continuity checks T(a, vS) = v{T(a, s) : s in S} over nonempty S.
/// The pairwise check uses only two-element S (binary join distributivity);
/// the subset sweep enumerates every nonempty S. Auto runs the pairwise check
/// and adds the sweep when |L| <= kSubsetSweepLimit. Requesting the sweep on a
/// larger lattice throws SubsetSweepTooLarge.
struct ContinuityResult {
  LawResult pairwise;
  std::optional<LawResult> subset_sweep;

  bool pass() const { return pairwise.pass && (!subset_sweep || subset_sweep->pass); }
  bool modes_agree() const { return !subset_sweep || subset_sweep->pass == pairwise.pass; }
};

ContinuityResult verify_left_continuous(const OpTable& T, ContinuityMode mode = ContinuityMode::Auto);
ContinuityResult verify_right_continuous(const OpTable& T, ContinuityMode mode = ContinuityMode::Auto);

/// T(x, y) = x ^ y.
OpTable t_meet(std::shared_ptr<const FiniteLattice> L);
OpTable t_meet(const FiniteLattice& L);

/// The weakest t-norm: x ^ y when 1 is one of the arguments, 0 otherwise.
OpTable t_weakest(std::shared_ptr<const FiniteLattice> L);
OpTable t_weakest(const FiniteLattice& L);

/// Combines operations on `lower` and `upper` into one on
/// glued_sum(lower, upper): T1 on lower x lower, T2 on upper x upper, meet
/// elsewhere.
OpTable glued_combine(const FiniteLattice& lower, const FiniteLattice& upper, const OpTable& t_lower,
                      const OpTable& t_upper);

/// Restriction of T to the interval [cut, 1], sending every value that falls
/// below `cut` to `cut`. L must split at `cut`: every element outside
/// [cut, 1] lies strictly below it (otherwise NotAnOrdinalCut).
OpTable project_tstar(const FiniteLattice& L, Elem cut, const OpTable& T);

/// Join-distributive pseudo-t-norm for a modular, 1-distributive lattice
/// with bi-irreducible a, b such that a v b = 1 and
/// [a ^ b, 1] = [a ^ b, a] x [a ^ b, b]:
///
///   T(x, y) = 0          if x < b and y not >= b, or y < b and x not >= b
///           = a ^ x ^ y  if x and y are both incomparable to b
///           = x ^ y      otherwise
///
/// Preconditions are checked first (PreconditionFailed names the clause);
/// the result is then verified and PostVerificationFailed is thrown if it is
/// not a commutative join-distributive pseudo-t-norm.
OpTable construct_planar(const FiniteLattice& L, Elem a, Elem b);

}  // namespace latnorm
