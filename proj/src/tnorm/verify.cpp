#include <algorithm>
#include <functional>

#include "latnorm/error.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

std::string_view to_string(Law law) {
  switch (law) {
    case Law::T1: return "t1";
    case Law::Monotone: return "monotone";
    case Law::Commutative: return "commutative";
    case Law::Associative: return "associative";
    case Law::Neutral: return "neutral";
    case Law::JoinDistributive: return "join_distributive";
    case Law::MeetDistributive: return "meet_distributive";
    case Law::LeftContinuous: return "left_continuous";
    case Law::RightContinuous: return "right_continuous";
    case Law::BelowMeet: return "below_meet";
  }
  return "unknown";
}

std::optional<Law> parse_law(std::string_view name) {
  for (Law law : kAllLaws)
    if (to_string(law) == name) return law;
  return std::nullopt;
}

bool VerificationReport::all_pass() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return !r || r->pass; });
}

void require_lattice(const OpTable& T, const FiniteLattice& L) {
  if (T.lattice() != L)
    throw LatticeError(ErrorCode::LatticeMismatch, "operation table is defined on a different lattice (" +
                                                       std::to_string(T.size()) + " vs " +
                                                       std::to_string(L.size()) + " elements)");
}

namespace {

std::string labels_of(const FiniteLattice& L, const std::vector<Elem>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += L.label(xs[i]);
  }
  return out + ")";
}

LawResult fail(const OpTable& T, Law law, std::vector<Elem> elements, std::string detail) {
  detail += " at " + labels_of(T.lattice(), elements);
  return LawResult{false, Witness{WitnessKind::LawViolation, std::string(to_string(law)), std::move(elements),
                                  std::move(detail)}};
}

LawResult check_t1(const OpTable& T) {
  const auto& L = T.lattice();
  for (Elem a = 0; a < L.size(); ++a) {
    if (T.at(L.bottom(), a) != L.bottom())
      return fail(T, Law::T1, {L.bottom(), a}, "T(0, a) = " + L.label(T.at(L.bottom(), a)) + " != 0");
    if (T.at(L.top(), a) != a)
      return fail(T, Law::T1, {L.top(), a}, "T(1, a) = " + L.label(T.at(L.top(), a)) + " != a");
  }
  return {};
}

LawResult check_neutral(const OpTable& T) {
  const auto& L = T.lattice();
  for (Elem a = 0; a < L.size(); ++a)
    if (T.at(L.top(), a) != a) return fail(T, Law::Neutral, {a}, "T(1, a) = " + L.label(T.at(L.top(), a)) + " != a");
  return {};
}

LawResult check_monotone(const OpTable& T) {
  const auto& L = T.lattice();
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (L.leq(b, c) && !L.leq(T.at(a, b), T.at(a, c)))
          return fail(T, Law::Monotone, {a, b, c},
                      "b <= c but T(a, b) = " + L.label(T.at(a, b)) + " is not below T(a, c) = " +
                          L.label(T.at(a, c)));
  return {};
}

LawResult check_commutative(const OpTable& T) {
  const auto& L = T.lattice();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a + 1; b < L.size(); ++b)
      if (T.at(a, b) != T.at(b, a))
        return fail(T, Law::Commutative, {a, b},
                    "T(a, b) = " + L.label(T.at(a, b)) + " != " + L.label(T.at(b, a)) + " = T(b, a)");
  return {};
}

LawResult check_associative(const OpTable& T) {
  const auto& L = T.lattice();
  const Elem n = static_cast<Elem>(L.size());
  for (int distinct_pass = 1; distinct_pass >= 0; --distinct_pass) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          const bool distinct = x != y && y != z && x != z;
          if (distinct != (distinct_pass == 1)) continue;
          const Elem lhs = T.at(T.at(x, y), z);
          const Elem rhs = T.at(x, T.at(y, z));
          if (lhs != rhs) {
            return fail(T, Law::Associative, {x, y, z},
                        "T(T(x, y), z) = T(" + L.label(T.at(x, y)) + ", z) = " + L.label(lhs) + " != " +
                            L.label(rhs) + " = T(x, " + L.label(T.at(y, z)) + ") = T(x, T(y, z))");
          }
        }
  }
  return {};
}

LawResult check_distributive(const OpTable& T, bool over_join) {
  const auto& L = T.lattice();
  const Elem n = static_cast<Elem>(L.size());
  const Law law = over_join ? Law::JoinDistributive : Law::MeetDistributive;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem bc = over_join ? L.join(b, c) : L.meet(b, c);
        const Elem lhs = T.at(a, bc);
        const Elem rhs = over_join ? L.join(T.at(a, b), T.at(a, c)) : L.meet(T.at(a, b), T.at(a, c));
        if (lhs != rhs) {
          const char* op = over_join ? " v " : " ^ ";
          return fail(T, law, {a, b, c},
                      "T(a, b" + std::string(op) + "c) = " + L.label(lhs) + " != " + L.label(rhs) + " = T(a, b)" +
                          op + "T(a, c)");
        }
      }
  return {};
}

LawResult check_below_meet(const OpTable& T) {
  const auto& L = T.lattice();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (!L.leq(T.at(a, b), L.meet(a, b)))
        return fail(T, Law::BelowMeet, {a, b},
                    "T(a, b) = " + L.label(T.at(a, b)) + " is not below a ^ b = " + L.label(L.meet(a, b)));
  return {};
}

LawResult subset_sweep(const OpTable& T, bool over_join) {
  const auto& L = T.lattice();
  const std::size_t n = L.size();
  const Law law = over_join ? Law::LeftContinuous : Law::RightContinuous;
  const std::size_t masks = std::size_t{1} << n;
  const Elem unit = over_join ? L.bottom() : L.top();
  auto combine = [&](Elem x, Elem y) { return over_join ? L.join(x, y) : L.meet(x, y); };
  std::vector<Elem> bound_s(masks), bound_t(masks);
  for (Elem a = 0; a < n; ++a) {
    bound_s[0] = unit;
    bound_t[0] = unit;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      const auto low = static_cast<Elem>(__builtin_ctzll(mask));
      const std::size_t rest = mask & (mask - 1);
      bound_s[mask] = combine(bound_s[rest], low);
      bound_t[mask] = combine(bound_t[rest], T.at(a, low));
      if (T.at(a, bound_s[mask]) != bound_t[mask]) {
        std::vector<Elem> elements{a};
        for (Elem s = 0; s < n; ++s)
          if (mask & (std::size_t{1} << s)) elements.push_back(s);
        const char* op = over_join ? "v" : "^";
        return fail(T, law, std::move(elements),
                    std::string("T(a, ") + op + "S) = " + L.label(T.at(a, bound_s[mask])) + " != " +
                        L.label(bound_t[mask]) + " = " + op + "{T(a, s)}");
      }
    }
  }
  return {};
}

ContinuityResult verify_continuity(const OpTable& T, ContinuityMode mode, bool over_join) {
  const Law law = over_join ? Law::LeftContinuous : Law::RightContinuous;
  if (mode == ContinuityMode::SubsetSweep && T.size() > kSubsetSweepLimit)
    throw LatticeError(ErrorCode::SubsetSweepTooLarge, "subset sweep needs at most " +
                                                           std::to_string(kSubsetSweepLimit) + " elements, got " +
                                                           std::to_string(T.size()));
  ContinuityResult out;
  out.pairwise = check_distributive(T, over_join);
  if (out.pairwise.witness) out.pairwise.witness->law = std::string(to_string(law));
  if (mode == ContinuityMode::SubsetSweep || (mode == ContinuityMode::Auto && T.size() <= kSubsetSweepLimit))
    out.subset_sweep = subset_sweep(T, over_join);
  return out;
}

}  // namespace

LawResult verify_join_distributive(const OpTable& T) { return check_distributive(T, true); }
LawResult verify_meet_distributive(const OpTable& T) { return check_distributive(T, false); }

ContinuityResult verify_left_continuous(const OpTable& T, ContinuityMode mode) {
  return verify_continuity(T, mode, true);
}

ContinuityResult verify_right_continuous(const OpTable& T, ContinuityMode mode) {
  return verify_continuity(T, mode, false);
}

LawResult check_law(const OpTable& T, Law law) {
  switch (law) {
    case Law::T1: return check_t1(T);
    case Law::Monotone: return check_monotone(T);
    case Law::Commutative: return check_commutative(T);
    case Law::Associative: return check_associative(T);
    case Law::Neutral: return check_neutral(T);
    case Law::JoinDistributive: return check_distributive(T, true);
    case Law::MeetDistributive: return check_distributive(T, false);
    case Law::BelowMeet: return check_below_meet(T);
    case Law::LeftContinuous:
    case Law::RightContinuous: {
      auto r = law == Law::LeftContinuous ? verify_left_continuous(T) : verify_right_continuous(T);
      if (r.subset_sweep && !r.subset_sweep->pass) return *r.subset_sweep;
      return r.pairwise;
    }
  }
  return {};
}

VerificationReport verify_laws(const OpTable& T, std::span<const Law> laws) {
  VerificationReport report;
  for (Law law : laws) report.set(law, check_law(T, law));
  return report;
}

VerificationReport verify_pseudo_tnorm(const OpTable& T) {
  VerificationReport report;
  for (Law law : {Law::T1, Law::Monotone, Law::Commutative}) report.set(law, check_law(T, law));
  if (report.passes(Law::Commutative)) report.set(Law::BelowMeet, check_law(T, Law::BelowMeet));
  return report;
}

VerificationReport verify_tnorm(const OpTable& T) {
  static constexpr std::array laws = {Law::Neutral, Law::Monotone, Law::Commutative, Law::Associative};
  return verify_laws(T, laws);
}

VerificationReport verify_all(const OpTable& T) { return verify_laws(T, kAllLaws); }

}  // namespace latnorm
