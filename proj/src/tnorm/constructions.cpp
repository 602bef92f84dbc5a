#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/error.hpp"
#include "latnorm/isomorphism.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

OpTable t_meet(std::shared_ptr<const FiniteLattice> L) {
  const FiniteLattice& ref = *L;
  return make_table(std::move(L), [&](Elem x, Elem y) { return ref.meet(x, y); });
}

OpTable t_meet(const FiniteLattice& L) { return t_meet(std::make_shared<const FiniteLattice>(L)); }

OpTable t_weakest(std::shared_ptr<const FiniteLattice> L) {
  const FiniteLattice& ref = *L;
  return make_table(std::move(L), [&](Elem x, Elem y) {
    return (x == ref.top() || y == ref.top()) ? ref.meet(x, y) : ref.bottom();
  });
}

OpTable t_weakest(const FiniteLattice& L) { return t_weakest(std::make_shared<const FiniteLattice>(L)); }

OpTable glued_combine(const FiniteLattice& lower, const FiniteLattice& upper, const OpTable& t_lower,
                      const OpTable& t_upper) {
  require_lattice(t_lower, lower);
  require_lattice(t_upper, upper);
  auto L = std::make_shared<const FiniteLattice>(glued_sum(lower, upper));
  const std::size_t n1 = lower.size();
  // glued index -> upper index, or -1 when the element is only in `lower`
  std::vector<long> to_upper(L->size(), -1);
  for (Elem y = 0; y < upper.size(); ++y) to_upper[glued_upper_index(lower, upper, y)] = y;
  return make_table(L, [&](Elem x, Elem y) -> Elem {
    if (x < n1 && y < n1) return t_lower.at(x, y);
    if (to_upper[x] >= 0 && to_upper[y] >= 0)
      return glued_upper_index(lower, upper,
                               t_upper.at(static_cast<Elem>(to_upper[x]), static_cast<Elem>(to_upper[y])));
    return L->meet(x, y);
  });
}

OpTable project_tstar(const FiniteLattice& L, Elem cut, const OpTable& T) {
  require_lattice(T, L);
  for (Elem x = 0; x < L.size(); ++x)
    if (!L.leq(cut, x) && !L.less(x, cut))
      throw LatticeError(ErrorCode::NotAnOrdinalCut,
                         "element " + L.label(x) + " is neither above nor below " + L.label(cut));
  Interval upper = interval(L, cut, L.top());
  const Elem base = *upper.from_parent(cut);
  auto sub = std::make_shared<const FiniteLattice>(upper.lattice);
  return make_table(sub, [&](Elem x, Elem y) {
    const Elem v = T.at(upper.to_parent(x), upper.to_parent(y));
    return L.leq(cut, v) ? *upper.from_parent(v) : base;
  });
}

namespace {

[[noreturn]] void precondition(const std::string& clause) {
  throw LatticeError(ErrorCode::PreconditionFailed, clause);
}

}  // namespace

OpTable construct_planar(const FiniteLattice& L, Elem a, Elem b) {
  if (a >= L.size() || b >= L.size()) precondition("a and b must be elements of the lattice");
  if (!is_join_irreducible(L, a) || !is_meet_irreducible(L, a))
    precondition("a = " + L.label(a) + " is not bi-irreducible");
  if (!is_join_irreducible(L, b) || !is_meet_irreducible(L, b))
    precondition("b = " + L.label(b) + " is not bi-irreducible");
  if (L.join(a, b) != L.top()) precondition("a v b = " + L.label(L.join(a, b)) + " is not the top");
  const Elem m = L.meet(a, b);
  const Interval whole = interval(L, m, L.top());
  const FiniteLattice grid = direct_product(interval(L, m, a).lattice, interval(L, m, b).lattice);
  if (!is_isomorphic(whole.lattice, grid))
    precondition("[a ^ b, 1] is not isomorphic to [a ^ b, a] x [a ^ b, b]");
  if (auto d = is_modular(L); !d) precondition("lattice is not modular (" + d.witness->detail + ")");
  if (auto d = is_1_distributive(L); !d)
    precondition("lattice is not 1-distributive (" + d.witness->detail + ")");

  auto shared = std::make_shared<const FiniteLattice>(L);
  auto below_b = [&](Elem x) { return L.less(x, b); };
  auto in_h1 = [&](Elem x) { return !L.leq(b, x); };
  auto in_h2 = [&](Elem x) { return in_h1(x) && !below_b(x); };
  OpTable T = make_table(shared, [&](Elem x, Elem y) {
    if ((below_b(x) && in_h1(y)) || (below_b(y) && in_h1(x))) return L.bottom();
    if (in_h2(x) && in_h2(y)) return L.meet(a, L.meet(x, y));
    return L.meet(x, y);
  });

  const VerificationReport report = verify_pseudo_tnorm(T);
  if (!report.all_pass() || !report.passes(Law::BelowMeet))
    throw LatticeError(ErrorCode::PostVerificationFailed, "constructed table is not a commutative pseudo-t-norm");
  if (auto r = verify_join_distributive(T); !r.pass)
    throw LatticeError(ErrorCode::PostVerificationFailed,
                       "constructed table is not join-distributive: " + r.witness->detail);
  return T;
}

}  // namespace latnorm
