#include "latnorm/analysis.hpp"

#include <algorithm>

#include "latnorm/constructions.hpp"
#include "latnorm/isomorphism.hpp"
#include "latnorm/patterns.hpp"

namespace latnorm {

namespace {

std::string tuple_text(const FiniteLattice& L, std::initializer_list<Elem> xs) {
  std::string out = "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) out += ", ";
    out += L.label(x);
    first = false;
  }
  return out + ")";
}

}  // namespace

bool is_join_irreducible(const FiniteLattice& L, Elem q) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!L.less(x, q)) continue;
    for (Elem y = x; y < L.size(); ++y)
      if (L.less(y, q) && L.join(x, y) == q) return false;
  }
  return true;
}

bool is_meet_irreducible(const FiniteLattice& L, Elem q) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!L.less(q, x)) continue;
    for (Elem y = x; y < L.size(); ++y)
      if (L.less(q, y) && L.meet(x, y) == q) return false;
  }
  return true;
}

ElementClasses classify_elements(const FiniteLattice& L) {
  ElementClasses c;
  for (Elem x = 0; x < L.size(); ++x) {
    const bool ji = is_join_irreducible(L, x);
    const bool mi = is_meet_irreducible(L, x);
    if (L.covers(L.bottom(), x)) c.atoms.push_back(x);
    if (ji) c.join_irreducible.push_back(x);
    if (mi) c.meet_irreducible.push_back(x);
    if (ji && mi) c.bi_irreducible.push_back(x);
  }
  return c;
}

Decision is_modular(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(b, a)) continue;
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = L.meet(a, L.join(b, c));
        const Elem rhs = L.join(b, L.meet(a, c));
        if (lhs != rhs) {
          return {false, Witness{WitnessKind::LawViolation, "modular", {a, b, c},
                                 "a >= b but a^(b v c) = " + L.label(lhs) + " != " + L.label(rhs) +
                                     " = b v (a^c) at (a, b, c) = " + tuple_text(L, {a, b, c})}};
        }
      }
    }
  return {true, std::nullopt};
}

Decision is_modular_via_n5(const FiniteLattice& L) {
  if (auto w = find_sublattice_embedding(L, n5(), false)) {
    w->law = "N5";
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

Decision is_distributive(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem lhs = L.meet(x, L.join(y, z));
        const Elem rhs = L.join(L.meet(x, y), L.meet(x, z));
        if (lhs != rhs) {
          return {false, Witness{WitnessKind::LawViolation, "distributive", {x, y, z},
                                 "x^(y v z) = " + L.label(lhs) + " != " + L.label(rhs) +
                                     " = (x^y) v (x^z) at (x, y, z) = " + tuple_text(L, {x, y, z})}};
        }
      }
  return {true, std::nullopt};
}

namespace {

std::optional<Witness> one_distributive_failure(const FiniteLattice& L, Elem c) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (L.join(a, b) != L.top()) continue;
      const Elem rhs = L.join(L.meet(c, a), L.meet(c, b));
      if (rhs != c) {
        return Witness{WitnessKind::LawViolation, "1-distributive", {c, a, b},
                       "a v b = 1 but (c^a) v (c^b) = " + L.label(rhs) + " != " + L.label(c) + " = c at (c, a, b) = " +
                           tuple_text(L, {c, a, b})};
      }
    }
  return std::nullopt;
}

}  // namespace

bool is_1_distributive_element(const FiniteLattice& L, Elem c) { return !one_distributive_failure(L, c); }

std::vector<Elem> one_distributive_elements(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (Elem c = 0; c < L.size(); ++c)
    if (is_1_distributive_element(L, c)) out.push_back(c);
  return out;
}

Decision is_1_distributive(const FiniteLattice& L) {
  for (Elem c = 0; c < L.size(); ++c)
    if (auto w = one_distributive_failure(L, c)) return {false, std::move(w)};
  return {true, std::nullopt};
}

namespace {

std::optional<Elem> non_atomistic_element(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x) {
    Elem acc = L.bottom();
    for (Elem a : L.upper_covers(L.bottom()))
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) return x;
  }
  return std::nullopt;
}

std::optional<Elem> uncomplemented_element(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x) {
    bool found = false;
    for (Elem y = 0; y < L.size() && !found; ++y)
      found = L.meet(x, y) == L.bottom() && L.join(x, y) == L.top();
    if (!found) return x;
  }
  return std::nullopt;
}

}  // namespace

bool is_atomistic(const FiniteLattice& L) { return !non_atomistic_element(L); }

bool is_boolean(const FiniteLattice& L) {
  const std::size_t k = L.upper_covers(L.bottom()).size();
  if (k > 6 || L.size() != (std::size_t{1} << k)) return false;
  return is_isomorphic(L, boolean_lattice(k));
}

bool is_complemented(const FiniteLattice& L) { return !uncomplemented_element(L); }

RectangularCheck is_rectangular_algebraic(const FiniteLattice& L) {
  RectangularCheck out;
  std::vector<Elem> inner;
  for (Elem x = 0; x < L.size(); ++x)
    if (x != L.bottom() && x != L.top() && is_join_irreducible(L, x) && is_meet_irreducible(L, x))
      inner.push_back(x);
  if (inner.size() != 2) return out;
  const Elem u = inner[0];
  const Elem v = inner[1];
  if (L.meet(u, v) == L.bottom() && L.join(u, v) == L.top()) {
    out.holds = true;
    out.pair = std::make_pair(u, v);
  }
  return out;
}

ClassificationReport classify(const FiniteLattice& L) {
  ClassificationReport r;
  r.classes = classify_elements(L);
  auto record = [&](Decision d, bool& flag) {
    flag = d.holds;
    if (d.witness) r.witnesses.push_back(std::move(*d.witness));
  };
  record(is_modular(L), r.modular);
  record(is_distributive(L), r.distributive);
  record(is_1_distributive(L), r.one_distributive);
  if (auto x = non_atomistic_element(L)) {
    r.witnesses.push_back(Witness{WitnessKind::LawViolation, "atomistic", {*x},
                                  L.label(*x) + " is not the join of the atoms below it"});
  } else {
    r.atomistic = true;
  }
  r.boolean = is_boolean(L);
  if (!r.boolean)
    r.witnesses.push_back(Witness{WitnessKind::LawViolation, "boolean", {},
                                  "not isomorphic to the Boolean lattice on its " +
                                      std::to_string(r.classes.atoms.size()) + " atoms"});
  if (auto x = uncomplemented_element(L)) {
    r.witnesses.push_back(
        Witness{WitnessKind::LawViolation, "complemented", {*x}, L.label(*x) + " has no complement"});
  } else {
    r.complemented = true;
  }
  r.one_distributive_elements = one_distributive_elements(L);
  r.rectangular = is_rectangular_algebraic(L);
  r.forbidden = find_forbidden_1_sublattice(L);
  return r;
}

}  // namespace latnorm
