#include <gtest/gtest.h>

#include "helpers.hpp"
#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/error.hpp"
#include "latnorm/isomorphism.hpp"
#include "latnorm/patterns.hpp"

using namespace latnorm;
using testing_helpers::code_of;
using testing_helpers::named;

namespace {

// Least upper bound by scanning all upper bounds directly on the order.
Elem scan_join(const FiniteLattice& L, Elem x, Elem y) {
  std::vector<Elem> ub;
  for (Elem z = 0; z < L.size(); ++z)
    if (L.leq(x, z) && L.leq(y, z)) ub.push_back(z);
  for (Elem c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](Elem z) { return L.leq(c, z); })) return c;
  throw std::logic_error("no join");
}

}  // namespace

TEST(Build, ThreeChain) {
  const auto L = FiniteLattice::from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
  EXPECT_EQ(L.size(), 3u);
  EXPECT_EQ(L.meet(L.index_of("a"), L.index_of("1")), L.index_of("a"));
  EXPECT_EQ(L.join(L.index_of("0"), L.index_of("a")), L.index_of("a"));
  EXPECT_EQ(L.bottom(), 0u);
  EXPECT_EQ(L.top(), 2u);
}

TEST(Build, S72JoinMatchesUpperBoundScan) {
  const auto L = named("s72");
  ASSERT_EQ(L.size(), 9u);
  EXPECT_EQ(L.join(L.index_of("d"), L.index_of("n")), L.index_of("u"));
  EXPECT_EQ(L.meet(L.index_of("u"), L.index_of("v")), L.index_of("c"));
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) EXPECT_EQ(L.join(x, y), scan_join(L, x, y));
}

TEST(Build, Errors) {
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }),
            ErrorCode::NotALattice);
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"1", "0"}}); }),
            ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({"0", "0"}, {}); }), ErrorCode::DuplicateLabel);
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({"0", "1"}, {{"0", "z"}}); }), ErrorCode::UnknownLabel);
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({}, {}); }), ErrorCode::EmptyLattice);
  EXPECT_EQ(code_of([] { FiniteLattice::from_covers({"0", "a b"}, {}); }), ErrorCode::InvalidLabel);
}

TEST(Build, RedundantCoversAreDropped) {
  const auto L = FiniteLattice::from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}});
  EXPECT_EQ(L.cover_pairs().size(), 2u);
  EXPECT_EQ(L, FiniteLattice::from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}));
}

TEST(Build, LabelValidity) {
  EXPECT_TRUE(is_valid_label("l.x1"));
  EXPECT_FALSE(is_valid_label(""));
  EXPECT_FALSE(is_valid_label("#a"));
  EXPECT_FALSE(is_valid_label("a,b"));
  EXPECT_FALSE(is_valid_label("a\""));
}

TEST(OrdinalSum, ChainsCompose) {
  const auto L = ordinal_sum(chain(2), chain(2));
  EXPECT_EQ(L.size(), 4u);
  EXPECT_TRUE(is_isomorphic(L, chain(4)));
}

TEST(OrdinalSum, DiamondUnderChain) {
  const auto M = m3();
  const auto L = ordinal_sum(M, chain(2));
  EXPECT_EQ(L.size(), 7u);
  EXPECT_TRUE(L.covers(M.top(), static_cast<Elem>(M.size())));
  EXPECT_EQ(L.label(M.top()), "l.1");
}

TEST(OrdinalSum, TopOverDiamondIsJoinIrreducible) {
  const auto L = ordinal_sum(m3(), chain(1));
  EXPECT_EQ(L.lower_covers(L.top()).size(), 1u);
  EXPECT_TRUE(is_join_irreducible(L, L.top()));
}

TEST(GluedSum, ChainsCompose) {
  const auto L = glued_sum(chain(2), chain(2));
  EXPECT_EQ(L.size(), 3u);
  EXPECT_TRUE(is_isomorphic(L, chain(3)));
}

TEST(GluedSum, TwoDiamonds) {
  const auto M = m3();
  const auto L = glued_sum(M, M);
  ASSERT_EQ(L.size(), 9u);
  const Elem mid = M.top();
  EXPECT_EQ(L.label(mid), "l.1");
  EXPECT_EQ(L.lower_covers(mid).size(), 3u);
  EXPECT_EQ(L.upper_covers(mid).size(), 3u);
  EXPECT_EQ(glued_upper_index(M, M, M.bottom()), mid);
}

// ordinal_sum(L1, L2) is glued_sum with an extra element on top of L1, and a
// glued sum whose upper part has a single atom is an ordinal sum with that
// atom's upper interval.
TEST(GluedSum, IsomorphismOracleOnCorpusPairs) {
  const std::vector<std::string> names = {"c2", "c3", "b2", "m3", "n5", "m3_capped"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const auto L1 = named(a), L2 = named(b);
      EXPECT_TRUE(is_isomorphic(ordinal_sum(L1, L2), glued_sum(ordinal_sum(L1, chain(1)), L2))) << a << " " << b;
      const auto& atoms = L2.upper_covers(L2.bottom());
      if (atoms.size() == 1) {
        EXPECT_TRUE(is_isomorphic(glued_sum(L1, L2), ordinal_sum(L1, interval(L2, atoms[0], L2.top()).lattice)))
            << a << " " << b;
      }
      EXPECT_EQ(ordinal_sum(L1, L2).size(), L1.size() + L2.size());
      EXPECT_EQ(glued_sum(L1, L2).size(), L1.size() + L2.size() - 1);
    }
}

TEST(Product, GridIsDistributive) {
  const auto G = direct_product(chain(2), chain(3));
  EXPECT_EQ(G.size(), 6u);
  EXPECT_TRUE(is_distributive(G));
  EXPECT_EQ(G.label(1 * 3 + 2), "(1;1)");
}

TEST(Product, BooleanSquare) {
  EXPECT_TRUE(is_isomorphic(boolean_lattice(2), direct_product(chain(2), chain(2))));
  EXPECT_FALSE(is_isomorphic(chain(4), boolean_lattice(2)));
  EXPECT_EQ(boolean_lattice(3).size(), 8u);
  EXPECT_TRUE(is_isomorphic(boolean_lattice(3), named("b3")));
}

TEST(Dual, PentagonSelfDual) {
  EXPECT_TRUE(is_isomorphic(dual(n5()), n5()));
  const auto S = named("s72");
  EXPECT_EQ(static_cast<bool>(is_modular(dual(S))), static_cast<bool>(is_modular(S)));
}

TEST(Dual, Involution) {
  for (const auto& L : testing_helpers::sample_lattices(5)) EXPECT_EQ(dual(dual(L)), L);
}

TEST(Interval, UpperPartOfFig4) {
  const auto L = named("fig4_L");
  const Elem a = L.meet(L.index_of("f"), L.index_of("h"));
  EXPECT_EQ(a, L.index_of("a"));
  const Interval I = interval(L, a, L.top());
  EXPECT_EQ(I.members, testing_helpers::elems(L, {"a", "e", "f", "g", "h", "1"}));
  EXPECT_TRUE(is_isomorphic(I.lattice, direct_product(chain(2), chain(3))));
  EXPECT_EQ(I.from_parent(L.index_of("b")), std::nullopt);
  EXPECT_EQ(I.to_parent(*I.from_parent(L.index_of("g"))), L.index_of("g"));
}

TEST(Interval, EmptyThrows) {
  const auto L = named("m3");
  EXPECT_EQ(code_of([&] { interval(L, L.index_of("a"), L.index_of("b")); }), ErrorCode::IntervalEmpty);
}

TEST(Eye, SquareBecomesDiamond) {
  const auto B = boolean_lattice(2);
  const auto M = add_eye(B, {0, 1, 2, 3});
  EXPECT_EQ(M.size(), 5u);
  EXPECT_TRUE(is_isomorphic(M, m3()));
  EXPECT_EQ(M.label(4), "eye1");
  EXPECT_EQ(add_eye(M, {0, 1, 2, 3}).label(5), "eye2");
}

TEST(Eye, RejectsNonSquare) {
  const auto C = chain(4);
  EXPECT_EQ(code_of([&] { add_eye(C, {0, 1, 2, 3}); }), ErrorCode::NotACoveringSquare);
  const auto B = boolean_lattice(2);
  EXPECT_EQ(code_of([&] { add_eye(B, {0, 1, 1, 3}); }), ErrorCode::NotACoveringSquare);
}

TEST(Eye, TwoEyesRebuildFig4) {
  const auto frame = FiniteLattice::from_covers(
      {"0", "a", "d", "e", "f", "g", "h", "1"},
      {{"0", "a"}, {"0", "d"}, {"a", "e"}, {"d", "e"}, {"a", "f"}, {"f", "g"}, {"e", "g"}, {"e", "h"}, {"g", "1"},
       {"h", "1"}});
  const Square sq{frame.index_of("0"), frame.index_of("a"), frame.index_of("d"), frame.index_of("e")};
  const auto L = add_eye(add_eye(frame, sq, "b"), sq, "c");
  EXPECT_TRUE(is_isomorphic(L, named("fig4_L")));
}

TEST(Eye, ThreeEyesOnPlanarS) {
  const auto S = named("s_planar");
  auto sq = [&](const char* lo, const char* x, const char* y, const char* hi) {
    return Square{S.index_of(lo), S.index_of(x), S.index_of(y), S.index_of(hi)};
  };
  auto plus = add_eye(S, sq("0", "a", "b", "c"), "x");
  plus = add_eye(plus, sq("0", "a", "b", "c"), "y");
  plus = add_eye(plus, sq("e", "g", "h", "1"), "z");
  EXPECT_EQ(plus.size(), 13u);
  EXPECT_EQ(plus.size() - S.size(), 3u);
  EXPECT_TRUE(is_isomorphic(plus, named("s_planar_plus")));
}

TEST(Isomorphism, S72VersusStar) {
  EXPECT_FALSE(is_isomorphic(named("s72"), named("s72star")));
  EXPECT_EQ(named("s72star").upper_covers(0).size(), 3u);
  EXPECT_EQ(named("s72").upper_covers(0).size(), 2u);
}

TEST(Isomorphism, MappingIsOrderIsomorphism) {
  const auto A = named("fig4_L");
  const auto B = dual(dual(A));
  const auto f = find_isomorphism(A, direct_product(chain(1), A));
  ASSERT_TRUE(f.has_value());
  const auto P = direct_product(chain(1), A);
  for (Elem x = 0; x < A.size(); ++x)
    for (Elem y = 0; y < A.size(); ++y) EXPECT_EQ(A.leq(x, y), P.leq((*f)[x], (*f)[y]));
  EXPECT_EQ(B, A);
}

TEST(Isomorphism, InvariantAgreesOnIsomorphicPairs) {
  EXPECT_EQ(isomorphism_invariant(boolean_lattice(2)), isomorphism_invariant(direct_product(chain(2), chain(2))));
}

TEST(Lattice, LinearExtension) {
  const auto L = named("m34");
  const auto ext = L.linear_extension();
  ASSERT_EQ(ext.size(), L.size());
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) EXPECT_FALSE(L.less(ext[j], ext[i]));
}
