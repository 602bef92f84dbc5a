#include <gtest/gtest.h>

#include "../oracles/naive_lattices.hpp"
#include "helpers.hpp"
#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/isomorphism.hpp"
#include "latnorm/patterns.hpp"

using namespace latnorm;
using testing_helpers::code_of;

namespace {

oracle::Matrix to_matrix(const FiniteLattice& L) {
  const std::size_t n = L.size();
  oracle::Matrix m(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m[x][y] = L.leq(x, y);
  return m;
}

bool contains(const std::vector<FiniteLattice>& v, const FiniteLattice& L) {
  for (const auto& M : v)
    if (is_isomorphic(M, L)) return true;
  return false;
}

}  // namespace

TEST(Enumerate, KnownCounts) {
  const std::size_t want[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= kMaxEnumerationSize; ++n) EXPECT_EQ(enumerate_lattices(n).size(), want[n]) << n;
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::string> got;
    for (const auto& L : enumerate_lattices(n)) {
      ASSERT_EQ(L.bottom(), 0u);
      ASSERT_EQ(L.top(), n - 1);
      got.insert(oracle::canonical(to_matrix(L)));
    }
    EXPECT_EQ(got, oracle::all_lattices(n)) << n;
  }
}

TEST(Enumerate, PairwiseNonIsomorphic) {
  const auto all = enumerate_lattices(6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(is_isomorphic(all[i], all[j]));
}

TEST(Enumerate, FiveElementLattices) {
  const auto five = enumerate_lattices(5);
  EXPECT_TRUE(contains(five, chain(5)));
  EXPECT_TRUE(contains(five, m3()));
  EXPECT_TRUE(contains(five, n5()));
}

TEST(Enumerate, Labels) {
  const auto L = enumerate_lattices(4).front();
  EXPECT_EQ(L.label(0), "0");
  EXPECT_EQ(L.label(1), "a");
  EXPECT_EQ(L.label(3), "1");
}

TEST(Enumerate, Limits) {
  EXPECT_EQ(code_of([] { enumerate_lattices(0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { enumerate_lattices(kMaxEnumerationSize + 1); }), ErrorCode::TooLarge);
}

TEST(Enumerate, Filters) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = enumerate_lattices(n);
    std::size_t mod = 0, dist = 0, atom = 0;
    for (const auto& L : all) {
      mod += is_modular(L).holds;
      dist += is_distributive(L).holds;
      atom += is_atomistic(L);
    }
    EXPECT_EQ(enumerate_lattices(n, {.modular = true}).size(), mod);
    EXPECT_EQ(enumerate_lattices(n, {.distributive = true}).size(), dist);
    EXPECT_EQ(enumerate_lattices(n, {.atomistic = true}).size(), atom);
    for (const auto& L : enumerate_lattices(n, {.modular = true, .atomistic = true})) {
      EXPECT_TRUE(is_modular(L).holds);
      EXPECT_TRUE(is_atomistic(L));
    }
  }
  // distributive lattices up to 7 elements: 1 1 1 2 3 5 8
  EXPECT_EQ(enumerate_lattices(7, {.distributive = true}).size(), 8u);
  EXPECT_EQ(enumerate_lattices(5, {.modular = true}).size(), 4u);
}
