#include <gtest/gtest.h>

#include "helpers.hpp"
#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/laws.hpp"
#include "latnorm/patterns.hpp"
#include "latnorm/search.hpp"

using namespace latnorm;
using testing_helpers::named;

namespace {

bool has_subject(const std::vector<LawCheck>& v, const std::string& subject) {
  for (const auto& c : v)
    if (c.subject == subject) return true;
  return false;
}

bool found(const SearchOutcome& o) { return o.status == SearchStatus::Found; }

}  // namespace

TEST(LawSuite, CorpusIsClean) {
  const auto r = run_law_suite(LawSuiteScope::corpus());
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.lattices, corpus().size());
  EXPECT_EQ(r.pairs, 25u);
  for (const char* law : {"i", "ii", "iii", "iv", "v"}) EXPECT_GT(r.checks.count(law) ? r.checks.at(law) : 0, 0u) << law;
  EXPECT_TRUE(has_subject(r.converse_witnesses, "s72star"));
  EXPECT_FALSE(has_subject(r.converse_witnesses, "s72"));
  EXPECT_TRUE(r.budget_exceeded.empty());
}

TEST(LawSuite, EnumeratedIsClean) {
  for (std::size_t n : {6, 8}) {
    const auto r = run_law_suite(LawSuiteScope::enumerated(n));
    EXPECT_TRUE(r.clean()) << n;
    EXPECT_EQ(r.pairs, 16u);
    EXPECT_TRUE(r.budget_exceeded.empty());
  }
  EXPECT_TRUE(run_law_suite(LawSuiteScope::enumerated(6)).converse_witnesses.empty());
}

TEST(LawSuite, ThreadsDoNotChangeTheReport) {
  SearchConfig cfg;
  cfg.threads = 4;
  const auto a = run_law_suite(LawSuiteScope::enumerated(7));
  const auto b = run_law_suite(LawSuiteScope::enumerated(7), cfg);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.converse_witnesses, b.converse_witnesses);
}

TEST(LawSuite, SingleLatticeCounts) {
  LawSuiteReport r;
  check_lattice_laws(boolean_lattice(3), "b3", {}, r);
  EXPECT_EQ(r.checks["i"], 1u);
  EXPECT_EQ(r.checks["ii"], 1u);
  EXPECT_EQ(r.checks["v"], 1u);
  EXPECT_TRUE(r.clean());
  LawSuiteReport p;
  check_pair_laws(chain(2), m3(), "c2+m3", {}, p);
  EXPECT_EQ(p.checks["iv"], 2u);
  EXPECT_TRUE(p.clean());
}

// The same statements, recomputed here straight from the deciders.
TEST(LawSuite, AtomisticEquivalenceByHand) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& L : enumerate_lattices(n, {.atomistic = true})) {
      const bool one = is_1_distributive(L).holds;
      EXPECT_EQ(one, is_boolean(L));
      EXPECT_EQ(one, found(exists_join_distributive_pseudo_tnorm(L)));
      EXPECT_EQ(one, found(exists_left_continuous_tnorm(L)));
    }
}

TEST(LawSuite, ModularForbiddenByHand) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& L : enumerate_lattices(n, {.modular = true}))
      EXPECT_EQ(is_1_distributive(L).holds, !find_forbidden_1_sublattice(L).has_value());
}

TEST(LawSuite, OrdinalSumByHand) {
  std::vector<FiniteLattice> pool;
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto& L : enumerate_lattices(n)) pool.push_back(std::move(L));
  for (const auto& L1 : pool)
    for (const auto& L2 : pool) {
      if (L1.size() + L2.size() > 8) continue;
      const auto S = ordinal_sum(L1, L2);
      EXPECT_EQ(found(exists_left_continuous_tnorm(S)), found(exists_left_continuous_tnorm(L2)));
      EXPECT_EQ(is_1_distributive(S).holds, is_1_distributive(L2).holds);
      EXPECT_EQ(is_1_distributive(glued_sum(L1, L2)).holds, is_1_distributive(L2).holds);
    }
}
