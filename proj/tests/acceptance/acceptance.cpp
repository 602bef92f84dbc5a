// One [PASS]/[FAIL] line per acceptance criterion, with wall time against
// the target. `--expect-fail N` (repeatable) makes the exit status 0 iff
// exactly the listed criteria fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/corpus.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/io.hpp"
#include "latnorm/patterns.hpp"
#include "latnorm/search.hpp"
#include "latnorm/tnorm.hpp"
#include "oracles/naive_lattices.hpp"

using namespace latnorm;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " | failed: " << what;
    }
  }
};

// Tables produced along the way, re-checked by criterion 9.
std::vector<OpTable> g_tables;

void keep(const OpTable& T) {
  if (T.size() <= 12) g_tables.push_back(T);
}

FiniteLattice named(const std::string& name) { return find_corpus_entry(name)->build(); }

bool found(const SearchOutcome& o) { return o.status == SearchStatus::Found; }

SearchConfig all_solutions() {
  SearchConfig cfg;
  cfg.solution_limit = 100'000;
  return cfg;
}

void c1(Outcome& o) {
  const auto L = named("fig4_L");
  const OpTable T = construct_planar(L, L.index_of("f"), L.index_of("h"));
  const OpTable G = parse_optable(read_file(std::string(LATNORM_TEST_DATA) + "/fig4_planar.csv"), L);
  keep(T);
  std::size_t same = 0;
  for (std::size_t i = 0; i < T.cells().size(); ++i) same += T.cells()[i] == G.cells()[i];
  o.notes << same << "/" << G.cells().size() << " cells equal";
  o.require(same == 100 && G.cells().size() == 100, "golden table");
}

void c2(Outcome& o) {
  const auto L = named("fig4_L");
  const OpTable T = parse_optable(read_file(std::string(LATNORM_TEST_DATA) + "/fig4_planar.csv"), L);
  const auto r = verify_tnorm(T);
  o.require(!r.passes(Law::Associative), "associativity reported failing");
  if (!r.evaluated(Law::Associative) || r.passes(Law::Associative)) return;
  const auto& w = r.get(Law::Associative)->witness->elements;
  const Elem lhs = T.at(T.at(w[0], w[1]), w[2]);
  const Elem rhs = T.at(w[0], T.at(w[1], w[2]));
  o.notes << "witness (" << L.label(w[0]) << ", " << L.label(w[1]) << ", " << L.label(w[2]) << "): " << L.label(lhs)
          << " != " << L.label(rhs);
  o.require(w == std::vector<Elem>{L.index_of("f"), L.index_of("g"), L.index_of("h")}, "witness (f, g, h)");
  o.require(L.label(lhs) == "a" && L.label(rhs) == "0", "T(T(f,g),h) = a, T(f,T(g,h)) = 0");
}

void c3(Outcome& o) {
  const auto L = named("s72");
  const auto out = exists_join_distributive_pseudo_tnorm(L);
  const auto one = is_1_distributive(L);
  const bool dist = is_distributive(L).holds;
  o.notes << "search " << to_string(out.status) << " in " << out.nodes_explored << " nodes, complete="
          << out.complete << "; 1-distributive=" << one.holds << "; distributive=" << dist;
  if (one.witness) {
    const auto& w = one.witness->elements;
    o.notes << " (fails at c=" << L.label(w[0]) << ", a=" << L.label(w[1]) << ", b=" << L.label(w[2]) << ")";
  }
  o.require(out.status == SearchStatus::ExhaustedNone && out.complete, "exhausted-none");
  o.require(one.holds, "is_1_distributive(S72) = true");
  o.require(!dist, "is_distributive(S72) = false");
}

void c4(Outcome& o) {
  const std::vector<std::pair<std::string, FiniteLattice>> patterns = {{"M3", m3()}, {"M3,2", m3_2()}, {"M3,4", m3_4()}};
  for (const auto& [name, P] : patterns) {
    const auto w = find_forbidden_1_sublattice(P);
    o.require(w.has_value(), name + " has a witness");
    if (w) o.require(w->law == name, name + " matches itself (got " + w->law + ")");
    o.require(is_modular(P).holds, name + " modular");
    o.require(!is_1_distributive(P).holds, name + " not 1-distributive");
  }
  o.require(!find_forbidden_1_sublattice(boolean_lattice(3)).has_value(), "none on B3");
  o.notes << "3 patterns found, B3 clean";
}

void c5(Outcome& o) {
  std::size_t n_lat = 0, bad = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& L : enumerate_lattices(n, {.modular = true})) {
      ++n_lat;
      if (is_1_distributive(L).holds == find_forbidden_1_sublattice(L).has_value()) ++bad;
    }
  o.notes << n_lat << " modular lattices, " << bad << " counterexamples";
  o.require(bad == 0, "zero counterexamples");
}

void c6(Outcome& o) {
  std::size_t n_lat = 0, bad = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& L : enumerate_lattices(n, {.atomistic = true})) {
      ++n_lat;
      const auto p = exists_join_distributive_pseudo_tnorm(L, all_solutions());
      const auto t = exists_left_continuous_tnorm(L, all_solutions());
      for (const auto& T : p.solutions) keep(T);
      for (const auto& T : t.solutions) keep(T);
      const bool v[4] = {is_1_distributive(L).holds, is_boolean(L), found(p), found(t)};
      if (!(v[0] == v[1] && v[1] == v[2] && v[2] == v[3])) ++bad;
      o.require(p.status != SearchStatus::BudgetExceeded && t.status != SearchStatus::BudgetExceeded, "budget");
    }
  o.notes << n_lat << " atomistic lattices, " << bad << " counterexamples";
  o.require(bad == 0, "zero counterexamples");
}

void c7(Outcome& o) {
  const std::vector<std::string> names = {"c2", "c3", "b2", "m3", "n5"};
  std::size_t pairs = 0, bad = 0, combos = 0;
  for (const auto& a : names) {
    const auto L1 = named(a);
    std::vector<OpTable> lc1 = exists_left_continuous_tnorm(L1, all_solutions()).solutions;
    for (const auto& b : names) {
      const auto L2 = named(b);
      ++pairs;
      const auto S = ordinal_sum(L1, L2);
      const auto on_sum = exists_left_continuous_tnorm(S);
      const auto on_upper = exists_left_continuous_tnorm(L2, all_solutions());
      if (found(on_sum)) keep(on_sum.solutions[0]);
      if (found(on_sum) != found(on_upper)) {
        ++bad;
        o.notes << " [" << a << "+" << b << " sum/upper disagree]";
      }
      // inputs: every left-continuous t-norm found, plus T_M and T_D
      std::vector<OpTable> in1 = lc1, in2 = on_upper.solutions;
      in1.push_back(t_meet(L1));
      in1.push_back(t_weakest(L1));
      in2.push_back(t_meet(L2));
      in2.push_back(t_weakest(L2));
      for (const auto& T1 : in1)
        for (const auto& T2 : in2) {
          if (!verify_tnorm(T1).all_pass() || !verify_tnorm(T2).all_pass()) continue;
          ++combos;
          const bool lc_in = verify_left_continuous(T1).pass() && verify_left_continuous(T2).pass();
          const OpTable G = glued_combine(L1, L2, T1, T2);
          keep(G);
          const bool lc_out = verify_left_continuous(G).pass();
          if (lc_in) {
            const bool all = verify_tnorm(G).all_pass() && verify_pseudo_tnorm(G).all_pass() && lc_out &&
                             verify_join_distributive(G).pass;
            if (!all) ++bad;
          } else if (lc_out) {
            ++bad;
          }
        }
    }
  }
  o.notes << pairs << " pairs, " << combos << " glued combinations, " << bad << " counterexamples";
  o.require(bad == 0, "zero counterexamples");
}

void c8(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& e : corpus()) {
    const auto L = e.build();
    if (L.lower_covers(L.top()).size() != 1) continue;
    ++checked;
    const OpTable T = t_weakest(L);
    keep(T);
    o.require(verify_tnorm(T).all_pass(), e.name + " verify_tnorm");
    o.require(verify_left_continuous(T).pass(), e.name + " left-continuous");
    o.require(is_1_distributive(L).holds, e.name + " 1-distributive");
    o.notes << e.name << " ";
  }
  o.notes << "(" << checked << " lattices)";
  o.require(checked > 0, "at least one lattice");
}

void c9(Outcome& o) {
  std::size_t bad = 0, pass = 0;
  for (const auto& T : g_tables) {
    const auto r = verify_left_continuous(T, ContinuityMode::SubsetSweep);
    const bool jd = verify_join_distributive(T).pass;
    if (r.subset_sweep->pass != jd || r.pairwise.pass != jd) ++bad;
    pass += jd;
  }
  o.notes << g_tables.size() << " tables (" << pass << " left-continuous), " << bad << " disagreements";
  o.require(bad == 0 && !g_tables.empty(), "sweep == pairwise");
}

void c10(Outcome& o) {
  const std::size_t want[] = {1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t got = enumerate_lattices(n).size();
    const std::size_t naive = oracle::all_lattices(n).size();
    o.notes << got << (n < 6 ? "," : "");
    o.require(got == want[n - 1] && naive == want[n - 1], "n = " + std::to_string(n));
  }
}

struct Criterion {
  int id;
  std::string name;
  double target_s;
  void (*run)(Outcome&);
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") expect_fail.insert(std::stoi(argv[++i]));

  const std::vector<Criterion> criteria = {
      {1, "planar table golden reproduction", 1, c1},
      {2, "associativity failure witness", 1, c2},
      {3, "S72: no pseudo-t-norm, 1-distributive, not distributive", 60, c3},
      {4, "forbidden 1-sublattices", 5, c4},
      {5, "modular <=7: 1-distributive iff no forbidden 1-sublattice", 600, c5},
      {6, "atomistic <=6: four conditions equivalent", 600, c6},
      {7, "ordinal sums and glued combinations", 300, c7},
      {8, "join-irreducible top: weakest t-norm, 1-distributive", 10, c8},
      {9, "subset sweep equals pairwise join-distributivity", 120, c9},
      {10, "enumeration counts n = 1..6", 120, c10},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes << " | exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.target_s) o.require(false, "runtime over target");
    if (!o.ok) failed.insert(c.id);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, target < %g s", s, c.target_s);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << "): " << o.notes.str()
              << "\n";
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
  if (!expect_fail.empty()) {
    std::cout << "expected failures:";
    for (int id : expect_fail) std::cout << " " << id;
    std::cout << (failed == expect_fail ? " (matched)\n" : " (NOT matched)\n");
  }
  return failed == expect_fail ? 0 : 1;
}
