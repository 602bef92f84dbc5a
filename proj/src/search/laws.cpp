#include <algorithm>

#include "latnorm/analysis.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/corpus.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/laws.hpp"

namespace latnorm {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

// nullopt when the budget ran out.
std::optional<bool> found(const FiniteLattice& L, SearchConfig cfg, bool tnorm) {
  cfg.require_associative = tnorm;
  cfg.require_commutative = true;
  cfg.solution_limit = 1;
  const SearchOutcome out = search_operations(L, cfg);
  if (out.status == SearchStatus::BudgetExceeded) return std::nullopt;
  return out.status == SearchStatus::Found;
}

void record(LawSuiteReport& r, const std::string& law, bool holds, const std::string& subject,
            const std::string& detail) {
  ++r.checks[law];
  if (!holds) r.counterexamples.push_back({law, subject, detail});
}

}  // namespace

void check_lattice_laws(const FiniteLattice& L, const std::string& name, const SearchConfig& cfg,
                        LawSuiteReport& report) {
  ++report.lattices;
  const bool one_dist = static_cast<bool>(is_1_distributive(L));
  const bool modular = static_cast<bool>(is_modular(L));
  const auto pseudo = found(L, cfg, false);
  const auto tnorm = found(L, cfg, true);
  if (!pseudo || !tnorm) report.budget_exceeded.push_back(name);

  if (is_atomistic(L) && pseudo && tnorm) {
    const bool boolean = is_boolean(L);
    const bool agree = one_dist == boolean && boolean == *pseudo && *pseudo == *tnorm;
    record(report, "i", agree, name,
           std::string("1-distributive ") + yn(one_dist) + ", Boolean " + yn(boolean) + ", pseudo-t-norm " +
               yn(*pseudo) + ", t-norm " + yn(*tnorm));
  }
  if (modular) {
    const auto forbidden = find_forbidden_1_sublattice(L);
    record(report, "ii", one_dist == !forbidden, name,
           std::string("1-distributive ") + yn(one_dist) + ", forbidden 1-sublattice " +
               (forbidden ? forbidden->law : std::string("none")));
  }
  if (modular && is_rectangular_algebraic(L).holds && pseudo && tnorm) {
    const bool dist = static_cast<bool>(is_distributive(L));
    const bool agree = one_dist == dist && dist == *pseudo && *pseudo == *tnorm;
    record(report, "iii", agree, name,
           std::string("1-distributive ") + yn(one_dist) + ", distributive " + yn(dist) + ", pseudo-t-norm " +
               yn(*pseudo) + ", t-norm " + yn(*tnorm) + " (boundary unchecked)");
  }
  if (pseudo && tnorm) {
    const bool any = *pseudo || *tnorm;
    record(report, "v", !any || one_dist, name, std::string("search found ") + yn(any) + ", 1-distributive " + yn(one_dist));
    if (one_dist && !*pseudo)
      report.converse_witnesses.push_back({"v", name, "1-distributive but no join-distributive pseudo-t-norm"});
  }
}

void check_pair_laws(const FiniteLattice& lower, const FiniteLattice& upper, const std::string& name,
                     const SearchConfig& cfg, LawSuiteReport& report) {
  ++report.pairs;
  const FiniteLattice sum = ordinal_sum(lower, upper);
  const auto on_sum = found(sum, cfg, true);
  const auto on_upper = found(upper, cfg, true);
  if (on_sum && on_upper)
    record(report, "iv", *on_sum == *on_upper, name,
           std::string("t-norm on ordinal sum ") + yn(*on_sum) + ", on upper " + yn(*on_upper));
  else
    report.budget_exceeded.push_back(name);
  const bool upper_1d = static_cast<bool>(is_1_distributive(upper));
  const bool sum_1d = static_cast<bool>(is_1_distributive(sum));
  const bool glued_1d = static_cast<bool>(is_1_distributive(glued_sum(lower, upper)));
  record(report, "iv", sum_1d == upper_1d && glued_1d == upper_1d, name,
         std::string("1-distributive: ordinal sum ") + yn(sum_1d) + ", glued sum " + yn(glued_1d) + ", upper " +
             yn(upper_1d));
}

LawSuiteReport run_law_suite(const LawSuiteScope& scope, const SearchConfig& cfg) {
  LawSuiteReport report;
  std::vector<std::pair<std::string, FiniteLattice>> singles, pair_pool;
  if (scope.kind == LawSuiteScope::Kind::Corpus) {
    report.scope = "corpus";
    for (const auto& e : corpus()) singles.emplace_back(e.name, e.build());
    for (const char* name : {"c2", "c3", "b2", "m3", "n5"}) pair_pool.emplace_back(name, find_corpus_entry(name)->build());
  } else {
    report.scope = "enumerated(" + std::to_string(scope.n) + ")";
    for (std::size_t k = 2; k <= scope.n; ++k) {
      const auto ls = enumerate_lattices(k);
      for (std::size_t i = 0; i < ls.size(); ++i) {
        std::string name = "n" + std::to_string(k) + "#" + std::to_string(i);
        if (k <= 4) pair_pool.emplace_back(name, ls[i]);
        singles.emplace_back(std::move(name), ls[i]);
      }
    }
  }
  for (const auto& [name, L] : singles) check_lattice_laws(L, name, cfg, report);
  for (const auto& [n1, L1] : pair_pool)
    for (const auto& [n2, L2] : pair_pool) check_pair_laws(L1, L2, n1 + " + " + n2, cfg, report);
  return report;
}

}  // namespace latnorm
