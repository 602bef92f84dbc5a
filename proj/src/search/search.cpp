#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "latnorm/analysis.hpp"
#include "latnorm/error.hpp"
#include "latnorm/search.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted-none";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

using Values = std::vector<Elem>;
using Check = std::function<bool(const Values&)>;

// Variables are decided in index order; checks_at[k] runs once variable k is
// assigned and must only read variables <= k.
struct Problem {
  std::vector<std::vector<Elem>> domains;
  std::vector<std::vector<Check>> checks_at;
  std::vector<Check> at_leaf;
  std::function<OpTable(const Values&)> decode;

  std::size_t size() const { return domains.size(); }
  void add(std::size_t trigger, Check c) { checks_at.at(trigger).push_back(std::move(c)); }
};

struct Shared {
  std::uint64_t budget;
  std::size_t limit;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> first_full_branch{std::numeric_limits<std::size_t>::max()};
};

class Dfs {
 public:
  Dfs(const Problem& p, Shared& s, std::size_t branch) : p_(p), s_(s), branch_(branch), vals_(p.size()) {}

  std::vector<Values> found;
  bool limit_stop = false;

  // Explores the subtree below `depth` with variables < depth fixed.
  void run_from(std::size_t depth, const Values& prefix) {
    std::copy(prefix.begin(), prefix.end(), vals_.begin());
    descend(depth);
  }

  // Assigns variable 0 to `v` and explores below it.
  void run_branch(Elem v) {
    if (!tick()) return;
    vals_[0] = v;
    if (consistent(0)) descend(1);
  }

 private:
  bool tick() {
    if (s_.budget_hit.load(std::memory_order_relaxed)) return false;
    if (s_.first_full_branch.load(std::memory_order_relaxed) < branch_) return false;
    if (s_.nodes.fetch_add(1, std::memory_order_relaxed) >= s_.budget) {
      s_.budget_hit = true;
      return false;
    }
    return true;
  }

  bool consistent(std::size_t k) const {
    for (const auto& c : p_.checks_at[k])
      if (!c(vals_)) return false;
    return true;
  }

  // Returns false to abandon the whole search.
  bool descend(std::size_t k) {
    if (k == p_.size()) {
      for (const auto& c : p_.at_leaf)
        if (!c(vals_)) return true;
      found.push_back(vals_);
      if (found.size() >= s_.limit) {
        limit_stop = true;
        std::size_t cur = s_.first_full_branch.load();
        while (branch_ < cur && !s_.first_full_branch.compare_exchange_weak(cur, branch_)) {
        }
        return false;
      }
      return true;
    }
    for (Elem v : p_.domains[k]) {
      if (!tick()) return false;
      vals_[k] = v;
      if (consistent(k) && !descend(k + 1)) return false;
    }
    return true;
  }

  const Problem& p_;
  Shared& s_;
  std::size_t branch_;
  Values vals_;
};

struct RawOutcome {
  std::vector<Values> solutions;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool limit_stop = false;
};

RawOutcome solve(const Problem& p, const SearchConfig& cfg) {
  Shared shared;
  shared.budget = cfg.node_budget;
  shared.limit = std::max<std::size_t>(cfg.solution_limit, 1);
  RawOutcome out;
  if (cfg.threads <= 1 || p.size() == 0) {
    Dfs dfs(p, shared, 0);
    dfs.run_from(0, {});
    out.solutions = std::move(dfs.found);
    out.limit_stop = dfs.limit_stop;
  } else {
    const auto& first = p.domains[0];
    std::vector<std::vector<Values>> per_branch(first.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b = next++; b < first.size(); b = next++) {
        Dfs dfs(p, shared, b);
        dfs.run_branch(first[b]);
        per_branch[b] = std::move(dfs.found);
      }
    };
    std::vector<std::jthread> pool;
    const unsigned count = std::min<unsigned>(cfg.threads, static_cast<unsigned>(first.size()));
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    pool.clear();
    for (auto& branch : per_branch)
      for (auto& v : branch)
        if (out.solutions.size() < shared.limit) out.solutions.push_back(std::move(v));
    out.limit_stop = out.solutions.size() >= shared.limit;
  }
  out.nodes = std::min(shared.nodes.load(), shared.budget);
  out.budget_hit = shared.budget_hit && !out.limit_stop;
  return out;
}

std::vector<Elem> down_set(const FiniteLattice& L, Elem x) {
  std::vector<Elem> out;
  for (Elem z = 0; z < L.size(); ++z)
    if (L.leq(z, x)) out.push_back(z);
  return out;
}

// Commutative mode: variables are F(p, q) = T(J[p], J[q]) for p <= q over the
// nonzero join-irreducibles J in height order, visited as a growing square.
Problem commutative_problem(const FiniteLattice& L, std::shared_ptr<const FiniteLattice> shared,
                            bool associative) {
  std::vector<Elem> J;
  for (Elem x : L.linear_extension())
    if (x != L.bottom() && is_join_irreducible(L, x)) J.push_back(x);
  const std::size_t m = J.size();
  const std::size_t n = L.size();

  std::vector<std::vector<std::size_t>> var(m, std::vector<std::size_t>(m));
  Problem p;
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r <= q; ++r) {
      var[r][q] = var[q][r] = p.domains.size();
      p.domains.push_back(down_set(L, L.meet(J[r], J[q])));
    }
  p.checks_at.resize(p.size());

  // below[x]: positions in J of the join-irreducibles under x
  std::vector<std::vector<std::size_t>> below(n);
  for (Elem x = 0; x < n; ++x)
    for (std::size_t q = 0; q < m; ++q)
      if (L.leq(J[q], x)) below[x].push_back(q);

  auto T = [&L, var, below](const Values& v, Elem x, Elem y) {
    Elem acc = L.bottom();
    for (std::size_t a : below[x])
      for (std::size_t b : below[y]) acc = L.join(acc, v[var[a][b]]);
    return acc;
  };
  auto trigger = [&](std::initializer_list<std::pair<const std::vector<std::size_t>*, const std::vector<std::size_t>*>>
                         blocks,
                     std::size_t base) {
    std::size_t t = base;
    for (auto [xs, ys] : blocks)
      for (std::size_t a : *xs)
        for (std::size_t b : *ys) t = std::max(t, var[a][b]);
    return t;
  };

  // monotone: F(r, q) <= F(r, q') whenever J[q] < J[q']
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t q2 = 0; q2 < m; ++q2)
        if (L.less(J[q], J[q2])) {
          const std::size_t lo = var[r][q], hi = var[r][q2];
          p.add(std::max(lo, hi), [&L, lo, hi](const Values& v) { return L.leq(v[lo], v[hi]); });
        }

  // T(1, j) = j: some i >= j has F(i, j) = j
  for (std::size_t q = 0; q < m; ++q) {
    std::vector<std::size_t> cells;
    for (std::size_t r = 0; r < m; ++r)
      if (L.leq(J[q], J[r])) cells.push_back(var[r][q]);
    const std::size_t t = *std::max_element(cells.begin(), cells.end());
    const Elem j = J[q];
    p.add(t, [cells, j](const Values& v) {
      return std::any_of(cells.begin(), cells.end(), [&](std::size_t c) { return v[c] == j; });
    });
  }

  // each row y -> T(J[r], y) preserves binary joins
  for (std::size_t r = 0; r < m; ++r)
    for (Elem w = 0; w < n; ++w) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem y1 = 0; y1 < n; ++y1)
        for (Elem y2 = y1 + 1; y2 < n; ++y2)
          if (!L.comparable(y1, y2) && L.join(y1, y2) == w) pairs.emplace_back(y1, y2);
      if (pairs.empty()) continue;
      std::size_t t = 0;
      for (std::size_t q : below[w]) t = std::max(t, var[r][q]);
      std::vector<std::size_t> row(m);
      for (std::size_t q = 0; q < m; ++q) row[q] = var[r][q];
      p.add(t, [&L, pairs, row, below, w](const Values& v) {
        auto g = [&](Elem y) {
          Elem acc = L.bottom();
          for (std::size_t q : below[y]) acc = L.join(acc, v[row[q]]);
          return acc;
        };
        const Elem gw = g(w);
        for (auto [y1, y2] : pairs)
          if (L.join(g(y1), g(y2)) != gw) return false;
        return true;
      });
    }

  if (associative) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = a; c < m; ++c) {
          const std::size_t ab = var[a][b], bc = var[b][c];
          const auto& lo_ab = below[L.meet(J[a], J[b])];
          const auto& lo_bc = below[L.meet(J[b], J[c])];
          const std::size_t t = trigger({{&lo_ab, &below[J[c]]}, {&below[J[a]], &lo_bc}}, std::max(ab, bc));
          const Elem x = J[a], z = J[c];
          p.add(t, [T, ab, bc, x, z](const Values& v) { return T(v, v[ab], z) == T(v, x, v[bc]); });
        }
  }

  p.decode = [shared, T](const Values& v) {
    return make_table(shared, [&](Elem x, Elem y) { return T(v, x, y); });
  };
  return p;
}

// Non-commutative mode: every cell off the boundary rows/columns is a
// variable, row by row.
Problem cell_problem(const FiniteLattice& L, std::shared_ptr<const FiniteLattice> shared, bool associative) {
  const std::size_t n = L.size();
  std::vector<Elem> inner;
  for (Elem x : L.linear_extension())
    if (x != L.bottom() && x != L.top()) inner.push_back(x);
  constexpr std::size_t kFixed = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> var(n * n, kFixed);
  Problem p;
  for (Elem x : inner)
    for (Elem y : inner) {
      var[x * n + y] = p.domains.size();
      p.domains.push_back(down_set(L, x));
    }
  p.checks_at.resize(p.size());

  auto T = [&L, var, n](const Values& v, Elem x, Elem y) -> Elem {
    if (x == L.bottom() || y == L.bottom()) return L.bottom();
    if (x == L.top()) return y;
    if (y == L.top()) return x;
    return v[var[x * n + y]];
  };
  auto pos = [&](Elem x, Elem y) { return var[x * n + y] == kFixed ? 0 : var[x * n + y]; };

  for (Elem x : inner)
    for (Elem y1 = 0; y1 < n; ++y1)
      for (Elem y2 = y1 + 1; y2 < n; ++y2) {
        if (L.comparable(y1, y2)) continue;
        const Elem w = L.join(y1, y2);
        const std::size_t t = std::max({pos(x, y1), pos(x, y2), pos(x, w)});
        p.add(t, [&L, T, x, y1, y2, w](const Values& v) { return T(v, x, w) == L.join(T(v, x, y1), T(v, x, y2)); });
      }
  // comparable pairs: join-distributivity reduces to monotonicity along covers
  for (Elem x : inner)
    for (const auto& [lo, hi] : L.cover_pairs()) {
      const std::size_t t = std::max(pos(x, lo), pos(x, hi));
      p.add(t, [&L, T, x, lo, hi](const Values& v) { return L.leq(T(v, x, lo), T(v, x, hi)); });
    }
  if (associative) {
    p.at_leaf.push_back([&L, T, n](const Values& v) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          for (Elem z = 0; z < n; ++z)
            if (T(v, T(v, x, y), z) != T(v, x, T(v, y, z))) return false;
      return true;
    });
  }
  p.decode = [shared, T](const Values& v) {
    return make_table(shared, [&](Elem x, Elem y) { return T(v, x, y); });
  };
  return p;
}

void reverify(const OpTable& T, const SearchConfig& cfg) {
  std::vector<Law> laws = {Law::T1, Law::Monotone, Law::JoinDistributive};
  if (cfg.require_commutative) laws.push_back(Law::Commutative);
  if (cfg.require_associative) {
    laws.push_back(Law::Associative);
    laws.push_back(Law::Neutral);
  }
  const VerificationReport report = verify_laws(T, laws);
  if (!report.all_pass()) {
    for (Law law : laws)
      if (!report.passes(law))
        throw LatticeError(ErrorCode::PostVerificationFailed,
                           "search produced a table failing " + std::string(to_string(law)) + ": " +
                               report.get(law)->witness->detail);
  }
}

}  // namespace

SearchOutcome search_operations(const FiniteLattice& L, const SearchConfig& cfg) {
  if (cfg.node_budget == 0) throw LatticeError(ErrorCode::InvalidArgument, "node budget must be positive");
  if (cfg.solution_limit == 0) throw LatticeError(ErrorCode::InvalidArgument, "solution limit must be positive");
  auto shared = std::make_shared<const FiniteLattice>(L);
  const Problem p = cfg.require_commutative ? commutative_problem(*shared, shared, cfg.require_associative)
                                            : cell_problem(*shared, shared, cfg.require_associative);
  RawOutcome raw = solve(p, cfg);
  SearchOutcome out;
  out.nodes_explored = raw.nodes;
  out.complete = !raw.budget_hit && !raw.limit_stop;
  for (const auto& v : raw.solutions) {
    OpTable T = p.decode(v);
    reverify(T, cfg);
    out.solutions.push_back(std::move(T));
  }
  if (!out.solutions.empty())
    out.status = SearchStatus::Found;
  else
    out.status = raw.budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone;
  return out;
}

SearchOutcome exists_join_distributive_pseudo_tnorm(const FiniteLattice& L, SearchConfig cfg) {
  return search_operations(L, cfg);
}

SearchOutcome exists_left_continuous_tnorm(const FiniteLattice& L, SearchConfig cfg) {
  cfg.require_associative = true;
  return search_operations(L, cfg);
}

OpTable expand_from_join_irreducibles(const OpTable& T) {
  const FiniteLattice& L = T.lattice();
  std::vector<Elem> J;
  for (Elem x = 0; x < L.size(); ++x)
    if (x != L.bottom() && is_join_irreducible(L, x)) J.push_back(x);
  return make_table(T.shared_lattice(), [&](Elem x, Elem y) {
    Elem acc = L.bottom();
    for (Elem j : J)
      if (L.leq(j, y)) acc = L.join(acc, T.at(x, j));
    return acc;
  });
}

}  // namespace latnorm
