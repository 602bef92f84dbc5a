#pragma once

#include <memory>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// A total binary operation on a lattice's elements, stored as a dense
/// row-major table: at(x, y) = T(x, y). The lattice is shared and immutable.
class OpTable {
 public:
  /// Throws LatticeMismatch if `cells` is not |L| x |L| or holds an
  /// out-of-range element.
  OpTable(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> cells);
  OpTable(const FiniteLattice& lattice, std::vector<Elem> cells);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const FiniteLattice>& shared_lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_->size(); }
  Elem at(Elem x, Elem y) const noexcept { return cells_[x * size() + y]; }
  const std::vector<Elem>& cells() const noexcept { return cells_; }

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.cells_ == b.cells_ && *a.lattice_ == *b.lattice_;
  }

 private:
  std::shared_ptr<const FiniteLattice> lattice_;
  std::vector<Elem> cells_;
};

/// Fills a table from a function of two elements.
template <class F>
OpTable make_table(std::shared_ptr<const FiniteLattice> L, F&& f) {
  const std::size_t n = L->size();
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) cells[x * n + y] = f(x, y);
  return OpTable(std::move(L), std::move(cells));
}

}  // namespace latnorm
