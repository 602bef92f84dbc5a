#include "latnorm/optable.hpp"

#include "latnorm/error.hpp"

namespace latnorm {

OpTable::OpTable(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> cells)
    : lattice_(std::move(lattice)), cells_(std::move(cells)) {
  if (!lattice_) throw LatticeError(ErrorCode::InvalidArgument, "operation table without a lattice");
  const std::size_t n = lattice_->size();
  if (cells_.size() != n * n)
    throw LatticeError(ErrorCode::LatticeMismatch, "table has " + std::to_string(cells_.size()) +
                                                       " cells but the lattice has " + std::to_string(n) +
                                                       " elements");
  for (Elem v : cells_)
    if (v >= n) throw LatticeError(ErrorCode::LatticeMismatch, "table cell holds an element outside the lattice");
}

OpTable::OpTable(const FiniteLattice& lattice, std::vector<Elem> cells)
    : OpTable(std::make_shared<const FiniteLattice>(lattice), std::move(cells)) {}

}  // namespace latnorm
