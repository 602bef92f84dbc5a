#include <algorithm>
#include <map>

#include "latnorm/analysis.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/error.hpp"
#include "latnorm/isomorphism.hpp"

namespace latnorm {

namespace {

using Mask = std::uint32_t;

// Builds the lattice bottom-up. Each new element gets a nonempty antichain of
// existing elements as its lower covers; elements are added in order of
// height, and within a height by lexicographic lower-cover list, which every
// lattice admits. Every prefix is a down-set of the final lattice and must
// already be a meet-semilattice, so capping with a top always yields a lattice.
class Generator {
 public:
  explicit Generator(std::size_t n) : n_(n) {}

  std::vector<FiniteLattice> run() {
    down_.push_back(1);
    height_.push_back(0);
    extend({0, {}});
    return std::move(out_);
  }

 private:
  using Key = std::pair<std::size_t, std::vector<Elem>>;

  bool has_meet(Elem x, Elem y) const {
    const Mask common = down_[x] & down_[y];
    for (Elem z = 0; z < down_.size(); ++z)
      if ((common >> z & 1) && down_[z] == common) return true;
    return false;
  }

  void extend(const Key& last) {
    const std::size_t k = down_.size();
    if (k + 1 == n_) {
      finish();
      return;
    }
    for (Mask s = 1; s < (Mask{1} << k); ++s) {
      std::vector<Elem> covers;
      bool antichain = true;
      std::size_t h = 0;
      Mask below = 0;
      for (Elem x = 0; x < k; ++x) {
        if (!(s >> x & 1)) continue;
        for (Elem y : covers)
          if ((down_[x] >> y & 1) || (down_[y] >> x & 1)) antichain = false;
        covers.push_back(x);
        h = std::max(h, height_[x] + 1);
        below |= down_[x];
      }
      if (!antichain) continue;
      Key key{h, covers};
      if (key < last) continue;
      down_.push_back(below | (Mask{1} << k));
      height_.push_back(h);
      bool ok = true;
      for (Elem x = 0; x < k && ok; ++x) ok = has_meet(x, static_cast<Elem>(k));
      if (ok) extend(key);
      down_.pop_back();
      height_.pop_back();
    }
  }

  void finish() {
    std::vector<std::string> labels;
    labels.push_back("0");
    for (std::size_t i = 1; i + 1 < n_; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    if (n_ > 1) labels.push_back("1");
    std::vector<std::uint8_t> leq(n_ * n_, 0);
    for (std::size_t y = 0; y < down_.size(); ++y)
      for (std::size_t x = 0; x < down_.size(); ++x)
        if (down_[y] >> x & 1) leq[x * n_ + y] = 1;
    if (n_ > 1)
      for (std::size_t x = 0; x < n_; ++x) leq[x * n_ + n_ - 1] = 1;
    FiniteLattice L = FiniteLattice::from_order(std::move(labels), std::move(leq));
    auto& bucket = buckets_[isomorphism_invariant(L)];
    for (std::size_t i : bucket)
      if (is_isomorphic(out_[i], L)) return;
    bucket.push_back(out_.size());
    out_.push_back(std::move(L));
  }

  std::size_t n_;
  std::vector<Mask> down_;
  std::vector<std::size_t> height_;
  std::vector<FiniteLattice> out_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(std::size_t n, EnumerationFilters filters) {
  if (n == 0) throw LatticeError(ErrorCode::InvalidArgument, "a lattice has at least one element");
  if (n > kMaxEnumerationSize)
    throw LatticeError(ErrorCode::TooLarge, "enumeration is limited to " + std::to_string(kMaxEnumerationSize) +
                                                " elements, got " + std::to_string(n));
  std::vector<FiniteLattice> all;
  if (n == 1)
    all.push_back(FiniteLattice::from_order({"0"}, {1}));
  else
    all = Generator(n).run();
  std::vector<FiniteLattice> out;
  for (auto& L : all) {
    if (filters.modular && !is_modular(L)) continue;
    if (filters.atomistic && !is_atomistic(L)) continue;
    if (filters.distributive && !is_distributive(L)) continue;
    out.push_back(std::move(L));
  }
  return out;
}

}  // namespace latnorm
