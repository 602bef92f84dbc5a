#include "latnorm/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace latnorm {

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

Signature signature(const FiniteLattice& L, Elem x) {
  return {L.height(x), L.lower_covers(x).size(), L.upper_covers(x).size()};
}

class Matcher {
 public:
  Matcher(const FiniteLattice& a, const FiniteLattice& b) : a_(a), b_(b) {
    order_ = a.linear_extension();
    image_.assign(a.size(), 0);
    used_.assign(b.size(), false);
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Elem x = order_[depth];
    const Signature sx = signature(a_, x);
    for (Elem y = 0; y < b_.size(); ++y) {
      if (used_[y] || signature(b_, y) != sx) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Elem w = order_[k];
        const Elem v = image_[w];
        consistent = a_.leq(w, x) == b_.leq(v, y) && a_.leq(x, w) == b_.leq(y, v);
      }
      if (!consistent) continue;
      image_[x] = y;
      used_[y] = true;
      if (run(depth + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  std::vector<Elem> image() const { return image_; }

 private:
  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Elem> order_;
  std::vector<Elem> image_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<std::size_t> isomorphism_invariant(const FiniteLattice& L) {
  std::vector<Signature> sigs;
  sigs.reserve(L.size());
  for (Elem x = 0; x < L.size(); ++x) sigs.push_back(signature(L, x));
  std::sort(sigs.begin(), sigs.end());
  std::vector<std::size_t> out{L.size(), L.cover_pairs().size()};
  for (const auto& [h, lo, up] : sigs) {
    out.push_back(h);
    out.push_back(lo);
    out.push_back(up);
  }
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size() || a.cover_pairs().size() != b.cover_pairs().size()) return std::nullopt;
  if (isomorphism_invariant(a) != isomorphism_invariant(b)) return std::nullopt;
  Matcher m(a, b);
  if (!m.run()) return std::nullopt;
  return m.image();
}

}  // namespace latnorm
