#include <algorithm>

#include "latnorm/analysis.hpp"
#include "latnorm/patterns.hpp"

namespace latnorm {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteLattice& L, const FiniteLattice& P, bool require_top)
      : L_(L), P_(P), require_top_(require_top) {
    order_ = P.linear_extension();
    image_.assign(P.size(), 0);
    assigned_.assign(P.size(), false);
    used_.assign(L.size(), false);
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Elem p = order_[depth];
    for (Elem x = 0; x < L_.size(); ++x) {
      if (used_[x] || L_.height(x) < P_.height(p)) continue;
      if (require_top_ && p == P_.top() && x != L_.top()) continue;
      image_[p] = x;
      assigned_[p] = true;
      if (consistent(p)) {
        used_[x] = true;
        if (run(depth + 1)) return true;
        used_[x] = false;
      }
      assigned_[p] = false;
    }
    return false;
  }

  const std::vector<Elem>& image() const { return image_; }

 private:
  bool consistent(Elem p) const {
    const Elem x = image_[p];
    for (Elem q = 0; q < P_.size(); ++q) {
      if (!assigned_[q] || q == p) continue;
      const Elem y = image_[q];
      if (P_.leq(p, q) != L_.leq(x, y) || P_.leq(q, p) != L_.leq(y, x)) return false;
      const Elem m = P_.meet(p, q);
      const Elem j = P_.join(p, q);
      if (assigned_[m] && image_[m] != L_.meet(x, y)) return false;
      if (assigned_[j] && image_[j] != L_.join(x, y)) return false;
    }
    // p may itself be the meet or join of an already assigned pair.
    for (Elem q = 0; q < P_.size(); ++q) {
      if (!assigned_[q]) continue;
      for (Elem r = q; r < P_.size(); ++r) {
        if (!assigned_[r]) continue;
        if (P_.meet(q, r) == p && L_.meet(image_[q], image_[r]) != x) return false;
        if (P_.join(q, r) == p && L_.join(image_[q], image_[r]) != x) return false;
      }
    }
    return true;
  }

  const FiniteLattice& L_;
  const FiniteLattice& P_;
  bool require_top_;
  std::vector<Elem> order_;
  std::vector<Elem> image_;
  std::vector<bool> assigned_;
  std::vector<bool> used_;
};

std::string image_text(const FiniteLattice& L, const std::vector<Elem>& image) {
  std::string out = "{";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += ", ";
    out += L.label(image[i]);
  }
  return out + "}";
}

Witness embedding_witness(const FiniteLattice& L, std::string name, std::vector<Elem> image) {
  std::string detail = name + " embedded as " + image_text(L, image);
  return Witness{WitnessKind::PatternEmbedding, std::move(name), std::move(image), std::move(detail)};
}

}  // namespace

bool is_sublattice_embedding(const FiniteLattice& L, const FiniteLattice& pattern, const std::vector<Elem>& image) {
  if (image.size() != pattern.size()) return false;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= L.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (image[i] == image[j]) return false;
  }
  for (Elem p = 0; p < pattern.size(); ++p)
    for (Elem q = 0; q < pattern.size(); ++q) {
      if (image[pattern.meet(p, q)] != L.meet(image[p], image[q])) return false;
      if (image[pattern.join(p, q)] != L.join(image[p], image[q])) return false;
    }
  return true;
}

std::optional<Witness> find_sublattice_embedding(const FiniteLattice& L, const FiniteLattice& pattern,
                                                 bool require_top) {
  if (pattern.size() > L.size()) return std::nullopt;
  EmbeddingSearch search(L, pattern, require_top);
  if (!search.run()) return std::nullopt;
  return embedding_witness(L, "sublattice", search.image());
}

namespace {

// The candidate sets below follow the element lists that arise for a
// maximal non-1-distributive configuration (a, b, c) in a modular lattice.
// Each builder returns the images of the pattern elements in pattern index
// order.

std::optional<Witness> scan_m3(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  const Elem one = L.top();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (L.comparable(a, b) || L.join(a, b) != one) continue;
      for (Elem c = b + 1; c < n; ++c) {
        if (L.comparable(a, c) || L.comparable(b, c)) continue;
        if (L.join(a, c) != one || L.join(b, c) != one) continue;
        const Elem m = L.meet(a, b);
        if (L.meet(a, c) != m || L.meet(b, c) != m) continue;
        // m3() is indexed 0, a, b, c, 1.
        return embedding_witness(L, "M3", {m, a, b, c, one});
      }
    }
  return std::nullopt;
}

std::optional<Witness> scan_triples(const FiniteLattice& L, const FiniteLattice& pattern, const std::string& name,
                                    std::vector<Elem> (*build)(const FiniteLattice&, Elem, Elem, Elem)) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (a == b || a == c || b == c) continue;
        auto image = build(L, a, b, c);
        if (is_sublattice_embedding(L, pattern, image)) return embedding_witness(L, name, std::move(image));
      }
  return std::nullopt;
}

// m3_2() index order: z, p, q, r, t, s, 1.
std::vector<Elem> build_m3_2(const FiniteLattice& L, Elem a, Elem b, Elem c) {
  const Elem bc = L.join(b, c);
  return {L.meet(a, L.meet(b, c)), L.meet(a, bc), b, c, bc, a, L.top()};
}

// m3_4() index order: z, p, q, r, s, u, w, x, y, 1.
std::vector<Elem> build_m3_4(const FiniteLattice& L, Elem a, Elem b, Elem c) {
  const Elem ac = L.join(a, c);
  const Elem bc = L.join(b, c);
  return {L.meet(a, L.meet(b, c)), L.meet(a, bc), c, L.meet(b, ac), L.meet(ac, bc), a, b, ac, bc, L.top()};
}

}  // namespace

std::optional<Witness> find_forbidden_1_sublattice(const FiniteLattice& L) {
  auto generic = [&](const FiniteLattice& pattern, const char* name) -> std::optional<Witness> {
    auto w = find_sublattice_embedding(L, pattern, true);
    if (w) w->law = name, w->detail = name + w->detail.substr(w->detail.find(' '));
    return w;
  };

  const FiniteLattice diamond = m3();
  if (auto w = scan_m3(L)) return w;
  if (auto w = generic(diamond, "M3")) return w;

  const FiniteLattice seven = m3_2();
  if (auto w = scan_triples(L, seven, "M3,2", build_m3_2)) return w;
  if (auto w = generic(seven, "M3,2")) return w;

  const FiniteLattice ten = m3_4();
  if (auto w = scan_triples(L, ten, "M3,4", build_m3_4)) return w;
  return generic(ten, "M3,4");
}

}  // namespace latnorm
