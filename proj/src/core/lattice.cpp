#include "latnorm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "latnorm/error.hpp"

namespace latnorm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::EmptyLattice: return "EmptyLattice";
    case ErrorCode::IntervalEmpty: return "IntervalEmpty";
    case ErrorCode::NotACoveringSquare: return "NotACoveringSquare";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::SubsetSweepTooLarge: return "SubsetSweepTooLarge";
    case ErrorCode::NotAnOrdinalCut: return "NotAnOrdinalCut";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PostVerificationFailed: return "PostVerificationFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_valid_label(std::string_view label) {
  if (label.empty() || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ',' || c == '"' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw LatticeError(ErrorCode::EmptyLattice, "a lattice needs at least one element");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!is_valid_label(l)) throw LatticeError(ErrorCode::InvalidLabel, "invalid label '" + l + "'");
    if (!seen.insert(l).second) throw LatticeError(ErrorCode::DuplicateLabel, "label '" + l + "' declared twice");
  }
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> labels,
                                         const std::vector<LabelPair>& covers) {
  check_labels(labels);
  auto lookup = [&](const std::string& l) -> Elem {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw LatticeError(ErrorCode::UnknownLabel, "cover references undeclared label '" + l + "'");
    return static_cast<Elem>(it - labels.begin());
  };
  std::vector<CoverPair> idx;
  idx.reserve(covers.size());
  for (const auto& [lo, hi] : covers) idx.emplace_back(lookup(lo), lookup(hi));
  return from_cover_indices(std::move(labels), idx);
}

FiniteLattice FiniteLattice::from_cover_indices(std::vector<std::string> labels,
                                                const std::vector<CoverPair>& covers) {
  check_labels(labels);
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw LatticeError(ErrorCode::UnknownLabel, "cover index out of range");
    if (lo == hi) throw LatticeError(ErrorCode::CycleDetected, "'" + labels[lo] + "' cannot cover itself");
    leq[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw LatticeError(ErrorCode::CycleDetected,
                           "covers imply '" + labels[i] + "' < '" + labels[j] + "' < '" + labels[i] + "'");
  return from_order(std::move(labels), std::move(leq));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw LatticeError(ErrorCode::InvalidArgument, "order matrix has the wrong size");
  for (auto& v : leq) v = v ? 1 : 0;
  const std::vector<std::uint8_t>* matrix = &leq;
  auto le = [&](std::size_t x, std::size_t y) { return (*matrix)[x * n + y] != 0; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!le(i, i)) throw LatticeError(ErrorCode::InvalidArgument, "order matrix is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le(i, j) && le(j, i))
        throw LatticeError(ErrorCode::CycleDetected, "'" + labels[i] + "' and '" + labels[j] + "' are mutually below each other");
      if (le(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (le(j, k) && !le(i, k)) throw LatticeError(ErrorCode::InvalidArgument, "order matrix is not transitive");
    }
  }

  FiniteLattice L;
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  matrix = &L.leq_;
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);

  // Greatest common lower bound / least common upper bound by scanning the
  // candidate bound sets.
  std::vector<Elem> bounds;
  bounds.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool lower = pass == 0;
        bounds.clear();
        for (std::size_t z = 0; z < n; ++z) {
          if (lower ? (le(z, x) && le(z, y)) : (le(x, z) && le(y, z))) bounds.push_back(static_cast<Elem>(z));
        }
        std::optional<Elem> best;
        for (Elem c : bounds) {
          bool extreme = std::all_of(bounds.begin(), bounds.end(),
                                     [&](Elem z) { return lower ? le(z, c) : le(c, z); });
          if (extreme) {
            best = c;
            break;
          }
        }
        if (!best) {
          throw LatticeError(ErrorCode::NotALattice,
                             "'" + L.labels_[x] + "' and '" + L.labels_[y] + "' have no " +
                                 (lower ? "greatest lower bound" : "least upper bound"));
        }
        auto& table = lower ? L.meet_ : L.join_;
        table[x * n + y] = *best;
        table[y * n + x] = *best;
      }
    }
  }

  L.bottom_ = L.meet_[0];
  L.top_ = L.join_[0];
  for (std::size_t x = 0; x < n; ++x) {
    L.bottom_ = L.meet_[L.bottom_ * n + x];
    L.top_ = L.join_[L.top_ * n + x];
  }

  L.lower_covers_.assign(n, {});
  L.upper_covers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) direct = false;
      if (direct) {
        L.covers_.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
        L.upper_covers_[x].push_back(static_cast<Elem>(y));
        L.lower_covers_[y].push_back(static_cast<Elem>(x));
      }
    }
  }

  // Heights in an order compatible with <: process by number of elements below.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      if (le(z, x)) ++below[x];
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
  L.height_.assign(n, 0);
  for (Elem x : order)
    for (Elem lo : L.lower_covers_[x]) L.height_[x] = std::max(L.height_[x], L.height_[lo] + 1);
  return L;
}

std::optional<Elem> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem FiniteLattice::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw LatticeError(ErrorCode::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

bool FiniteLattice::covers(Elem lower, Elem upper) const {
  const auto& ups = upper_covers_.at(lower);
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

Elem FiniteLattice::join_all(std::span<const Elem> xs) const noexcept {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteLattice::meet_all(std::span<const Elem> xs) const noexcept {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Elem> FiniteLattice::linear_extension() const {
  std::vector<Elem> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return height_[a] < height_[b]; });
  return order;
}

std::optional<Elem> Interval::from_parent(Elem x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return std::nullopt;
  return static_cast<Elem>(it - members.begin());
}

}  // namespace latnorm
