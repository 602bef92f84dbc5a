#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latnorm {

/// Elements are identified by their index into the lattice's label list.
using Elem = std::uint32_t;

using CoverPair = std::pair<Elem, Elem>;
using LabelPair = std::pair<std::string, std::string>;

/// An immutable, validated finite lattice.
///
/// Construction computes the reflexive-transitive closure of the supplied
/// relation, rejects cycles, and tabulates meet and join for every pair;
/// any pair without a unique greatest lower / least upper bound is an error.
/// All queries afterwards are table lookups.
class FiniteLattice {
 public:
  /// Builds from labels and cover pairs (x, y) meaning x is covered by y.
  /// Redundant (transitively implied) pairs are accepted and dropped.
  static FiniteLattice from_covers(std::vector<std::string> labels,
                                   const std::vector<LabelPair>& covers);
  static FiniteLattice from_cover_indices(std::vector<std::string> labels,
                                          const std::vector<CoverPair>& covers);
  /// Builds from a full order matrix, row-major: leq[x * n + y] != 0 iff x <= y.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem x) const { return labels_.at(x); }
  std::optional<Elem> find(std::string_view label) const;
  /// Like find(), but throws UnknownLabel.
  Elem index_of(std::string_view label) const;

  bool leq(Elem x, Elem y) const noexcept { return leq_[x * size() + y] != 0; }
  bool less(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const noexcept { return leq(x, y) || leq(y, x); }
  bool covers(Elem lower, Elem upper) const;

  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * size() + y]; }
  /// Join of a set; the empty join is the bottom.
  Elem join_all(std::span<const Elem> xs) const noexcept;
  /// Meet of a set; the empty meet is the top.
  Elem meet_all(std::span<const Elem> xs) const noexcept;

  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Cover relation sorted by (lower, upper).
  const std::vector<CoverPair>& cover_pairs() const noexcept { return covers_; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_covers_.at(x); }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_covers_.at(x); }

  /// Length of the longest chain from the bottom to x.
  std::size_t height(Elem x) const { return height_.at(x); }
  /// Elements sorted by (height, index); a linear extension of the order.
  std::vector<Elem> linear_extension() const;

  /// Structural equality: same labels in the same order and the same order.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice() = default;

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<Elem>> lower_covers_;
  std::vector<std::vector<Elem>> upper_covers_;
  std::vector<std::size_t> height_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// The closed interval [lo, hi] of a parent lattice together with its
/// induced lattice. Members are parent indices in ascending order; index i
/// of `lattice` corresponds to parent element members[i].
struct Interval {
  Elem lo = 0;
  Elem hi = 0;
  std::vector<Elem> members;
  FiniteLattice lattice;

  Elem to_parent(Elem x) const { return members.at(x); }
  std::optional<Elem> from_parent(Elem x) const;
};

/// Labels must be non-empty and free of whitespace, commas, double quotes and
/// a leading '#', so that they survive every text format unchanged.
bool is_valid_label(std::string_view label);

}  // namespace latnorm
