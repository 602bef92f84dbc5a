#include "latnorm/constructions.hpp"

#include "latnorm/error.hpp"

namespace latnorm {

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw LatticeError(ErrorCode::EmptyLattice, "chain(0) has no elements");
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) labels.emplace_back("0");
    else if (i + 1 == n) labels.emplace_back("1");
    else labels.push_back("x" + std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(i));
  }
  return FiniteLattice::from_cover_indices(std::move(labels), covers);
}

FiniteLattice boolean_lattice(std::size_t k) {
  if (k > 6) throw LatticeError(ErrorCode::TooLarge, "boolean_lattice supports at most 6 atoms");
  const std::size_t n = std::size_t{1} << k;
  const std::size_t full = n - 1;
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (s == 0) labels[s] = "0";
    else if (s == full) labels[s] = "1";
    else
      for (std::size_t b = 0; b < k; ++b)
        if (s & (std::size_t{1} << b)) labels[s] += static_cast<char>('a' + b);
  }
  // Index order by subset code gives a linear extension; order is inclusion.
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) leq[s * n + t] = (s & t) == s;
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const std::size_t n1 = lower.size();
  const std::size_t n2 = upper.size();
  const std::size_t n = n1 + n2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& l : lower.labels()) labels.push_back("l." + l);
  for (const auto& l : upper.labels()) labels.push_back("r." + l);
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool le;
      if (x < n1 && y < n1) le = lower.leq(static_cast<Elem>(x), static_cast<Elem>(y));
      else if (x >= n1 && y >= n1) le = upper.leq(static_cast<Elem>(x - n1), static_cast<Elem>(y - n1));
      else le = x < n1;
      leq[x * n + y] = le;
    }
  }
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

Elem glued_upper_index(const FiniteLattice& lower, const FiniteLattice& upper, Elem x) {
  if (x == upper.bottom()) return lower.top();
  // Non-bottom elements of `upper` keep their relative order.
  Elem offset = x > upper.bottom() ? 1 : 0;
  return static_cast<Elem>(lower.size() + x - offset);
}

FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  const std::size_t n1 = lower.size();
  const std::size_t n = n1 + upper.size() - 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& l : lower.labels()) labels.push_back("l." + l);
  for (Elem y = 0; y < upper.size(); ++y)
    if (y != upper.bottom()) labels.push_back("r." + upper.label(y));
  std::vector<CoverPair> covers(lower.cover_pairs());
  for (const auto& [a, b] : upper.cover_pairs())
    covers.emplace_back(glued_upper_index(lower, upper, a), glued_upper_index(lower, upper, b));
  return FiniteLattice::from_cover_indices(std::move(labels), covers);
}

FiniteLattice direct_product(const FiniteLattice& left, const FiniteLattice& right) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  const std::size_t n = n1 * n2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y) labels.push_back("(" + left.label(x) + ";" + right.label(y) + ")");
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      leq[p * n + q] = left.leq(static_cast<Elem>(p / n2), static_cast<Elem>(q / n2)) &&
                       right.leq(static_cast<Elem>(p % n2), static_cast<Elem>(q % n2));
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

FiniteLattice dual(const FiniteLattice& L) {
  const std::size_t n = L.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = L.leq(y, x);
  return FiniteLattice::from_order(L.labels(), std::move(leq));
}

Interval interval(const FiniteLattice& L, Elem lo, Elem hi) {
  if (lo >= L.size() || hi >= L.size()) throw LatticeError(ErrorCode::UnknownLabel, "interval bound out of range");
  if (!L.leq(lo, hi))
    throw LatticeError(ErrorCode::IntervalEmpty, "'" + L.label(lo) + "' is not below '" + L.label(hi) + "'");
  std::vector<Elem> members;
  for (Elem x = 0; x < L.size(); ++x)
    if (L.leq(lo, x) && L.leq(x, hi)) members.push_back(x);
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem x : members) labels.push_back(L.label(x));
  std::vector<std::uint8_t> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = L.leq(members[i], members[j]);
  return Interval{lo, hi, members, FiniteLattice::from_order(std::move(labels), std::move(leq))};
}

FiniteLattice add_eye(const FiniteLattice& L, const Square& square, std::string label) {
  const auto [lo, x, y, hi] = square;
  for (Elem e : square)
    if (e >= L.size()) throw LatticeError(ErrorCode::UnknownLabel, "square element out of range");
  const bool ok = x != y && L.covers(lo, x) && L.covers(lo, y) && L.covers(x, hi) && L.covers(y, hi) &&
                  L.meet(x, y) == lo && L.join(x, y) == hi;
  if (!ok) {
    throw LatticeError(ErrorCode::NotACoveringSquare, "(" + L.label(lo) + ", " + L.label(x) + ", " + L.label(y) +
                                                          ", " + L.label(hi) + ") is not a covering square");
  }
  if (label.empty()) {
    for (std::size_t k = 1;; ++k) {
      label = "eye" + std::to_string(k);
      if (!L.find(label)) break;
    }
  }
  std::vector<std::string> labels = L.labels();
  labels.push_back(std::move(label));
  std::vector<CoverPair> covers = L.cover_pairs();
  const auto e = static_cast<Elem>(L.size());
  covers.emplace_back(lo, e);
  covers.emplace_back(e, hi);
  return FiniteLattice::from_cover_indices(std::move(labels), covers);
}

}  // namespace latnorm
