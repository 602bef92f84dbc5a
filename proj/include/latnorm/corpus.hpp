#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// A frozen named lattice. `covers` lists (lower, upper) label pairs.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  std::string provenance;

  FiniteLattice build() const;
  /// FNV-1a of the normalized .lat text.
  std::uint64_t content_hash() const;
};

const std::vector<CorpusEntry>& corpus();
/// nullptr when no entry has that name.
const CorpusEntry* find_corpus_entry(std::string_view name);

}  // namespace latnorm
