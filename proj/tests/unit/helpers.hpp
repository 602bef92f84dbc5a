#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latnorm/corpus.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"

namespace testing_helpers {

inline latnorm::FiniteLattice named(const std::string& name) {
  const latnorm::CorpusEntry* e = latnorm::find_corpus_entry(name);
  if (!e) throw std::runtime_error("no corpus entry " + name);
  return e->build();
}

inline std::vector<latnorm::Elem> elems(const latnorm::FiniteLattice& L, const std::vector<std::string>& labels) {
  std::vector<latnorm::Elem> out;
  for (const auto& l : labels) out.push_back(L.index_of(l));
  return out;
}

inline std::string data_path(const std::string& file) { return std::string(LATNORM_TEST_DATA) + "/" + file; }

/// Corpus lattices plus every enumerated lattice with 2..max_n elements.
inline std::vector<latnorm::FiniteLattice> sample_lattices(std::size_t max_n = 6) {
  std::vector<latnorm::FiniteLattice> out;
  for (const auto& e : latnorm::corpus()) out.push_back(e.build());
  for (std::size_t n = 2; n <= max_n; ++n)
    for (auto& L : latnorm::enumerate_lattices(n)) out.push_back(std::move(L));
  return out;
}

/// Runs f and returns the code of the LatticeError it throws.
inline std::optional<latnorm::ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const latnorm::LatticeError& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing_helpers
