#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "latnorm/optable.hpp"
#include "latnorm/witness.hpp"

namespace latnorm {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// .lat text:
///
///   format 1            (optional, must precede `elements`)
///   elements 0 a b 1
///   cover 0 a           (a covers 0)
///   # comment
///
/// Parse errors carry the 1-based line number.
FiniteLattice parse_lattice(std::string_view text);
/// Normalized form: format line, elements in index order, covers sorted by
/// (lower, upper) index.
std::string emit_lattice(const FiniteLattice& L);

/// CSV grid: header "T,<labels>", then one row per element starting with its
/// label. Rows and columns may come in any order; cells are labels.
OpTable parse_optable(std::string_view text, std::shared_ptr<const FiniteLattice> L);
OpTable parse_optable(std::string_view text, const FiniteLattice& L);
/// Rows and columns in index order, "\n" line endings.
std::string emit_optable(const OpTable& T);

/// Graphviz digraph with edges pointing up the cover relation and one rank
/// group per height. Highlighted nodes are filled.
std::string emit_dot(const FiniteLattice& L, const std::vector<Elem>& highlight = {});
std::string emit_dot(const FiniteLattice& L, const Witness& witness);

std::uint64_t fnv1a(std::string_view bytes);
/// 16 lowercase hex digits.
std::string hash_hex(std::uint64_t h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace latnorm
