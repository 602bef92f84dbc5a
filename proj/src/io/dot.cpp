#include <algorithm>
#include <map>

#include "latnorm/io.hpp"

namespace latnorm {

std::string emit_dot(const FiniteLattice& L, const std::vector<Elem>& highlight) {
  auto q = [&](Elem x) { return "\"" + L.label(x) + "\""; };
  std::string out = "// format: 1\ndigraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < L.size(); ++x) {
    out += "  " + q(x);
    if (std::find(highlight.begin(), highlight.end(), x) != highlight.end())
      out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  std::map<std::size_t, std::vector<Elem>> ranks;
  for (Elem x = 0; x < L.size(); ++x) ranks[L.height(x)].push_back(x);
  for (const auto& [h, xs] : ranks) {
    out += "  { rank=same;";
    for (Elem x : xs) out += " " + q(x) + ";";
    out += " }\n";
  }
  for (auto [x, y] : L.cover_pairs()) out += "  " + q(x) + " -> " + q(y) + ";\n";
  return out + "}\n";
}

std::string emit_dot(const FiniteLattice& L, const Witness& witness) {
  std::vector<Elem> xs = witness.elements;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return emit_dot(L, xs);
}

}  // namespace latnorm
