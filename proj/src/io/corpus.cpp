#include "latnorm/corpus.hpp"
#include "latnorm/io.hpp"

namespace latnorm {

FiniteLattice CorpusEntry::build() const { return FiniteLattice::from_covers(labels, covers); }

std::uint64_t CorpusEntry::content_hash() const { return fnv1a(emit_lattice(build())); }

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"c2", {"0", "1"}, {{"0", "1"}}, "two-element chain"});
  c.push_back({"c3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, "three-element chain"});
  c.push_back({"c4", {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}}, "four-element chain"});
  c.push_back({"b2", {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
               "Boolean lattice on two atoms"});
  c.push_back({"b3",
               {"0", "a", "b", "ab", "c", "ac", "bc", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"b", "ab"}, {"a", "ac"}, {"c", "ac"},
                {"b", "bc"}, {"c", "bc"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}},
               "Boolean lattice on three atoms"});
  c.push_back({"n5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}},
               "pentagon, the smallest non-modular lattice"});
  c.push_back({"m3", {"0", "a", "b", "c", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
               "diamond; modular, not 1-distributive"});
  c.push_back({"m32",
               {"z", "p", "q", "r", "t", "s", "1"},
               {{"z", "p"}, {"z", "q"}, {"z", "r"}, {"p", "t"}, {"q", "t"}, {"r", "t"}, {"p", "s"}, {"s", "1"},
                {"t", "1"}},
               "forbidden 1-sublattice M3,2: diamond z<p,q,r<t with p<s, s and t under 1"});
  c.push_back({"m34",
               {"z", "p", "q", "r", "s", "u", "w", "x", "y", "1"},
               {{"z", "p"}, {"z", "q"}, {"z", "r"}, {"p", "u"}, {"p", "s"}, {"q", "s"}, {"r", "s"}, {"r", "w"},
                {"u", "x"}, {"s", "x"}, {"s", "y"}, {"w", "y"}, {"x", "1"}, {"y", "1"}},
               "forbidden 1-sublattice M3,4: diamond z<p,q,r<s inside a 3x3 grid"});
  c.push_back({"s72",
               {"0", "m", "n", "b", "c", "d", "u", "v", "1"},
               {{"0", "m"}, {"0", "n"}, {"m", "d"}, {"m", "b"}, {"n", "b"}, {"n", "c"}, {"b", "u"}, {"d", "u"},
                {"c", "u"}, {"c", "v"}, {"u", "1"}, {"v", "1"}},
               "not distributive, two atoms; admits no join-distributive pseudo-t-norm; not 1-distributive as built (fails at d, m, v)"});
  c.push_back({"s72star",
               {"0", "m", "n", "b", "c", "d", "u", "v", "1"},
               {{"0", "b"}, {"0", "m"}, {"0", "n"}, {"m", "d"}, {"b", "d"}, {"b", "c"}, {"n", "c"}, {"d", "u"},
                {"c", "u"}, {"c", "v"}, {"u", "1"}, {"v", "1"}},
               "1-distributive, not distributive, three atoms"});
  c.push_back({"s_planar",
               {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"},
               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"d", "e"}, {"c", "e"}, {"c", "f"},
                {"e", "g"}, {"e", "h"}, {"f", "h"}, {"g", "1"}, {"h", "1"}},
               "planar distributive lattice, not rectangular"});
  c.push_back({"s_planar_plus",
               {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1", "x", "y", "z"},
               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"d", "e"}, {"c", "e"}, {"c", "f"},
                {"e", "g"}, {"e", "h"}, {"f", "h"}, {"g", "1"}, {"h", "1"}, {"0", "x"}, {"x", "c"}, {"0", "y"},
                {"y", "c"}, {"e", "z"}, {"z", "1"}},
               "s_planar with eyes x, y in square (0,a,b,c) and z in square (e,g,h,1)"});
  c.push_back({"fig4_L",
               {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"a", "e"}, {"b", "e"}, {"c", "e"}, {"d", "e"},
                {"a", "f"}, {"f", "g"}, {"e", "g"}, {"e", "h"}, {"g", "1"}, {"h", "1"}},
               "planar modular lattice with eyes b, c; carries the planar join-distributive pseudo-t-norm"});
  c.push_back({"m3_capped",
               {"0", "a", "b", "c", "t", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "t"}, {"b", "t"}, {"c", "t"}, {"t", "1"}},
               "diamond with a new top above it; top is join-irreducible"});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace latnorm
