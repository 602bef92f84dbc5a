#include "latnorm/patterns.hpp"

namespace latnorm {

FiniteLattice n5() {
  return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice m3() {
  return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice m3_2() {
  return FiniteLattice::from_covers(
      {"z", "p", "q", "r", "t", "s", "1"},
      {{"z", "p"}, {"z", "q"}, {"z", "r"}, {"p", "t"}, {"q", "t"}, {"r", "t"}, {"p", "s"}, {"s", "1"}, {"t", "1"}});
}

FiniteLattice m3_4() {
  return FiniteLattice::from_covers({"z", "p", "q", "r", "s", "u", "w", "x", "y", "1"},
                                    {{"z", "p"},
                                     {"z", "q"},
                                     {"z", "r"},
                                     {"p", "u"},
                                     {"p", "s"},
                                     {"q", "s"},
                                     {"r", "s"},
                                     {"r", "w"},
                                     {"u", "x"},
                                     {"s", "x"},
                                     {"s", "y"},
                                     {"w", "y"},
                                     {"x", "1"},
                                     {"y", "1"}});
}

}  // namespace latnorm
