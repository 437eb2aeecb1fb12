#pragma once

// Diagram fixtures shared by unit and acceptance tests.

#include "lowdim/wirtinger.hpp"

namespace fixtures {

using lowdim::wirtinger::PDCode;

inline PDCode unknot() { return {{}, {{1}}}; }

inline PDCode unlink2() { return {{}, {{1}, {2}}}; }

/// Three positive crossings; writhe +3.
inline PDCode trefoil() {
  return {{{{1, 4, 2, 5}, 1}, {{3, 6, 4, 1}, 1}, {{5, 2, 6, 3}, 1}}, {{1, 2, 3, 4, 5, 6}}};
}

inline PDCode hopf() { return {{{{4, 1, 3, 2}, 1}, {{2, 3, 1, 4}, 1}}, {{1, 2}, {3, 4}}}; }

/// Unknot with a single kink; writhe +1.
inline PDCode kinked_unknot() { return {{{{1, 2, 2, 1}, 1}}, {{1, 2}}}; }

}  // namespace fixtures
