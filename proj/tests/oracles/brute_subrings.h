#pragma once

#include <vector>

#include "fuscond/basering.h"

namespace oracle {

/// Every subset of labels containing `must_contain` and the unit that is closed
/// under products and duals, by scanning all 2^rank subsets.
inline std::vector<fuscond::Subring> brute_force_subrings(const fuscond::BasedRing& ring,
                                                          const std::vector<std::size_t>& must_contain) {
  const std::size_t r = ring.rank();
  std::vector<fuscond::Subring> out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    if (!(mask & 1UL)) continue;
    bool ok = true;
    for (auto m : must_contain) ok = ok && (mask >> m & 1UL);
    for (std::size_t i = 0; i < r && ok; ++i) {
      if (!(mask >> i & 1UL)) continue;
      if (!(mask >> ring.dual(i) & 1UL)) ok = false;
      for (std::size_t j = 0; j < r && ok; ++j) {
        if (!(mask >> j & 1UL)) continue;
        for (std::size_t k = 0; k < r; ++k) {
          if (ring.N(i, j, k) > 0 && !(mask >> k & 1UL)) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1UL) members.push_back(i);
    }
    out.emplace_back(members);
  }
  return out;
}

}  // namespace oracle
