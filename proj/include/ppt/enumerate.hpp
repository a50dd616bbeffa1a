#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppt/triple.hpp"

namespace ppt {

// A finite ordered window of PPTs together with the ordering that produced it.
struct PptWindow {
  std::vector<Ppt> triples;
  std::string order_tag;
  std::size_t base_size = 0;  // N of the underlying hypotenuse window
};

// All (m,n) with m+n = y, m > n >= 1, gcd(m,n) = 1, ascending m.
// y must be odd and >= 3.
std::vector<MnPair> coprime_pairs_for_odd(u64 y);

// Every PPT with c <= cmax, sorted by (c, then a). cmax >= 5.
PptWindow ppts_with_hypotenuse_at_most(u64 cmax);

// First n PPTs of the hypotenuse order, via adaptive bound doubling.
PptWindow first_n_ppts(std::size_t n);

}  // namespace ppt
