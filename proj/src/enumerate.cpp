#include "ppt/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppt {

std::vector<MnPair> coprime_pairs_for_odd(u64 y) {
  if (y < 3 || y % 2 == 0) throw std::invalid_argument("y must be odd and >= 3");
  std::vector<MnPair> out;
  for (u64 m = y / 2 + 1; m < y; ++m) {
    const u64 n = y - m;
    if (std::gcd(m, n) == 1) out.push_back(MnPair{m, n});
  }
  return out;
}

PptWindow ppts_with_hypotenuse_at_most(u64 cmax) {
  if (cmax < 5) throw std::invalid_argument("cmax must be >= 5");
  std::vector<Ppt> out;
  for (u64 n = 1; 2 * n * n < cmax; ++n) {
    // opposite parity: m and n differ mod 2, so step m by 2
    for (u64 m = n + 1; m * m + n * n <= cmax; m += 2) {
      if (std::gcd(m, n) != 1) continue;
      out.push_back(triple_from_mn(MnPair{m, n}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Ppt& x, const Ppt& y) { return std::tie(x.c, x.a) < std::tie(y.c, y.a); });
  const std::size_t count = out.size();
  return PptWindow{std::move(out), "hyp", count};
}

PptWindow first_n_ppts(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  u64 bound = std::max<u64>(8 * static_cast<u64>(n), 5);
  for (;;) {
    PptWindow w = ppts_with_hypotenuse_at_most(bound);
    if (w.triples.size() >= n) {
      w.triples.resize(n);
      w.base_size = n;
      return w;
    }
    if (__builtin_mul_overflow(bound, u64{2}, &bound))
      throw OverflowError("hypotenuse bound exceeds 64 bits");
  }
}

}  // namespace ppt
