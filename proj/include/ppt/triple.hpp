#pragma once

#include <cstdint>
#include <stdexcept>

namespace ppt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Primitive Pythagorean triple. a is always the odd leg, b the even leg.
struct Ppt {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;

  friend bool operator==(const Ppt&, const Ppt&) = default;
};

// Euclid generator pair: m > n >= 1, gcd(m,n) = 1, opposite parity.
struct MnPair {
  u64 m = 0;
  u64 n = 0;

  friend bool operator==(const MnPair&, const MnPair&) = default;
};

// Odd co-prime pair: s > t >= 1, both odd, gcd(s,t) = 1.
// Related to MnPair by s = m+n, t = m-n.
struct StPair {
  u64 s = 0;
  u64 t = 0;

  friend bool operator==(const StPair&, const StPair&) = default;
};

// Six-way class by divisibility: exactly one of {a,b} is divisible by 3
// and exactly one of {a,b,c} by 5 on every PPT.
//   A = (3|a, 5|c)   B = (3|b, 5|a)   C = (3|a, 5|a)
//   D = (3|b, 5|c)   E = (3|a, 5|b)   F = (3|b, 5|b)
enum class PptClass : int { A = 0, B, C, D, E, F };

constexpr char class_label(PptClass k) {
  return static_cast<char>('A' + static_cast<int>(k));
}

PptClass class_from_label(char label);  // throws std::invalid_argument

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// a = m^2 - n^2, b = 2mn, c = m^2 + n^2. Rejects invalid pairs, checks overflow.
Ppt triple_from_mn(MnPair pair);

// a = st, b = (s^2 - t^2)/2, c = (s^2 + t^2)/2.
Ppt triple_from_st(StPair pair);

// Inverse of triple_from_mn: m = sqrt((c+a)/2), n = sqrt((c-a)/2).
MnPair generator_of(const Ppt& t);

PptClass classify(const Ppt& t);

// True iff (a,b,c), after swapping legs so the odd leg is first,
// satisfies every Ppt invariant. Never throws.
bool is_primitive_triple(u64 a, u64 b, u64 c) noexcept;

}  // namespace ppt
