#include "ppt/triple.hpp"

#include <cmath>
#include <numeric>

namespace ppt {

namespace {

u64 checked_mul(u64 x, u64 y) {
  u64 r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("64-bit multiply overflow");
  return r;
}

u64 checked_add(u64 x, u64 y) {
  u64 r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("64-bit add overflow");
  return r;
}

// Exact integer square root; nullopt-style via bool return.
bool perfect_sqrt(u64 v, u64& root) {
  if (v == 0) {
    root = 0;
    return true;
  }
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  root = r;
  return r * r == v;
}

void require_valid(MnPair p) {
  if (p.m <= p.n || p.n == 0) throw std::invalid_argument("MnPair requires m > n >= 1");
  if (((p.m ^ p.n) & 1) == 0) throw std::invalid_argument("MnPair requires opposite parity");
  if (std::gcd(p.m, p.n) != 1) throw std::invalid_argument("MnPair requires gcd(m,n) = 1");
}

}  // namespace

PptClass class_from_label(char label) {
  if (label < 'A' || label > 'F') throw std::invalid_argument("class label must be A..F");
  return static_cast<PptClass>(label - 'A');
}

Ppt triple_from_mn(MnPair pair) {
  require_valid(pair);
  const u64 m2 = checked_mul(pair.m, pair.m);
  const u64 n2 = checked_mul(pair.n, pair.n);
  return Ppt{m2 - n2, checked_mul(2, checked_mul(pair.m, pair.n)), checked_add(m2, n2)};
}

Ppt triple_from_st(StPair pair) {
  if (pair.s <= pair.t || pair.t == 0) throw std::invalid_argument("StPair requires s > t >= 1");
  if (pair.s % 2 == 0 || pair.t % 2 == 0) throw std::invalid_argument("StPair requires both odd");
  if (std::gcd(pair.s, pair.t) != 1) throw std::invalid_argument("StPair requires gcd(s,t) = 1");
  return triple_from_mn(MnPair{(pair.s + pair.t) / 2, (pair.s - pair.t) / 2});
}

MnPair generator_of(const Ppt& t) {
  if (t.c <= t.a) throw std::invalid_argument("not a Pythagorean triple: c <= a");
  u64 m = 0, n = 0;
  if (!perfect_sqrt(checked_add(t.c, t.a) / 2, m) || !perfect_sqrt((t.c - t.a) / 2, n))
    throw std::invalid_argument("not generated by Euclid's formula");
  const MnPair p{m, n};
  if (triple_from_mn(p) != t) throw std::invalid_argument("not a primitive Pythagorean triple");
  return p;
}

PptClass classify(const Ppt& t) {
  if (!is_primitive_triple(t.a, t.b, t.c)) throw std::invalid_argument("not a valid PPT");
  const bool three_in_a = t.a % 3 == 0;
  if (t.a % 5 == 0) return three_in_a ? PptClass::C : PptClass::B;
  if (t.b % 5 == 0) return three_in_a ? PptClass::E : PptClass::F;
  return three_in_a ? PptClass::A : PptClass::D;
}

bool is_primitive_triple(u64 a, u64 b, u64 c) noexcept {
  if (a % 2 == 0) std::swap(a, b);  // canonical order: odd leg first
  if (a < 3 || b < 4 || c < 5) return false;
  if (a % 2 == 0 || b % 2 != 0) return false;
  if (std::gcd(a, b) != 1) return false;
  u64 a2 = 0, b2 = 0, c2 = 0;
  if (__builtin_mul_overflow(a, a, &a2) || __builtin_mul_overflow(b, b, &b2) ||
      __builtin_mul_overflow(c, c, &c2) || __builtin_add_overflow(a2, b2, &a2))
    return false;
  return a2 == c2;
}

}  // namespace ppt
