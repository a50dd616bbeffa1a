#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ppt/enumerate.hpp"
#include "ppt/triple.hpp"

namespace ppt {

// Sort keys from the paper's indexing list. BMinusA is the only signed key.
enum class OrderingKey : int {
  OddLeg = 0,
  EvenLeg,
  Hypotenuse,
  CMinusB,
  CMinusA,
  BMinusA,
};

inline constexpr int kOrderingKeyCount = 6;

// Short names as used by the CLI: a, b, hyp, c-b, c-a, b-a.
std::string_view ordering_key_name(OrderingKey key);
OrderingKey ordering_key_from_name(std::string_view name);  // throws on unknown

// A class sequence over {A..F} plus how it was derived.
struct ClassSequence {
  std::string symbols;  // characters 'A'..'F'
  std::size_t base_size = 0;
  OrderingKey key = OrderingKey::Hypotenuse;
  std::size_t offset = 0;
  std::size_t step = 1;
};

// a, b, c, c-b, c-a or b-a respectively; b-a may be negative.
i64 sort_key(const Ppt& t, OrderingKey key);

// Permutation of w ordered by (sort_key, then c, then a).
PptWindow reindex(const PptWindow& w, OrderingKey key);

// classify applied elementwise, order preserved.
ClassSequence class_sequence(const PptWindow& w);

// Symbols at 1-based positions offset+1, offset+1+step, ... Requires
// offset < length and step >= 1.
ClassSequence decimate(const ClassSequence& s, std::size_t offset, std::size_t step);

}  // namespace ppt
