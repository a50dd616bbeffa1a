#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>

#include "ppt/indexing.hpp"

namespace ppt {

// The shared secret: which re-sort of the base window to use, plus
// offset/step decimation. base_size is fixed at 10,000 by the secret
// codec; tests may construct smaller schemes directly.
struct IndexingScheme {
  OrderingKey key = OrderingKey::OddLeg;
  std::size_t base_size = 10000;
  std::size_t offset = 0;
  std::size_t step = 1;

  friend bool operator==(const IndexingScheme&, const IndexingScheme&) = default;
};

// Non-empty proper subset of {A..F}.
struct EventSpec {
  std::set<PptClass> target_classes;
};

// Exact reduced rational.
struct Rational {
  u64 num = 0;
  u64 den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational make_rational(u64 num, u64 den) {
  const u64 g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

// Demonstrator codec (the source material specifies no encoding):
//   key    = byte0 mod 6, in enum order OddLeg=0 .. BMinusA=5
//   offset = (byte1*256 + byte2) mod base_size
//   step   = (byte3 mod 8) + 1
//   base_size = 10,000
// Requires at least 4 bytes.
IndexingScheme scheme_from_secret(std::span<const std::uint8_t> secret);

// class_sequence(reindex(first_n_ppts(N), key)) decimated by (offset, step),
// truncated to len. Rejects lengths the scheme cannot deliver.
ClassSequence derive_class_stream(const IndexingScheme& scheme, std::size_t len);

// Fixed 3-bit encoding A=000, B=001, C=010, D=011, E=100, F=101, concatenated.
// Returned as a '0'/'1' string.
std::string classes_to_bits(const ClassSequence& s);

// Bit k = 1 iff stream class k is in target_classes.
std::string event_stream(const IndexingScheme& scheme, const EventSpec& spec, std::size_t len);

// Empirical frequency of the target classes over the full derived stream.
Rational event_probability(const IndexingScheme& scheme, const EventSpec& spec);

}  // namespace ppt
