#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ppt/indexing.hpp"

namespace ppt {

// 6x6 transition counts X plus 1-based first-occurrence indices y.
// y[i][j] is the position of the FIRST element of the pair.
struct TransitionMatrix {
  std::array<std::array<u64, 6>, 6> counts{};
  std::array<std::array<std::optional<std::size_t>, 6>, 6> first_seen{};
};

struct KgramEntry {
  std::size_t i = 0;
  std::size_t unique_count = 0;
  std::optional<std::size_t> first_repeat_index;
};

struct KgramProfile {
  std::vector<KgramEntry> entries;
};

// Requires length(s) >= 2.
TransitionMatrix transition_stats(const ClassSequence& s);

// Least prefix length containing all 36 ordered class pairs as adjacent
// transitions; nullopt if the full sequence never covers them.
std::optional<std::size_t> coverage_length(const ClassSequence& s);

// Distinct contiguous windows of length i (stride 1). Requires 1 <= i <= length.
std::size_t unique_kgrams(const ClassSequence& s, std::size_t i);

// Least 1-based start of a window equal to some earlier window.
std::optional<std::size_t> first_repetition_index(const ClassSequence& s, std::size_t i);

// Entries for i = 1..i_max.
KgramProfile kgram_profile(const ClassSequence& s, std::size_t i_max);

}  // namespace ppt
