#include "ppt/analysis.hpp"

#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace ppt {

namespace {

int class_index(char symbol) {
  if (symbol < 'A' || symbol > 'F') throw std::invalid_argument("symbol outside A..F");
  return symbol - 'A';
}

}  // namespace

TransitionMatrix transition_stats(const ClassSequence& s) {
  if (s.symbols.size() < 2) throw std::invalid_argument("sequence must have length >= 2");
  TransitionMatrix m;
  for (std::size_t k = 0; k + 1 < s.symbols.size(); ++k) {
    const int i = class_index(s.symbols[k]);
    const int j = class_index(s.symbols[k + 1]);
    if (m.counts[i][j]++ == 0) m.first_seen[i][j] = k + 1;
  }
  return m;
}

std::optional<std::size_t> coverage_length(const ClassSequence& s) {
  bool seen[6][6] = {};
  int remaining = 36;
  for (std::size_t k = 0; k + 1 < s.symbols.size(); ++k) {
    bool& cell = seen[class_index(s.symbols[k])][class_index(s.symbols[k + 1])];
    if (!cell) {
      cell = true;
      if (--remaining == 0) return k + 2;
    }
  }
  return std::nullopt;
}

std::size_t unique_kgrams(const ClassSequence& s, std::size_t i) {
  if (i < 1 || i > s.symbols.size()) throw std::invalid_argument("i must be in 1..length");
  std::unordered_set<std::string_view> seen;
  const std::string_view sv = s.symbols;
  for (std::size_t k = 0; k + i <= sv.size(); ++k) seen.insert(sv.substr(k, i));
  return seen.size();
}

std::optional<std::size_t> first_repetition_index(const ClassSequence& s, std::size_t i) {
  if (i < 1 || i > s.symbols.size()) throw std::invalid_argument("i must be in 1..length");
  std::unordered_set<std::string_view> seen;
  const std::string_view sv = s.symbols;
  for (std::size_t k = 0; k + i <= sv.size(); ++k)
    if (!seen.insert(sv.substr(k, i)).second) return k + 1;
  return std::nullopt;
}

KgramProfile kgram_profile(const ClassSequence& s, std::size_t i_max) {
  if (i_max < 1 || i_max > s.symbols.size()) throw std::invalid_argument("i_max must be in 1..length");
  KgramProfile p;
  for (std::size_t i = 1; i <= i_max; ++i)
    p.entries.push_back({i, unique_kgrams(s, i), first_repetition_index(s, i)});
  return p;
}

}  // namespace ppt
