#include "ppt/indexing.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace ppt {

namespace {

constexpr std::array<std::string_view, kOrderingKeyCount> kKeyNames = {
    "a", "b", "hyp", "c-b", "c-a", "b-a"};

}  // namespace

std::string_view ordering_key_name(OrderingKey key) {
  return kKeyNames[static_cast<int>(key)];
}

OrderingKey ordering_key_from_name(std::string_view name) {
  for (int i = 0; i < kOrderingKeyCount; ++i)
    if (kKeyNames[i] == name) return static_cast<OrderingKey>(i);
  throw std::invalid_argument("unknown ordering key: " + std::string(name));
}

i64 sort_key(const Ppt& t, OrderingKey key) {
  switch (key) {
    case OrderingKey::OddLeg: return static_cast<i64>(t.a);
    case OrderingKey::EvenLeg: return static_cast<i64>(t.b);
    case OrderingKey::Hypotenuse: return static_cast<i64>(t.c);
    case OrderingKey::CMinusB: return static_cast<i64>(t.c - t.b);
    case OrderingKey::CMinusA: return static_cast<i64>(t.c - t.a);
    case OrderingKey::BMinusA: return static_cast<i64>(t.b) - static_cast<i64>(t.a);
  }
  throw std::invalid_argument("bad ordering key");
}

PptWindow reindex(const PptWindow& w, OrderingKey key) {
  PptWindow out = w;
  std::sort(out.triples.begin(), out.triples.end(), [key](const Ppt& x, const Ppt& y) {
    return std::tuple(sort_key(x, key), x.c, x.a) < std::tuple(sort_key(y, key), y.c, y.a);
  });
  out.order_tag = ordering_key_name(key);
  return out;
}

ClassSequence class_sequence(const PptWindow& w) {
  ClassSequence s;
  s.base_size = w.base_size;
  for (int i = 0; i < kOrderingKeyCount; ++i)
    if (kKeyNames[i] == w.order_tag) s.key = static_cast<OrderingKey>(i);
  s.symbols.reserve(w.triples.size());
  for (const Ppt& t : w.triples) s.symbols.push_back(class_label(classify(t)));
  return s;
}

ClassSequence decimate(const ClassSequence& s, std::size_t offset, std::size_t step) {
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  if (offset >= s.symbols.size()) throw std::invalid_argument("offset beyond sequence length");
  ClassSequence out = s;
  out.offset = offset;
  out.step = step;
  out.symbols.clear();
  for (std::size_t k = offset; k < s.symbols.size(); k += step) out.symbols.push_back(s.symbols[k]);
  return out;
}

}  // namespace ppt
