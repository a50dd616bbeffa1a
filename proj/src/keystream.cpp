#include "ppt/keystream.hpp"

#include <stdexcept>

#include "ppt/enumerate.hpp"

namespace ppt {

namespace {

void require_valid(const EventSpec& spec) {
  if (spec.target_classes.empty() || spec.target_classes.size() >= 6)
    throw std::invalid_argument("target classes must be a non-empty proper subset of A..F");
}

ClassSequence full_stream(const IndexingScheme& scheme) {
  if (scheme.step < 1 || scheme.offset >= scheme.base_size)
    throw std::invalid_argument("invalid scheme: offset/step out of range");
  const PptWindow base = first_n_ppts(scheme.base_size);
  return decimate(class_sequence(reindex(base, scheme.key)), scheme.offset, scheme.step);
}

}  // namespace

IndexingScheme scheme_from_secret(std::span<const std::uint8_t> secret) {
  if (secret.size() < 4) throw std::invalid_argument("secret must be at least 4 bytes");
  IndexingScheme s;
  s.key = static_cast<OrderingKey>(secret[0] % 6);
  s.base_size = 10000;
  s.offset = (static_cast<std::size_t>(secret[1]) * 256 + secret[2]) % s.base_size;
  s.step = (secret[3] % 8) + 1;
  return s;
}

ClassSequence derive_class_stream(const IndexingScheme& scheme, std::size_t len) {
  if (len < 1) throw std::invalid_argument("len must be >= 1");
  ClassSequence s = full_stream(scheme);
  if (len > s.symbols.size())
    throw std::invalid_argument("requested length " + std::to_string(len) +
                                " exceeds derivable stream length " +
                                std::to_string(s.symbols.size()));
  s.symbols.resize(len);
  return s;
}

std::string classes_to_bits(const ClassSequence& s) {
  std::string bits;
  bits.reserve(3 * s.symbols.size());
  for (char symbol : s.symbols) {
    const int v = static_cast<int>(class_from_label(symbol));
    bits.push_back(v & 4 ? '1' : '0');
    bits.push_back(v & 2 ? '1' : '0');
    bits.push_back(v & 1 ? '1' : '0');
  }
  return bits;
}

std::string event_stream(const IndexingScheme& scheme, const EventSpec& spec, std::size_t len) {
  require_valid(spec);
  const ClassSequence s = derive_class_stream(scheme, len);
  std::string bits;
  bits.reserve(len);
  for (char symbol : s.symbols)
    bits.push_back(spec.target_classes.contains(class_from_label(symbol)) ? '1' : '0');
  return bits;
}

Rational event_probability(const IndexingScheme& scheme, const EventSpec& spec) {
  require_valid(spec);
  const ClassSequence s = full_stream(scheme);
  u64 hits = 0;
  for (char symbol : s.symbols)
    if (spec.target_classes.contains(class_from_label(symbol))) ++hits;
  return make_rational(hits, s.symbols.size());
}

}  // namespace ppt
