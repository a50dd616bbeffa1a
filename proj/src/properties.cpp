#include "ppt/properties.hpp"

#include <algorithm>
#include <numeric>

#include "ppt/enumerate.hpp"

namespace ppt {

namespace {

std::string periodic_prefix(std::string_view cycle, std::size_t len) {
  std::string out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(cycle[k % cycle.size()]);
  return out;
}

std::size_t minimal_period(std::string_view s) {
  for (std::size_t per = 1; per < s.size(); ++per) {
    bool ok = true;
    for (std::size_t k = per; k < s.size() && ok; ++k) ok = s[k] == s[k % per];
    if (ok) return per;
  }
  return s.size();
}

}  // namespace

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PropertyReport verify_prime_pair_count(u64 p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and >= 3");
  PropertyReport r{1, "prime pair count for p = " + std::to_string(p), false, {}, ""};
  if (!is_prime(p)) {
    r.counterexamples.push_back(std::to_string(p) + " is not prime");
    return r;
  }
  const auto pairs = coprime_pairs_for_odd(p);
  const u64 expected = (p - 1) / 2;
  if (pairs.size() != expected)
    r.counterexamples.push_back("pair count " + std::to_string(pairs.size()) + " != (p-1)/2 = " +
                                std::to_string(expected));
  for (const MnPair& pair : pairs) {
    if (std::gcd(pair.m, pair.n) != 1) {
      r.counterexamples.push_back("pair (" + std::to_string(pair.m) + "," +
                                  std::to_string(pair.n) + ") not co-prime");
      continue;
    }
    const Ppt t = triple_from_mn(pair);
    if (!is_primitive_triple(t.a, t.b, t.c))
      r.counterexamples.push_back("pair (" + std::to_string(pair.m) + "," +
                                  std::to_string(pair.n) + ") yields non-primitive triple");
  }
  r.passed = r.counterexamples.empty();
  r.notes = "n = " + std::to_string(pairs.size()) +
            "; the source's proof says \"2n + 1 such pairs\" where the property states n pairs -- "
            "read as a typo for y = 2n + 1";
  return r;
}

PropertyReport verify_multiple_of_15(u64 y) {
  if (y < 15 || y % 2 == 0 || y % 15 != 0)
    throw std::invalid_argument("y must be an odd multiple of 15, y >= 15");
  PropertyReport r{2, "odd multiple of 15: y = " + std::to_string(y), false, {}, ""};
  for (const MnPair& pair : coprime_pairs_for_odd(y)) {
    const Ppt t = triple_from_mn(pair);
    if (classify(t) != PptClass::C)
      r.counterexamples.push_back("(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                  std::to_string(t.c) + ") is class " +
                                  std::string(1, class_label(classify(t))));
  }
  r.passed = r.counterexamples.empty();
  return r;
}

ClassSequence prime_class_string(u64 p) {
  if (p < 7 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime >= 7");
  ClassSequence s;
  s.base_size = (p - 1) / 2;
  for (const MnPair& pair : coprime_pairs_for_odd(p))
    s.symbols.push_back(class_label(classify(triple_from_mn(pair))));
  return s;
}

PropertyReport check_cyclic_pattern(u64 p, std::string_view pattern) {
  if (!is_prime(p) || p == 3 || p == 5 || p == 2)
    throw std::invalid_argument("p must be a prime >= 7");
  const u64 last = p % 10;
  if (last == 9)
    throw std::invalid_argument("primes ending in 9 are outside the stated families");
  const int id = (last == 1) ? 4 : 3;
  PropertyReport r{id, "cyclic pattern check for p = " + std::to_string(p), false, {}, ""};
  const std::string s = prime_class_string(p).symbols;
  for (std::size_t period : {pattern.size() - 1, pattern.size()}) {
    if (s == periodic_prefix(pattern.substr(0, period), s.size())) {
      r.passed = true;
      r.notes = "inferred period " + std::to_string(period);
      return r;
    }
  }
  std::size_t k = 0;
  const std::string ext = periodic_prefix(pattern, s.size());
  while (k < s.size() && s[k] == ext[k]) ++k;
  r.counterexamples.push_back("class string diverges from pattern at position " +
                              std::to_string(k + 1) + " (computed " + std::string(1, s[k]) +
                              ", pattern " + std::string(1, ext[k]) + ")");
  r.notes = "no candidate period fits";
  return r;
}

std::string infer_family_cycle(const std::vector<int>& digits, u64 bound) {
  const auto in_family = [&](u64 p) {
    return std::find(digits.begin(), digits.end(), static_cast<int>(p % 10)) != digits.end();
  };
  std::string longest;
  for (u64 p = 7; p < bound; p += 2)
    if (is_prime(p) && in_family(p)) {
      std::string s = prime_class_string(p).symbols;
      if (s.size() > longest.size()) longest = std::move(s);
    }
  if (longest.empty()) return {};
  const std::string cycle = longest.substr(0, minimal_period(longest));
  for (u64 p = 7; p < bound; p += 2)
    if (is_prime(p) && in_family(p)) {
      const std::string s = prime_class_string(p).symbols;
      if (s != periodic_prefix(cycle, s.size())) return {};
    }
  return cycle;
}

}  // namespace ppt
