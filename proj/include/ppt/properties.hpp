#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppt/indexing.hpp"

namespace ppt {

// The class-cycle patterns as printed in the source material.
// kPrintedCycle37 is missing a symbol (see infer_family_cycle); the
// empirically correct cycle is kInferredCycle37, period 15.
inline constexpr std::string_view kPrintedCycle37 = "DEBFADFCFDABED";
inline constexpr std::string_view kPrintedCycle1 = "FABDEFDCDFEDBAF";
inline constexpr std::string_view kInferredCycle37 = "DEBFADFCFDAFBED";

struct PropertyReport {
  int property_id = 0;
  std::string domain_checked;
  bool passed = false;
  std::vector<std::string> counterexamples;
  std::string notes;
};

bool is_prime(u64 p);

// Property 1: a prime p has exactly (p-1)/2 co-prime pairs summing to p,
// each generating a valid PPT.
PropertyReport verify_prime_pair_count(u64 p);

// Property 2: every PPT generated from pairs summing to an odd multiple
// of 15 classifies as C. y odd, y >= 15, 15 | y.
PropertyReport verify_multiple_of_15(u64 y);

// Classes of triples from coprime_pairs_for_odd(p), ascending m. p odd prime >= 7.
ClassSequence prime_class_string(u64 p);

// Verifies prime_class_string(p) is a prefix of the periodic extension of
// `pattern`'s underlying cycle, testing candidate periods len-1 and len.
// Records the inferred period (or the failure) in the report notes.
PropertyReport check_cyclic_pattern(u64 p, std::string_view pattern);

// Empirically infers the class cycle for a prime family (last decimal
// digits in `digits`) from every applicable prime below `bound`.
// Returns the cycle string, empty if no single cycle fits.
std::string infer_family_cycle(const std::vector<int>& digits, u64 bound);

}  // namespace ppt
