#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppt/analysis.hpp"
#include "ppt/enumerate.hpp"
#include "ppt/indexing.hpp"
#include "ppt/keystream.hpp"
#include "ppt/properties.hpp"
#include "ppt/triple.hpp"

namespace {

using namespace ppt;

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("hex secret must have even length");
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(std::stoul(hex.substr(i, 2), nullptr, 16)));
  return out;
}

EventSpec parse_classes(const std::string& spec) {
  EventSpec e;
  for (char ch : spec) e.target_classes.insert(class_from_label(ch));
  return e;
}

void print_records(const PptWindow& w, const std::string& format) {
  if (format == "csv") std::cout << "index,a,b,c,m,n,class\n";
  std::size_t index = 1;
  for (const Ppt& t : w.triples) {
    const MnPair p = generator_of(t);
    const char cls = class_label(classify(t));
    if (format == "csv")
      std::printf("%zu,%llu,%llu,%llu,%llu,%llu,%c\n", index, (unsigned long long)t.a,
                  (unsigned long long)t.b, (unsigned long long)t.c, (unsigned long long)p.m,
                  (unsigned long long)p.n, cls);
    else
      std::printf(
          "{\"index\":%zu,\"a\":%llu,\"b\":%llu,\"c\":%llu,\"m\":%llu,\"n\":%llu,\"class\":\"%c\"}\n",
          index, (unsigned long long)t.a, (unsigned long long)t.b, (unsigned long long)t.c,
          (unsigned long long)p.m, (unsigned long long)p.n, cls);
    ++index;
  }
}

void print_transitions(const TransitionMatrix& m) {
  std::cout << "from";
  for (int j = 0; j < 6; ++j) {
    const char cls = static_cast<char>('A' + j);
    std::cout << ",X_" << cls << ",y_" << cls;
  }
  std::cout << "\n";
  for (int i = 0; i < 6; ++i) {
    std::cout << static_cast<char>('A' + i);
    for (int j = 0; j < 6; ++j) {
      std::cout << ',' << m.counts[i][j] << ',';
      if (m.first_seen[i][j]) std::cout << *m.first_seen[i][j];
    }
    std::cout << "\n";
  }
}

void print_report(const PropertyReport& r, bool& any_failed) {
  std::cout << "property " << r.property_id << ": " << r.domain_checked << " -> "
            << (r.passed ? "pass" : "FAIL") << "\n";
  for (const std::string& cx : r.counterexamples) std::cout << "  counterexample: " << cx << "\n";
  if (!r.notes.empty()) std::cout << "  note: " << r.notes << "\n";
  if (!r.passed) any_failed = true;
}

int run_verify(u64 bound, u64 prime_bound) {
  bool any_failed = false;

  std::cout << "== Property 1: prime pair counts (primes < " << bound << ") ==\n";
  u64 p1_checked = 0;
  for (u64 p = 3; p < bound; p += 2)
    if (is_prime(p)) {
      const PropertyReport r = verify_prime_pair_count(p);
      ++p1_checked;
      if (!r.passed) print_report(r, any_failed);
    }
  std::cout << "property 1: " << p1_checked << " primes checked -> "
            << (any_failed ? "FAIL" : "pass") << "\n";

  std::cout << "== Property 2: odd multiples of 15 (< " << bound << ") ==\n";
  u64 p2_checked = 0;
  bool p2_failed = false;
  for (u64 y = 15; y < bound; y += 30) {
    const PropertyReport r = verify_multiple_of_15(y);
    ++p2_checked;
    if (!r.passed) print_report(r, p2_failed);
  }
  any_failed |= p2_failed;
  std::cout << "property 2: " << p2_checked << " multiples checked -> "
            << (p2_failed ? "FAIL" : "pass") << "\n";

  std::cout << "== Properties 3/4: class cycles (primes < " << prime_bound << ") ==\n";
  const std::string cycle37 = infer_family_cycle({3, 7}, prime_bound);
  const std::string cycle1 = infer_family_cycle({1}, prime_bound);
  std::cout << "inferred cycle, primes ending 3/7: "
            << (cycle37.empty() ? "(none fits)" : cycle37) << " (period " << cycle37.size()
            << ")\n";
  std::cout << "inferred cycle, primes ending 1:   " << (cycle1.empty() ? "(none fits)" : cycle1)
            << " (period " << cycle1.size() << ")\n";
  if (cycle37 != kInferredCycle37 || cycle1 != kPrintedCycle1) any_failed = true;
  std::cout << "printed pattern 3 (" << kPrintedCycle37 << ") check at p=37: ";
  const PropertyReport r37 = check_cyclic_pattern(37, kPrintedCycle37);
  std::cout << (r37.passed ? "pass" : "FAIL (known erratum, see notes below)") << "\n";
  std::cout << "primes ending in 9 (informational, no stated property):\n";
  for (u64 p : {19, 29, 59, 79, 89})
    std::cout << "  p=" << p << ": " << prime_class_string(p).symbols << "\n";

  std::cout << "== Source errata noted during verification ==\n"
            << "- Class C/F definition tables place the divisibility marks under column c,\n"
            << "  contradicting the text and worked examples ((15,8,17) -> C, (11,60,61) -> F);\n"
            << "  the text + examples win.\n"
            << "- Property 1 proof says \"2n + 1 such pairs\" where the property states n pairs;\n"
            << "  read as a typo for y = 2n + 1.\n"
            << "- Printed pattern 3 (DEBFADFCFDABED) is missing an F at position 12; the\n"
            << "  empirical cycle is DEBFADFCFDAFBED (period 15), first divergence at p=37.\n"
            << "- Table 2 prints y(A->F) = 818; the computed value 8181 is corroborated by the\n"
            << "  stated all-transitions coverage length 8182.\n"
            << "- The printed c-a re-sort string has B at position 25 where the computed symbol\n"
            << "  is F; the source's own first-34 list assigns F to (119,120,169).\n"
            << "- The stated 28 unique 6-grams over the first-34 class string is off by one:\n"
            << "  the printed string itself yields 29 (all windows distinct).\n";

  std::cout << "verify: " << (any_failed ? "FAIL" : "pass") << "\n";
  return any_failed ? 1 : 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Primitive Pythagorean triple classification, indexing and keystream tool"};
  app.require_subcommand(1);

  std::size_t count = 34;
  u64 cmax = 0;
  std::size_t n = 10000;
  std::string order = "hyp";
  std::string format = "jsonl";
  std::size_t offset = 0;
  std::size_t step = 1;
  std::size_t i_max = 6;
  std::size_t len = 34;
  std::string secret_hex;
  std::string classes;
  std::string emit = "classes";
  bool show_probability = false;
  u64 verify_bound = 10000;
  u64 verify_prime_bound = 1000;
  std::vector<u64> triple_args;

  auto* generate = app.add_subcommand("generate", "enumerate PPTs");
  generate->add_option("--count", count, "number of triples");
  generate->add_option("--cmax", cmax, "hypotenuse bound (overrides --count)");
  generate->add_option("--order", order, "a|b|hyp|c-b|c-a|b-a");
  generate->add_option("--format", format, "csv|jsonl");

  auto* classify_cmd = app.add_subcommand("classify", "classify a triple");
  classify_cmd->add_option("triple", triple_args, "a b c")->expected(3);

  auto* reindex_cmd = app.add_subcommand("reindex", "re-sort the first-N window");
  reindex_cmd->add_option("--n", n, "base window size");
  reindex_cmd->add_option("--order", order, "a|b|hyp|c-b|c-a|b-a")->required();
  reindex_cmd->add_option("--format", format, "csv|jsonl");

  auto* transitions = app.add_subcommand("transitions", "6x6 transition counts and first occurrences");
  transitions->add_option("--n", n, "base window size");
  transitions->add_option("--order", order, "a|b|hyp|c-b|c-a|b-a");

  auto* coverage = app.add_subcommand("coverage", "shortest prefix covering all 36 transitions");
  coverage->add_option("--n", n, "base window size");
  coverage->add_option("--order", order, "a|b|hyp|c-b|c-a|b-a");

  auto* kgrams = app.add_subcommand("kgrams", "unique k-gram profile");
  kgrams->add_option("--n", n, "base window size");
  kgrams->add_option("--order", order, "a|b|hyp|c-b|c-a|b-a");
  kgrams->add_option("--i-max", i_max, "largest window length");

  auto* verify = app.add_subcommand("verify", "machine-check properties 1-4 and report errata");
  verify->add_option("--bound", verify_bound, "bound for properties 1 and 2");
  verify->add_option("--prime-bound", verify_prime_bound, "bound for properties 3 and 4");

  auto* keystream = app.add_subcommand("keystream", "derive a stream from a shared secret");
  keystream->add_option("--secret-hex", secret_hex, "secret bytes, hex")->required();
  keystream->add_option("--len", len, "stream length");
  keystream->add_option("--emit", emit, "classes|bits|triples");

  auto* events = app.add_subcommand("events", "biased event bits from a shared secret");
  events->add_option("--secret-hex", secret_hex, "secret bytes, hex")->required();
  events->add_option("--classes", classes, "target classes, e.g. BE")->required();
  events->add_option("--len", len, "stream length");
  events->add_flag("--probability", show_probability, "print exact probability instead of bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (generate->parsed()) {
    PptWindow w = cmax >= 5 ? ppts_with_hypotenuse_at_most(cmax) : first_n_ppts(count);
    if (order != "hyp") w = reindex(w, ordering_key_from_name(order));
    print_records(w, format);
    return 0;
  }
  if (classify_cmd->parsed()) {
    if (!is_primitive_triple(triple_args[0], triple_args[1], triple_args[2])) {
      std::cerr << "not a primitive Pythagorean triple\n";
      return 1;
    }
    u64 a = triple_args[0], b = triple_args[1];
    if (a % 2 == 0) std::swap(a, b);
    std::cout << class_label(classify(Ppt{a, b, triple_args[2]})) << "\n";
    return 0;
  }
  if (reindex_cmd->parsed()) {
    print_records(reindex(first_n_ppts(n), ordering_key_from_name(order)), format);
    return 0;
  }
  if (transitions->parsed()) {
    PptWindow w = first_n_ppts(n);
    if (order != "hyp") w = reindex(w, ordering_key_from_name(order));
    print_transitions(transition_stats(class_sequence(w)));
    return 0;
  }
  if (coverage->parsed()) {
    PptWindow w = first_n_ppts(n);
    if (order != "hyp") w = reindex(w, ordering_key_from_name(order));
    const auto cov = coverage_length(class_sequence(w));
    if (cov)
      std::cout << *cov << "\n";
    else
      std::cout << "none\n";
    return 0;
  }
  if (kgrams->parsed()) {
    PptWindow w = first_n_ppts(n);
    if (order != "hyp") w = reindex(w, ordering_key_from_name(order));
    std::cout << "i,unique_count,first_repeat_index\n";
    for (const KgramEntry& e : kgram_profile(class_sequence(w), i_max).entries) {
      std::cout << e.i << ',' << e.unique_count << ',';
      if (e.first_repeat_index) std::cout << *e.first_repeat_index;
      std::cout << "\n";
    }
    return 0;
  }
  if (verify->parsed()) return run_verify(verify_bound, verify_prime_bound);
  if (keystream->parsed()) {
    const auto secret = parse_hex(secret_hex);
    const IndexingScheme scheme = scheme_from_secret(secret);
    if (emit == "bits") {
      std::cout << classes_to_bits(derive_class_stream(scheme, len)) << "\n";
    } else if (emit == "triples") {
      PptWindow w = reindex(first_n_ppts(scheme.base_size), scheme.key);
      PptWindow picked{{}, w.order_tag, w.base_size};
      for (std::size_t k = scheme.offset; k < w.triples.size() && picked.triples.size() < len;
           k += scheme.step)
        picked.triples.push_back(w.triples[k]);
      print_records(picked, format);
    } else if (emit == "classes") {
      std::cout << derive_class_stream(scheme, len).symbols << "\n";
    } else {
      throw std::invalid_argument("--emit must be classes, bits or triples");
    }
    return 0;
  }
  if (events->parsed()) {
    const IndexingScheme scheme = scheme_from_secret(parse_hex(secret_hex));
    const EventSpec spec = parse_classes(classes);
    if (show_probability) {
      const Rational p = event_probability(scheme, spec);
      std::cout << p.num << "/" << p.den << "\n";
    } else {
      std::cout << event_stream(scheme, spec, len) << "\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
