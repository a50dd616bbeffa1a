#include <doctest.h>

#include <algorithm>
#include <set>

#include "ppt/enumerate.hpp"
#include "ppt/indexing.hpp"

using namespace ppt;

TEST_CASE("sort_key values") {
  CHECK(sort_key(Ppt{3, 4, 5}, OrderingKey::CMinusB) == 1);
  CHECK(sort_key(Ppt{15, 8, 17}, OrderingKey::BMinusA) == -7);
  CHECK(sort_key(Ppt{21, 20, 29}, OrderingKey::CMinusA) == 8);
  CHECK(sort_key(Ppt{21, 20, 29}, OrderingKey::OddLeg) == 21);
  CHECK(sort_key(Ppt{21, 20, 29}, OrderingKey::EvenLeg) == 20);
  CHECK(sort_key(Ppt{21, 20, 29}, OrderingKey::Hypotenuse) == 29);
}

TEST_CASE("ordering key names") {
  CHECK(ordering_key_from_name("c-b") == OrderingKey::CMinusB);
  CHECK(ordering_key_name(OrderingKey::BMinusA) == "b-a");
  CHECK_THROWS_AS(ordering_key_from_name("z"), std::invalid_argument);
}

TEST_CASE("reindex of the first-34 window") {
  const PptWindow w34 = first_n_ppts(34);
  CHECK(class_sequence(reindex(w34, OrderingKey::Hypotenuse)).symbols ==
        class_sequence(w34).symbols);
  CHECK(class_sequence(reindex(w34, OrderingKey::CMinusB)).symbols ==
        "ABDEFDCDFCEAEEABCBBBBADFCFDEAADCDC");
  CHECK(class_sequence(reindex(w34, OrderingKey::EvenLeg)).symbols ==
        "ACBBAEEDDCCDEABCAFFBEDDCACFBEDDBAF");
  CHECK(class_sequence(reindex(w34, OrderingKey::CMinusA)).symbols ==
        "ACBAEDCBECDACDBFDEABCAFEFDBDCEBDAF");
  CHECK(class_sequence(reindex(w34, OrderingKey::OddLeg)).symbols ==
        "ABDEFDCCDFEABECEBAABDBFBECAFDDACDC");
  CHECK(class_sequence(reindex(w34, OrderingKey::BMinusA)).symbols ==
        "CDCDEAAADFBCCCBEAFBBDADEEBFDBECADF");
}

TEST_CASE("class_sequence basics") {
  PptWindow single{{Ppt{3, 4, 5}}, "hyp", 1};
  CHECK(class_sequence(single).symbols == "A");
}

TEST_CASE("decimate") {
  const ClassSequence s = class_sequence(first_n_ppts(34));
  CHECK(decimate(s, 0, 1).symbols == s.symbols);
  CHECK(decimate(s, 1, 2).symbols.substr(0, 3) == "BDB");
  CHECK(decimate(s, 33, 5).symbols == "D");
  CHECK_THROWS_AS(decimate(s, 34, 1), std::invalid_argument);
  CHECK_THROWS_AS(decimate(s, 0, 0), std::invalid_argument);
}

TEST_CASE("reindex is a permutation and idempotent") {
  const PptWindow w = first_n_ppts(2000);
  for (int k = 0; k < kOrderingKeyCount; ++k) {
    const auto key = static_cast<OrderingKey>(k);
    const PptWindow r = reindex(w, key);
    auto sorted_in = w.triples;
    auto sorted_out = r.triples;
    const auto by_c = [](const Ppt& x, const Ppt& y) {
      return std::tie(x.c, x.a) < std::tie(y.c, y.a);
    };
    std::sort(sorted_in.begin(), sorted_in.end(), by_c);
    std::sort(sorted_out.begin(), sorted_out.end(), by_c);
    CHECK(sorted_in == sorted_out);
    CHECK(reindex(r, key).triples == r.triples);
  }
}

TEST_CASE("composite comparator (key, c, a) is a total order") {
  const PptWindow w = first_n_ppts(100000);
  for (int k = 0; k < kOrderingKeyCount; ++k) {
    const auto key = static_cast<OrderingKey>(k);
    const PptWindow r = reindex(w, key);
    for (std::size_t i = 1; i < r.triples.size(); ++i) {
      const Ppt &x = r.triples[i - 1], &y = r.triples[i];
      REQUIRE(std::tuple(sort_key(x, key), x.c, x.a) < std::tuple(sort_key(y, key), y.c, y.a));
    }
  }
}
