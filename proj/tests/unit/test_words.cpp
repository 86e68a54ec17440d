#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtree/rng.hpp"
#include "qtree/words.hpp"

using namespace qtree;

TEST_CASE("alphabet bounds") {
  CHECK_THROWS_AS(Alphabet(1), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(11), std::invalid_argument);
  CHECK(Alphabet(2).size() == 2);
  CHECK(Alphabet(10).size() == 10);
}

TEST_CASE("word parse and render") {
  CHECK(Word::parse("e").empty());
  CHECK(Word::parse("e").str() == "e");
  CHECK(Word::parse("102").str() == "102");
  CHECK(Word::parse("102").size() == 3);
  CHECK(Word::parse("102").at(1) == 0);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1a"), std::invalid_argument);
}

TEST_CASE("enumerate_words") {
  Alphabet k2(2), k3(3);
  auto w0 = enumerate_words(k2, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].empty());

  auto w2 = enumerate_words(k2, 2);
  REQUIRE(w2.size() == 4);
  CHECK(w2[0].str() == "00");
  CHECK(w2[1].str() == "01");
  CHECK(w2[2].str() == "10");
  CHECK(w2[3].str() == "11");

  auto w1 = enumerate_words(k3, 1);
  REQUIRE(w1.size() == 3);
  CHECK(w1[0].str() == "0");
  CHECK(w1[1].str() == "1");
  CHECK(w1[2].str() == "2");
}

TEST_CASE("enumerate_words: k^n pairwise distinct, sorted") {
  for (int k : {2, 3}) {
    for (int n = 0; n <= 4; ++n) {
      auto ws = enumerate_words(Alphabet(k), n);
      std::size_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= k;
      CHECK(ws.size() == expected);
      std::set<Word> distinct(ws.begin(), ws.end());
      CHECK(distinct.size() == ws.size());
      for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1] < ws[i]);
    }
  }
}

TEST_CASE("split_prefix examples") {
  Word w = Word::parse("102");
  auto [a0, b0] = split_prefix(w, 1);
  CHECK(a0.str() == "1");
  CHECK(b0.str() == "02");
  auto [a1, b1] = split_prefix(w, 0);
  CHECK(a1.str() == "e");
  CHECK(b1.str() == "102");
  auto [a2, b2] = split_prefix(w, 3);
  CHECK(a2.str() == "102");
  CHECK(b2.str() == "e");
  CHECK_THROWS_AS(split_prefix(w, 4), std::out_of_range);
}

TEST_CASE("split_prefix inverts concatenation") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + rng.below(3);
    int n = rng.below(6);
    Word w;
    for (int i = 0; i < n; ++i) w = w.append(rng.below(k));
    for (std::size_t m = 0; m <= w.size(); ++m) {
      auto [a, b] = split_prefix(w, m);
      CHECK(a.concat(b) == w);
      CHECK(a.size() == m);
    }
  }
}

TEST_CASE("prefix predicates") {
  CHECK(Word::parse("10").is_prefix_of(Word::parse("102")));
  CHECK(Word{}.is_prefix_of(Word::parse("102")));
  CHECK_FALSE(Word::parse("11").is_prefix_of(Word::parse("102")));
  CHECK_FALSE(Word::parse("1021").is_prefix_of(Word::parse("102")));
}
