#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtree/classical.hpp"
#include "qtree/parser.hpp"

using namespace qtree;

namespace {

Portrait root_swap(int depth) {
  Portrait g(2, depth);
  g.set_label(Word{}, Permutation{{1, 0}});
  return g;
}

}  // namespace

TEST_CASE("action basics") {
  Portrait id(2, 2);
  CHECK(id.act(Word::parse("01")) == Word::parse("01"));

  Portrait g = root_swap(1);
  CHECK(g.act(Word{0}) == Word{1});

  // root = (01), label at node 0 = (01), node 1 = id: 00 -> 11
  Portrait h(2, 2);
  h.set_label(Word{}, Permutation{{1, 0}});
  h.set_label(Word{0}, Permutation{{1, 0}});
  CHECK(h.act(Word::parse("00")) == Word::parse("11"));

  // brute-force cross-check: the recursion against direct evaluation of
  // all four leaves, which must form a bijection preserving prefixes
  std::set<Word> images;
  for (const Word& w : enumerate_words(Alphabet(2), 2)) {
    Word img = h.act(w);
    CHECK(h.act(w.prefix(1)) == img.prefix(1));
    images.insert(img);
  }
  CHECK(images.size() == 4);
}

TEST_CASE("sections") {
  Portrait h(2, 2);
  h.set_label(Word{}, Permutation{{1, 0}});
  h.set_label(Word{0}, Permutation{{1, 0}});
  CHECK(h.section(Word{}) == h);
  CHECK(h.section(Word{0}).label(Word{}) == Permutation{{1, 0}});
  CHECK(h.section(Word{1}).label(Word{}) == Permutation::identity(2));
  CHECK(Portrait(2, 3).section(Word{0}) == Portrait(2, 2));

  // defining identity: g.(wv) = (g.w) (g|_w . v)
  for (const Portrait& g : enumerate_aut(2, 3)) {
    for (const Word& w : enumerate_words(Alphabet(2), 1)) {
      Portrait sec = g.section(w);
      for (const Word& v : enumerate_words(Alphabet(2), 2)) {
        CHECK(g.act(w.concat(v)) == g.act(w).concat(sec.act(v)));
      }
    }
  }
}

TEST_CASE("group axioms, exhaustive at small depth") {
  auto group = enumerate_aut(2, 2);
  Portrait id(2, 2);
  for (const Portrait& g : group) {
    CHECK(g.compose(g.inverse()) == id);
    CHECK(g.inverse().inverse() == g);
  }
  // section law: (gh)|_w = g|_{h.w} h|_w
  for (const Portrait& g : group) {
    for (const Portrait& h : group) {
      Portrait gh = g.compose(h);
      for (const Word& w : enumerate_words(Alphabet(2), 1)) {
        CHECK(gh.section(w) ==
              g.section(h.act(w)).compose(h.section(w)));
      }
    }
  }
}

TEST_CASE("wreath recursion counts") {
  CHECK(aut_count(2, 1) == 2);
  CHECK(aut_count(2, 2) == 8);
  CHECK(aut_count(2, 3) == 128);
  CHECK(aut_count(2, 4) == 32768);
  CHECK(aut_count(3, 1) == 6);
  CHECK(aut_count(3, 2) == 1296);

  for (auto [k, d] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto group = enumerate_aut(k, d);
    CHECK(group.size() == aut_count(k, d));
    std::set<Portrait> distinct(group.begin(), group.end());
    CHECK(distinct.size() == group.size());
  }
  CHECK_THROWS_AS(enumerate_aut(3, 3), std::out_of_range);
}

TEST_CASE("distinctness via action tables at depth 3") {
  auto group = enumerate_aut(2, 3);
  std::set<std::string> tables;
  for (const Portrait& g : group) {
    std::string t;
    for (int n = 1; n <= 3; ++n) {
      for (const Word& w : enumerate_words(Alphabet(2), n)) {
        t += g.act(w).str() + "|";
      }
    }
    tables.insert(t);
  }
  CHECK(tables.size() == 128);
}

TEST_CASE("indicator evaluation") {
  Portrait id(2, 2);
  CHECK(indicator_eval(Generator(Word::parse("01"), Word::parse("01")), id) == 1);
  CHECK(indicator_eval(Generator(Word::parse("01"), Word::parse("10")), id) == 0);
  CHECK(indicator_eval(Generator(Word{1}, Word{0}), root_swap(2)) == 1);
  CHECK(abelian_eval(parse_element("a[0,0]*a[01,01] - 3", Alphabet(2)), id) ==
        -2);
}

TEST_CASE("defining relations hold pointwise on every portrait") {
  for (auto [k, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto group = enumerate_aut(k, d);
    Alphabet a(k);
    for (int n = 0; n < d; ++n) {
      for (const Word& u : enumerate_words(a, n)) {
        for (const Word& v : enumerate_words(a, n)) {
          for (const Portrait& g : group) {
            int base = n == 0 ? 1 : indicator_eval(Generator(u, v), g);
            for (int x = 0; x < k; ++x) {
              int sy = 0, sz = 0;
              for (int y = 0; y < k; ++y) {
                sy += indicator_eval(Generator(u.append(x), v.append(y)), g);
                sz += indicator_eval(Generator(u.append(y), v.append(x)), g);
              }
              REQUIRE(sy == base);
              REQUIRE(sz == base);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("indicator span rank equals group order") {
  for (auto [k, d] : {std::pair{2, 1}, {2, 2}, {2, 3}}) {
    auto group = enumerate_aut(k, d);
    CHECK(indicator_span_rank(k, d, group) == group.size());
  }
}

TEST_CASE("subgroup presets") {
  CHECK(SubgroupSpec::trivial(2).elements().size() == 1);
  CHECK(SubgroupSpec::full(3).elements().size() == 6);
  CHECK(SubgroupSpec::full(4).elements().size() == 24);
  CHECK(SubgroupSpec::cyclic(3).elements().size() == 3);
  CHECK(SubgroupSpec::cyclic(2).elements().size() == 2);
  CHECK(SubgroupSpec::klein().elements().size() == 4);
  CHECK_THROWS_AS(SubgroupSpec::by_name("klein", 3), std::invalid_argument);
  CHECK_THROWS_AS(SubgroupSpec::by_name("dihedral", 4), std::invalid_argument);
}

TEST_CASE("constrained portrait groups") {
  // trivial constraints leave only the identity
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate_gp(SubgroupSpec::trivial(2), n).size() == 1);
  }
  // full constraints are vacuous
  for (int n = 1; n <= 3; ++n) {
    auto gp = enumerate_gp(SubgroupSpec::full(2), n);
    auto aut = enumerate_aut(2, n);
    CHECK(gp.size() == aut.size());
    CHECK(std::set<Portrait>(gp.begin(), gp.end()) ==
          std::set<Portrait>(aut.begin(), aut.end()));
  }
  // the cyclic constraint at k = 3, depth 2: 3^(1+3) = 81
  auto gp = enumerate_gp(SubgroupSpec::cyclic(3), 2);
  CHECK(gp_count(3, 3, 2) == 81);
  CHECK(gp.size() == 81);

  // closed under composition, inversion and sections
  std::set<Portrait> set(gp.begin(), gp.end());
  std::set<Portrait> depth1;
  for (const Portrait& g : enumerate_gp(SubgroupSpec::cyclic(3), 1)) {
    depth1.insert(g);
  }
  for (const Portrait& g : gp) {
    CHECK(set.count(g.inverse()) == 1);
    for (const Word& w : enumerate_words(Alphabet(3), 1)) {
      CHECK(depth1.count(g.section(w)) == 1);
    }
  }
  for (std::size_t i = 0; i < gp.size(); i += 7) {
    for (std::size_t j = 0; j < gp.size(); j += 11) {
      CHECK(set.count(gp[i].compose(gp[j])) == 1);
    }
  }
}
