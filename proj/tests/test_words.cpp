#include "onerel/words.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "onerel/error.hpp"

using namespace onerel;
using onerel::testing::random_letters;
using onerel::testing::random_word;

namespace {

/// Independent reducer: cancel a randomly chosen adjacent inverse pair until
/// none remains. Used to check confluence of the production reduction.
std::vector<Letter> reduce_random_order(std::vector<Letter> v, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1].inverse()) hits.push_back(i);
    if (hits.empty()) return v;
    std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
    std::size_t at = hits[pick(rng)];
    v.erase(v.begin() + at, v.begin() + at + 2);
  }
}

}  // namespace

TEST_CASE("parse_word basics") {
  CHECK(parse_word("abAB", 2).size() == 4);
  CHECK(parse_word("aA", 2).empty());
  CHECK(parse_word("aaaabABAbaBAAbAB", 2).size() == 16);
  CHECK(render(parse_word("aA", 2)) == "1");
  CHECK(render(parse_word("1", 2)) == "1");
  CHECK_THROWS_AS(parse_word("axc", 2), Error);
  CHECK_THROWS_AS(parse_word("a2", 2), Error);
  CHECK(parse_word("ab BA", 2).empty());  // whitespace ignored, then cancellation
}

TEST_CASE("parse_word numeric mode for large alphabets") {
  Word w = parse_word("g1g30G1", 30);
  CHECK(w.size() == 3);
  CHECK(render(w) == "g1g30G1");
  CHECK_THROWS_AS(parse_word("g31", 30), Error);
  CHECK_THROWS_AS(parse_word("ab", 30), Error);
}

TEST_CASE("round trip parse(render(w)) == w") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    Word w = random_word(rng, 4, it % 40);
    CHECK(parse_word(render(w), 4) == w);
  }
}

TEST_CASE("free reduction is confluent") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    auto letters = random_letters(rng, 3, 1 + it % 50);
    Word leftmost(letters, 3);
    auto other = reduce_random_order(letters, rng);
    CHECK(Word(other, 3) == leftmost);
    CHECK(Word(leftmost.letters(), 3) == leftmost);  // idempotent
  }
}

TEST_CASE("cyclic reduction") {
  auto [core1, conj1] = cyclically_reduce(parse_word("abAB", 2));
  CHECK(render(core1) == "abAB");
  CHECK(conj1.empty());

  auto [core2, conj2] = cyclically_reduce(parse_word("AabABa", 2));
  CHECK(render(core2) == "bABa");
  CHECK(conj2.empty());

  // "BabABb" is conjugate to abAB; the core is unique only up to rotation.
  Word w = parse_word("BabABb", 2);
  auto [core3, conj3] = cyclically_reduce(w);
  CHECK(core3.cyclically_reduced());
  CHECK(conj3 * core3 * conj3.inverse() == w);
  Word target = parse_word("abAB", 2);
  bool is_rotation = false;
  for (std::size_t k = 0; k < core3.size(); ++k)
    if (core3.rotated(k) == target) is_rotation = true;
  CHECK(is_rotation);

  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    Word v = random_word(rng, 3, it % 30);
    auto [core, conj] = cyclically_reduce(v);
    CHECK(core.cyclically_reduced());
    CHECK(conj * core * conj.inverse() == v);
  }
}

TEST_CASE("primitive_root") {
  auto r1 = primitive_root(parse_word("abab", 2));
  CHECK(render(r1.root) == "ab");
  CHECK(r1.exponent == 2);

  auto r2 = primitive_root(parse_word("abAB", 2));
  CHECK(render(r2.root) == "abAB");
  CHECK(r2.exponent == 1);

  auto r3 = primitive_root(parse_word("ababab", 2));
  CHECK(render(r3.root) == "ab");
  CHECK(r3.exponent == 3);

  CHECK_THROWS_AS(primitive_root(Word(2)), Error);

  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    Word w = random_word(rng, 2, 1 + it % 24);
    if (w.empty()) continue;
    auto rd = primitive_root(w);
    CHECK(rd.conjugator * rd.root.pow(rd.exponent) * rd.conjugator.inverse() == w);
    // root-freeness: no nontrivial rotation of the root equals the root
    const Word& r = rd.root;
    if (r.size() <= 32) {
      for (std::size_t k = 1; k < r.size(); ++k) CHECK(r.rotated(k) != r);
    }
  }
}

TEST_CASE("abelianize") {
  auto v1 = abelianize(parse_word("abAB", 2));
  CHECK(v1 == std::vector<long long>{0, 0});
  auto v2 = abelianize(parse_word("ab", 2));
  CHECK(v2 == std::vector<long long>{1, 1});
  CHECK(in_commutator_subgroup(parse_word("aaaabABAbaBAAbAB", 2)));

  std::mt19937_64 rng(19);
  for (int it = 0; it < 200; ++it) {
    Word u = random_word(rng, 3, it % 20);
    Word v = random_word(rng, 3, (it * 7) % 20);
    auto au = abelianize(u), av = abelianize(v), auv = abelianize(u * v);
    for (int g = 0; g < 3; ++g) CHECK(auv[g] == au[g] + av[g]);
  }
}

TEST_CASE("evaluate expressions") {
  std::map<std::string, Word> none;
  CHECK(render(evaluate("[a,b]", none, 2)) == "abAB");
  CHECK(render(evaluate("(ab)^3", none, 2)) == "ababab");
  CHECK(render(evaluate("a^-1", none, 2)) == "A");
  CHECK(render(evaluate("a'", none, 2)) == "A");
  CHECK(render(evaluate("a^b", none, 2)) == "baB");  // conjugation = b a b^-1
  CHECK(evaluate("a * A", none, 2).empty());
  CHECK_THROWS_AS(evaluate("[a,b", none, 2), Error);
  CHECK_THROWS_AS(evaluate("t1", none, 2), Error);
}

TEST_CASE("counterexample identity machinery") {
  std::map<std::string, Word> b;
  b["v"] = parse_word("aaaabABAbaBAAbAB", 2);
  b["t1"] = parse_word("baBAAAA", 2);
  b["t2"] = parse_word("baBaabABB", 2);
  b["d"] = parse_word("baBaabABaBaa", 2);
  b["g"] = parse_word("AAbbaBAAAAAbaBAA", 2);
  b["h"] = parse_word("bABaaaaaabABBaa", 2);
  Word lhs = evaluate("v^-1 * (t1 v t1^-1) * (t2 v t2^-1)", b, 2);
  Word rhs = evaluate("d [g,h] d^-1", b, 2);
  CHECK(lhs == rhs);
  CHECK(!lhs.empty());
}
