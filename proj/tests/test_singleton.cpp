// Singletons: return words, the at-most-one-return criterion, exhaustive
// counts, the canonical run factorization with gap/overlap joints, and
// singleton types.  The predicate is cross-checked against class_size == 1;
// factorize/expand must round-trip on every singleton in range.

#include <doctest.h>

#include "fixtures.hpp"
#include "kabelian/cardinality.hpp"
#include "kabelian/singleton.hpp"

#include <set>
#include <string>
#include <vector>

using namespace kabelian;

namespace {

std::vector<std::string> all_words(std::size_t n, const std::string& sigma) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : out)
      for (char c : sigma) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("return words") {
  Alphabet abc("abc");
  Word u = Word::parse("acbaccb", abc);
  std::vector<ReturnWord> rs =
      returns(u, Word::parse("a", abc), Word::parse("b", abc));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].v.str() == "ac");
  CHECK(rs[1].v.str() == "acc");

  Alphabet ab("ab");
  Word v = Word::parse("ababab", ab);
  Word x = Word::parse("ab", ab);
  std::vector<ReturnWord> rs2 = returns(v, x, x);
  REQUIRE(rs2.size() == 1);
  CHECK(rs2[0].v.str() == "ab");
  CHECK(rs2[0].positions == std::vector<std::size_t>{1, 3});

  Word a5 = Word::parse("aaaaa", ab);
  Word a = Word::parse("a", ab);
  std::vector<ReturnWord> rs3 = returns(a5, a, a);
  REQUIRE(rs3.size() == 1);
  CHECK(rs3[0].v.str() == "a");
  CHECK(rs3[0].positions == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("singleton predicate fixtures") {
  Alphabet ab("ab");
  CHECK(is_singleton(Word::parse("ababab", ab), 2));
  CHECK_FALSE(is_singleton(Word::parse("aababb", ab), 2));
  Alphabet bin("01");
  CHECK(is_singleton(
      Word::parse(fixtures::kFactorizations[1].word, bin), 5));
}

TEST_CASE("singleton predicate equals class_size == 1") {
  Alphabet ab("ab");
  for (int k = 1; k <= 4; ++k)
    for (std::size_t n = 0; n <= 9; ++n)
      for (const std::string& s : all_words(n, "ab")) {
        Word w = Word::parse(s, ab);
        CHECK(is_singleton(w, k) == (class_size(w, k) == 1));
      }
}

TEST_CASE("singleton counts") {
  Alphabet bin("01");
  CHECK(singleton_count(10, 2, bin) == 24);
  for (std::size_t n = 4; n <= 12; ++n)
    CHECK(singleton_count(n, 2, bin) == 2 * static_cast<long long>(n) + 4);

  // n = 3 settled by the class_size oracle
  long long expect = 0;
  for (const std::string& s : all_words(3, "01"))
    if (class_size(Word::parse(s, bin), 2) == 1) ++expect;
  CHECK(singleton_count(3, 2, bin) == expect);
  CHECK(expect == 8);  // every binary word of length 3 is a 2-singleton

  Alphabet unary("a");
  for (std::size_t n : {1, 5, 9})
    CHECK(singleton_count(n, 1, unary) == 1);

  CHECK_THROWS_AS(singleton_count(40, 2, bin, 1 << 20), GuardError);
}

TEST_CASE("singleton list matches the pattern family") {
  Alphabet bin("01");
  for (std::size_t n : {4, 7, 10}) {
    std::vector<std::string> got;
    for (const Word& w : singleton_list(n, 2, bin)) got.push_back(w.str());
    CHECK(got == fixtures::binary_k2_singleton_patterns(n));
  }
}

TEST_CASE("worker count does not change enumeration results") {
  Alphabet bin("01");
  CHECK(singleton_count(11, 2, bin, kDefaultGuard, 4) ==
        singleton_count(11, 2, bin, kDefaultGuard, 1));
  std::vector<Word> par = singleton_list(9, 3, bin, kDefaultGuard, 3);
  std::vector<Word> seq = singleton_list(9, 3, bin, kDefaultGuard, 1);
  CHECK(par == seq);
}

TEST_CASE("worked factorizations render and round-trip") {
  Alphabet bin("01");
  for (const fixtures::FactorizationFixture& fx : fixtures::kFactorizations) {
    Word u = Word::parse(fx.word, bin);
    REQUIRE(is_singleton(u, fx.k));
    SingletonFactorization f = factorize_singleton(u, fx.k);
    CHECK(f.str() == fx.rendered);
    CHECK(expand_factorization(f) == u);
  }
}

TEST_CASE("factorization structure of the k=4 binary example") {
  Alphabet bin("01");
  Word u = Word::parse("0110110110010010010", bin);
  SingletonFactorization f = factorize_singleton(u, 4);
  REQUIRE(f.blocks.size() == 2);
  CHECK(f.t0.empty());
  CHECK(f.ts.empty());
  CHECK(f.blocks[0].root.str() == "011");
  CHECK(f.blocks[0].exponent == Rational(10, 3));
  CHECK(f.blocks[1].root.str() == "100");
  CHECK(f.blocks[1].exponent == Rational(11, 3));
  REQUIRE(f.joints.size() == 1);
  CHECK(f.joints[0].str() == "10");
  CHECK(f.signs == std::vector<int>{-1});
}

TEST_CASE("unary tail words factorize to a single block") {
  Alphabet ab("ab");
  for (int k = 2; k <= 4; ++k) {
    std::size_t n = static_cast<std::size_t>(k) + 3;
    SingletonFactorization f =
        factorize_singleton(Word::parse(std::string(n, 'a'), ab), k);
    CHECK(f.t0.empty());
    CHECK(f.ts.empty());
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].root.str() == "a");
    CHECK(f.blocks[0].exponent == Rational(static_cast<long long>(n)));
  }
}

TEST_CASE("ternary singleton from the corrected worked example") {
  // The consistent variant of the ternary showcase word: a singleton for
  // k = 4 and k = 5 whose factorization round-trips.
  Alphabet tern("012");
  Word u = Word::parse("201010120110011001100111111", tern);
  for (int k : {4, 5}) {
    CHECK(is_singleton(u, k));
    CHECK(class_size(u, k) == 1);
    SingletonFactorization f = factorize_singleton(u, k);
    CHECK(f.str() == "20101012 (0110)^15/4 [11]^-1 1^6");
    CHECK(expand_factorization(f) == u);
  }
}

TEST_CASE("expand rejects an inconsistent overlap joint") {
  // An overlap [t]^{-1} must be a shared segment: suffix of the left block
  // and prefix of the right one.  [011]^{-1} in front of 1^6 violates that.
  Alphabet bin("01");
  SingletonFactorization f;
  f.t0 = Word::parse("", bin);
  f.ts = Word::parse("", bin);
  f.blocks.push_back({Word::parse("0110", bin), Rational(15, 4)});
  f.blocks.push_back({Word::parse("1", bin), Rational(6)});
  f.joints.push_back(Word::parse("011", bin));
  f.signs.push_back(-1);
  CHECK_THROWS_AS(expand_factorization(f), DomainError);
}

TEST_CASE("factorize then expand is the identity on all small singletons") {
  Alphabet bin("01");
  for (int k = 1; k <= 4; ++k)
    for (std::size_t n = 0; n <= 11; ++n)
      for (const Word& u : singleton_list(n, k, bin)) {
        SingletonFactorization f = factorize_singleton(u, k);
        CHECK(expand_factorization(f) == u);
      }
}

TEST_CASE("factorizing a non-singleton fails") {
  Alphabet ab("ab");
  CHECK_THROWS_AS(factorize_singleton(Word::parse("aababb", ab), 2),
                  DomainError);
}

TEST_CASE("types drop the integer part of exponents") {
  Alphabet bin("01");
  SingletonType t1 = type_of(Word::parse("0000011", bin), 2);
  SingletonType t2 = type_of(Word::parse("000011", bin), 2);
  CHECK(t1 == t2);
  SingletonType t3 = type_of(Word::parse("010101", bin), 2);
  CHECK_FALSE(t1 == t3);
}

TEST_CASE("type enumeration is consistent with the member types") {
  Alphabet bin("01");
  std::vector<SingletonType> types = enumerate_types(8, 2, bin);
  std::set<std::string> bag;
  for (const SingletonType& t : types) bag.insert(t.str());
  CHECK(bag.size() == types.size());  // distinct
  for (const Word& u : singleton_list(8, 2, bin))
    CHECK(bag.count(type_of(u, 2).str()) == 1);
}
