// Words, factor counting, factor vectors and k-abelian equivalence.
// Fixtures are checked against a from-scratch oracle that compares counts of
// every factor of length <= k (the raw definition of ~_k), so the optimized
// prefix/suffix + Psi_k characterization never certifies itself.

#include <doctest.h>

#include "kabelian/word.hpp"

#include <map>
#include <string>
#include <vector>

using namespace kabelian;

namespace {

// Raw definition: |u|_x for a plain string, overlapping occurrences.
long long naive_count(const std::string& u, const std::string& x) {
  if (x.empty()) return static_cast<long long>(u.size()) + 1;
  long long c = 0;
  for (std::size_t i = 0; i + x.size() <= u.size(); ++i)
    if (u.compare(i, x.size(), x) == 0) ++c;
  return c;
}

// u ~_k v by comparing every factor length 1..k occurring in either word.
bool naive_equivalent(const std::string& u, const std::string& v, int k) {
  std::map<std::string, long long> cu, cv;
  for (int len = 1; len <= k; ++len) {
    for (std::size_t i = 0; i + len <= u.size(); ++i) ++cu[u.substr(i, len)];
    for (std::size_t i = 0; i + len <= v.size(); ++i) ++cv[v.substr(i, len)];
  }
  return cu == cv;
}

std::vector<std::string> all_binary_words(std::size_t n, char a, char b) {
  std::vector<std::string> out;
  for (unsigned long long x = 0; x < (1ULL << n); ++x) {
    std::string w(n, a);
    for (std::size_t i = 0; i < n; ++i)
      if (x >> i & 1) w[i] = b;
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("alphabet basics") {
  Alphabet a("abc");
  CHECK(a.size() == 3);
  CHECK(a.contains('b'));
  CHECK_FALSE(a.contains('z'));
  CHECK(a.index('c') == 2);
  CHECK(a.symbol(0) == 'a');
  CHECK(Alphabet::infer("baab").symbols() == "ab");
  CHECK(Alphabet::infer("cacb").symbols() == "abc");
  CHECK_THROWS_AS(Alphabet("aba"), DomainError);
  CHECK(Alphabet().empty());
}

TEST_CASE("word parsing and 1-based slicing") {
  Word w = Word::parse("abcde", Alphabet("abcde"));
  CHECK(w.size() == 5);
  CHECK(w.at(1) == 0);
  CHECK(w.at(5) == 4);
  CHECK(w.slice(2, 4).str() == "bc");
  CHECK(w.slice(3, 3).str() == "");
  CHECK(w.slice_from(3).str() == "cde");
  CHECK(w.prefix(2).str() == "ab");
  CHECK(w.suffix(2).str() == "de");
  CHECK(w.rotated(2).str() == "cdeab");
  CHECK(w.with_symbol_at(1, w.alphabet().index('e')).str() == "ebcde");
  CHECK(w.concat(Word::parse("ab", w.alphabet())).str() == "abcdeab");
  CHECK_THROWS_AS(Word::parse("abz", Alphabet("ab")), DomainError);
  CHECK_THROWS_AS(w.slice(0, 2), DomainError);
  CHECK(w.slice(4, 2).empty());  // inverted ranges collapse to epsilon
  CHECK_THROWS_AS(w.slice(1, 8), DomainError);
  CHECK(Word::parse("", Alphabet("ab")).empty());
}

TEST_CASE("factor counts") {
  Alphabet ab("ab");
  Word u = Word::parse("ababab", ab);
  CHECK(factor_count(u, Word::parse("ab", ab)) == 3);
  CHECK(factor_count(Word::parse("abc"), Word::parse("", Alphabet("abc"))) ==
        4);
  CHECK(factor_count(Word::parse("aaa", ab), Word::parse("aa", ab)) == 2);
  CHECK(factor_count(u, Word::parse("bb", ab)) == 0);

  // cross-check against the raw scan on random-ish material
  for (const std::string& s : all_binary_words(7, 'a', 'b')) {
    Word w = Word::parse(s, ab);
    for (const std::string& x : {"a", "ab", "aba", "bb", "abab"})
      CHECK(factor_count(w, Word::parse(x, ab)) == naive_count(s, x));
  }
}

TEST_CASE("factor vector Psi_k") {
  Alphabet ab("ab");
  FactorVector f = psi(Word::parse("ababaaaa", ab), 2);
  auto key = [&](const char* s) { return to_syms(Word::parse(s, ab)); };
  CHECK(f.at(key("aa")) == 3);
  CHECK(f.at(key("ab")) == 2);
  CHECK(f.at(key("ba")) == 2);
  CHECK(f.at(key("bb")) == 0);
  CHECK(f.total() == 7);  // |u| - k + 1

  FactorVector g = psi(Word::parse("", ab), 1);
  CHECK(g.total() == 0);

  FactorVector h = psi(Word::parse("aabab", ab), 3);
  CHECK(h.at(key("aab")) == 1);
  CHECK(h.at(key("aba")) == 1);
  CHECK(h.at(key("bab")) == 1);
  CHECK(h.at(key("aaa")) == 0);
  CHECK(h.total() == 3);
}

TEST_CASE("factor sets") {
  Alphabet ab("ab");
  Word u = Word::parse("aabab", ab);
  std::vector<Syms> fs = factor_set(u, 3);
  REQUIRE(fs.size() == 3);
  CHECK(render(ab, fs[0]) == "aab");
  CHECK(render(ab, fs[1]) == "aba");
  CHECK(render(ab, fs[2]) == "bab");
  CHECK(factor_set(u, 6).empty());
  CHECK(factor_set(u, 0) == std::vector<Syms>{Syms{}});
}

TEST_CASE("k-abelian equivalence fixtures") {
  Alphabet ab("ab");
  Word u = Word::parse("aababb", ab);
  CHECK(k_abelian_equivalent(u, Word::parse("aabbab", ab), 2));
  CHECK(k_abelian_equivalent(u, Word::parse("abaabb", ab), 2));
  CHECK(k_abelian_equivalent(u, Word::parse("abbaab", ab), 2));
  CHECK_FALSE(k_abelian_equivalent(Word::parse("ababab", ab),
                                   Word::parse("aababb", ab), 2));
  CHECK(k_abelian_equivalent(u, u, 4));
  // different lengths can never be equivalent
  CHECK_FALSE(
      k_abelian_equivalent(Word::parse("ab", ab), Word::parse("aba", ab), 1));
}

TEST_CASE("k-abelian equivalence matches the raw definition") {
  Alphabet ab("ab");
  for (int k = 1; k <= 4; ++k)
    for (std::size_t n = 0; n <= 6; ++n) {
      std::vector<std::string> words = all_binary_words(n, 'a', 'b');
      for (const std::string& su : words)
        for (const std::string& sv : words)
          CHECK(k_abelian_equivalent(Word::parse(su, ab), Word::parse(sv, ab),
                                     k) == naive_equivalent(su, sv, k));
    }
}
