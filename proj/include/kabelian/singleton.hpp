// k-abelian singletons: return words, the at-most-one-return criterion, the
// canonical factorization of a singleton into maximal k-full runs joined by
// short gap/overlap words, and singleton types.
//
// A return from x to y in u (|x| = |y| = k-1) is a nonempty word v such that
// vy is a factor of u, x is a prefix of vy, and neither x nor y occurs
// properly inside vy (i.e. starting after position 1 and ending before the
// last position).  u is a singleton iff every ordered pair of (k-1)-factors
// admits at most one distinct return word.

#pragma once

#include "kabelian/periodic.hpp"
#include "kabelian/word.hpp"

namespace kabelian {

struct ReturnWord {
  Word x, y, v;
  std::vector<std::size_t> positions;  // 1-based starts of vy, ascending
};

// Distinct returns from x to y in u, ordered by first occurrence.
std::vector<ReturnWord> returns(const Word& u, const Word& x, const Word& y);

bool is_singleton(const Word& u, int k);

// Exhaustive enumeration over all words of length n; GuardError when
// m^n exceeds `guard`.  `workers` > 1 splits the scan across threads.
long long singleton_count(std::size_t n, int k, const Alphabet& alpha,
                          unsigned long long guard = kDefaultGuard,
                          int workers = 1);
std::vector<Word> singleton_list(std::size_t n, int k, const Alphabet& alpha,
                                 unsigned long long guard = kDefaultGuard,
                                 int workers = 1);

// One repetition block r^q of a factorization.
struct Block {
  Word root;
  Rational exponent;
};

// u = t0 . r_1^{q_1} [t_1]^{s_1} r_2^{q_2} ... r_s^{q_s} . ts where
// [t]^{+1} inserts t between consecutive blocks and [t]^{-1} marks an
// overlap of the neighbouring blocks on the shared segment t.
struct SingletonFactorization {
  Word t0;                    // possibly the whole word when no blocks exist
  std::vector<Block> blocks;
  std::vector<Word> joints;   // size max(|blocks|-1, 0)
  std::vector<int> signs;     // +1 gap / -1 overlap, parallel to joints
  Word ts;

  std::string str() const;    // bracket notation, e.g. "0^10 [00]^-1 (0011)^7/2 [] (01)^13/2"
};

SingletonFactorization factorize_singleton(const Word& u, int k);
Word expand_factorization(const SingletonFactorization& f);

// The type of a singleton: everything in its factorization except the
// integer parts of the block exponents.
struct SingletonType {
  std::string t0, ts;
  std::vector<std::string> roots;
  std::vector<Rational> fracs;   // fractional parts of exponents
  std::vector<std::string> joints;
  std::vector<int> signs;

  auto operator<=>(const SingletonType&) const = default;
  std::string str() const;
};

SingletonType type_of(const Word& u, int k);
std::vector<SingletonType> enumerate_types(std::size_t n, int k,
                                           const Alphabet& alpha,
                                           unsigned long long guard = kDefaultGuard,
                                           int workers = 1);

}  // namespace kabelian
