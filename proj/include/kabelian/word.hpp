// Core word machinery: alphabets, finite words with 1-based half-open
// slicing, factor counting, factor-count vectors Psi_k and k-abelian
// equivalence testing.
//
// Conventions used throughout the library:
//   * positions are 1-based; u[i,j) denotes the factor from position i up to
//     but not including j, and is the empty word whenever i >= j;
//   * the empty word is a factor of u exactly |u|+1 times;
//   * lexicographic order of words follows the declared symbol order of the
//     alphabet, not raw character codes.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kabelian {

// Input violates an operation's domain (bad symbol, index out of range, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed a configured size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Sym = std::uint8_t;          // symbol index into an alphabet
using Syms = std::vector<Sym>;     // raw word over symbol indices

// Default cap on exhaustive enumerations (m^n words, class closures, ...).
inline constexpr unsigned long long kDefaultGuard = 1ull << 24;

// An ordered set of distinct single-character symbols.  The declared order
// defines the lexicographic order on words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  // Distinct characters of `text` in ascending character order.
  static Alphabet infer(std::string_view text);

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  char symbol(Sym i) const { return syms_.at(i); }
  bool contains(char c) const { return syms_.find(c) != std::string::npos; }
  Sym index(char c) const;
  const std::string& symbols() const { return syms_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string syms_;
};

// A finite word over an alphabet, stored as symbol indices.
class Word {
 public:
  Word() = default;
  Word(Alphabet alpha, Syms syms);
  static Word parse(std::string_view text, const Alphabet& alpha);
  static Word parse(std::string_view text);  // alphabet inferred from text

  const Alphabet& alphabet() const { return alpha_; }
  const Syms& syms() const { return s_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }

  Sym at(std::size_t i) const;  // 1-based
  std::string str() const;

  Word slice(std::size_t i, std::size_t j) const;  // u[i,j)
  Word slice_from(std::size_t i) const;            // u[i..] = u[i, n+1)
  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;
  Word concat(const Word& other) const;
  Word rotated(std::size_t r) const;  // left rotation by r positions
  Word with_symbol_at(std::size_t i, Sym v) const;  // copy with u[i] replaced

  bool operator==(const Word& other) const { return s_ == other.s_; }
  std::strong_ordering operator<=>(const Word& other) const {
    return s_ <=> other.s_;
  }

 private:
  Alphabet alpha_;
  Syms s_;
};

// Number of occurrences of x as a factor of u (|u|+1 for the empty word).
long long factor_count(const Word& u, const Word& x);

// Set of factors of u of length `len`, ascending; includes the empty word
// when len = 0.
std::vector<Syms> factor_set(const Word& u, std::size_t len);

// Psi_k(u): counts of every length-k factor of u.  Entries absent from the
// support are zero.
class FactorVector {
 public:
  FactorVector(Alphabet alpha, int k) : alpha_(std::move(alpha)), k_(k) {}

  int k() const { return k_; }
  const Alphabet& alphabet() const { return alpha_; }
  long long at(const Syms& z) const;
  void add(const Syms& z, long long d);
  const std::map<Syms, long long>& entries() const { return counts_; }
  long long total() const;  // sum of all counts

  bool operator==(const FactorVector& other) const {
    return k_ == other.k_ && counts_ == other.counts_;
  }

 private:
  Alphabet alpha_;
  int k_ = 1;
  std::map<Syms, long long> counts_;  // nonzero entries only
};

FactorVector psi(const Word& u, int k);

// u ~_k v: all factors of length <= k occur equally often in u and v.
bool k_abelian_equivalent(const Word& u, const Word& v, int k);

// Helpers shared across modules.
std::string render(const Alphabet& alpha, const Syms& s);
Syms to_syms(const Word& w);

}  // namespace kabelian
