// Periodicity toolkit: exact rational exponents, fractional powers,
// primitive roots, lexicographically minimal rotations (Booth), circular
// factor sets, k-fullness, and maximal repetitions (runs).

#pragma once

#include "kabelian/word.hpp"

#include <numeric>
#include <set>

namespace kabelian {

// Exact rational, always normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  long long floor() const {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
  }
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
  }
  auto operator<=>(const Rational& o) const {
    return num * o.den <=> o.num * den;
  }
  bool operator==(const Rational& o) const = default;

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

// w^q for rational q >= 0 with q*|w| integral: |q*|w|| leading symbols of
// w repeated.
Word fractional_power(const Word& w, const Rational& q);

bool is_primitive(const Word& w);

// (r, e) with w = r^e, r primitive, e maximal.
std::pair<Word, long long> primitive_root(const Word& w);

// Lexicographically least rotation (Booth's algorithm).
Word min_rotation(const Word& w);

// F_len(u°): factors of length len of the bi-infinite periodic extension
// of u; equivalently the len-windows of u read circularly.
std::set<Word> circular_factors(const Word& u, std::size_t len);

// |F_{k-1}(w°)| = |w|; for k = 1 this degenerates to |w| = 1.
bool is_k_full(const Word& w, int k);

// A maximal repetition u[start, start+len) = root^exponent with primitive
// root and exponent >= 2, non-extendable in either direction.
struct Run {
  std::size_t start = 0;  // 1-based
  Word root;              // primitive
  Rational exponent;      // >= 2, exponent * |root| = len

  std::size_t length() const {
    // exponent * |root| is integral by construction
    return static_cast<std::size_t>(
        exponent.num * static_cast<long long>(root.size()) / exponent.den);
  }
  std::size_t end() const { return start + length(); }  // exclusive
};

// All runs of u, sorted by start position, then root length.
std::vector<Run> runs(const Word& u);

}  // namespace kabelian
