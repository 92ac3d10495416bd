// k-switchings: the elementary rewriting operation whose reflexive-transitive
// closure coincides with k-abelian equivalence.  A switching
// S_{u,k}(i,j,l,m) with i < j <= l < m <= |u|-k+2 requires
// u[i,i+k-1) = u[l,l+k-1) and u[j,j+k-1) = u[m,m+k-1), and rewrites
//   u  ->  u[1,i) u[l,m) u[j,l) u[i,j) u[m..].
// The degenerate case j = l is allowed.

#pragma once

#include "kabelian/word.hpp"

namespace kabelian {

struct Switching {
  std::size_t i = 0, j = 0, l = 0, m = 0;

  bool operator==(const Switching&) const = default;
  auto operator<=>(const Switching&) const = default;
  std::string str() const {
    return std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(l) + "," + std::to_string(m);
  }
};

// Applies s to u; DomainError if the indices or factor conditions fail.
Word apply_switching(const Word& u, int k, const Switching& s);

// All valid switchings of u, in lexicographic (i,j,l,m) order.
std::vector<Switching> enumerate_switchings(const Word& u, int k);

// The switching class of u: closure of {u} under all k-switchings, sorted
// lexicographically.  GuardError if the class would exceed `guard` words.
std::vector<Word> switching_class(const Word& u, int k,
                                  unsigned long long guard = kDefaultGuard);

}  // namespace kabelian
