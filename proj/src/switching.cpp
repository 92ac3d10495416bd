#include "kabelian/switching.hpp"

#include <algorithm>
#include <set>

namespace kabelian {

namespace {

// Positions 1..n-k+2 carry (k-1)-symbol windows; win_eq(p,q) tells whether
// the windows at p and q coincide.
struct WindowEq {
  const Syms& s;
  std::size_t e;  // window length k-1

  bool operator()(std::size_t p, std::size_t q) const {
    for (std::size_t t = 0; t < e; ++t)
      if (s[p - 1 + t] != s[q - 1 + t]) return false;
    return true;
  }
};

void check_indices(std::size_t n, int k, const Switching& s) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (!(1 <= s.i && s.i < s.j && s.j <= s.l && s.l < s.m))
    throw DomainError("switching indices must satisfy i < j <= l < m");
  if (s.m + k > n + 2)
    throw DomainError("switching indices must satisfy m <= |u|-k+2");
}

Syms apply_raw(const Syms& s, const Switching& sw) {
  Syms out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin(), s.begin() + (sw.i - 1));
  out.insert(out.end(), s.begin() + (sw.l - 1), s.begin() + (sw.m - 1));
  out.insert(out.end(), s.begin() + (sw.j - 1), s.begin() + (sw.l - 1));
  out.insert(out.end(), s.begin() + (sw.i - 1), s.begin() + (sw.j - 1));
  out.insert(out.end(), s.begin() + (sw.m - 1), s.end());
  return out;
}

}  // namespace

Word apply_switching(const Word& u, int k, const Switching& s) {
  check_indices(u.size(), k, s);
  WindowEq eq{u.syms(), static_cast<std::size_t>(k) - 1};
  if (!eq(s.i, s.l))
    throw DomainError("switching requires u[i,i+k-1) = u[l,l+k-1)");
  if (!eq(s.j, s.m))
    throw DomainError("switching requires u[j,j+k-1) = u[m,m+k-1)");
  return Word(u.alphabet(), apply_raw(u.syms(), s));
}

std::vector<Switching> enumerate_switchings(const Word& u, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::vector<Switching> out;
  std::size_t n = u.size();
  if (n + 2 < static_cast<std::size_t>(k) + 3) return out;  // m <= n-k+2 needs n >= k+1
  std::size_t last = n - k + 2;  // largest admissible index
  WindowEq eq{u.syms(), static_cast<std::size_t>(k) - 1};
  for (std::size_t i = 1; i + 2 <= last; ++i)
    for (std::size_t j = i + 1; j + 1 <= last; ++j)
      for (std::size_t l = j; l + 1 <= last; ++l) {
        if (!eq(i, l)) continue;
        for (std::size_t m = l + 1; m <= last; ++m)
          if (eq(j, m)) out.push_back({i, j, l, m});
      }
  return out;
}

std::vector<Word> switching_class(const Word& u, int k,
                                  unsigned long long guard) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::set<Syms> seen;
  std::vector<Syms> queue;
  seen.insert(u.syms());
  queue.push_back(u.syms());
  std::size_t n = u.size();
  std::size_t e = static_cast<std::size_t>(k) - 1;
  bool any = n + 2 >= static_cast<std::size_t>(k) + 3;  // m <= n-k+2 needs n >= k+1
  for (std::size_t qi = 0; any && qi < queue.size(); ++qi) {
    Syms cur = queue[qi];  // copy: queue may reallocate while we expand
    std::size_t last = n - k + 2;
    WindowEq eq{cur, e};
    for (std::size_t i = 1; i + 2 <= last; ++i)
      for (std::size_t j = i + 1; j + 1 <= last; ++j)
        for (std::size_t l = j; l + 1 <= last; ++l) {
          if (!eq(i, l)) continue;
          for (std::size_t m = l + 1; m <= last; ++m) {
            if (!eq(j, m)) continue;
            Syms next = apply_raw(cur, {i, j, l, m});
            if (seen.insert(next).second) {
              if (seen.size() > guard)
                throw GuardError("switching class exceeds guard");
              queue.push_back(std::move(next));
            }
          }
        }
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const Syms& s : seen) out.emplace_back(u.alphabet(), s);
  return out;  // std::set iteration is already lexicographic
}

}  // namespace kabelian
