#include "kabelian/periodic.hpp"

#include <algorithm>

namespace kabelian {

Word fractional_power(const Word& w, const Rational& q) {
  if (w.empty()) throw DomainError("fractional power of the empty word");
  if (q.num < 0) throw DomainError("exponent must be non-negative");
  long long total = q.num * static_cast<long long>(w.size());
  if (total % q.den != 0)
    throw DomainError("exponent * |word| must be integral");
  total /= q.den;
  Syms s;
  s.reserve(static_cast<std::size_t>(total));
  const Syms& r = w.syms();
  for (long long i = 0; i < total; ++i) s.push_back(r[i % r.size()]);
  return Word(w.alphabet(), std::move(s));
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw DomainError("primitivity of the empty word");
  return primitive_root(w).second == 1;
}

std::pair<Word, long long> primitive_root(const Word& w) {
  if (w.empty()) throw DomainError("primitive root of the empty word");
  std::size_t n = w.size();
  const Syms& s = w.syms();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return {w.prefix(p), static_cast<long long>(n / p)};
  }
  return {w, 1};  // unreachable: p = n always matches
}

Word min_rotation(const Word& w) {
  if (w.empty()) return w;
  // Booth's least-rotation algorithm on the doubled word.
  const Syms& s = w.syms();
  std::size_t n = s.size();
  std::vector<long long> f(2 * n, -1);  // failure function
  std::size_t best = 0;                 // least rotation start found so far
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Sym c = s[j % n];
    long long i = f[j - best - 1];
    while (i != -1 && c != s[(best + i + 1) % n]) {
      if (c < s[(best + i + 1) % n]) best = j - i - 1;
      i = f[i];
    }
    if (c != s[(best + i + 1) % n]) {
      if (c < s[best % n]) best = j;  // i == -1 here
      f[j - best] = -1;
    } else {
      f[j - best] = i + 1;
    }
  }
  return w.rotated(best % n);
}

std::set<Word> circular_factors(const Word& u, std::size_t len) {
  if (u.empty()) throw DomainError("circular factors of the empty word");
  std::set<Word> out;
  if (len == 0) {
    out.insert(Word(u.alphabet(), {}));
    return out;
  }
  // Materialize enough of u^omega to read every window of length len.
  const Syms& s = u.syms();
  Syms ext;
  ext.reserve(s.size() + len - 1);
  for (std::size_t i = 0; i < s.size() + len - 1; ++i)
    ext.push_back(s[i % s.size()]);
  for (std::size_t i = 0; i < s.size(); ++i)
    out.insert(Word(u.alphabet(), Syms(ext.begin() + i, ext.begin() + i + len)));
  return out;
}

bool is_k_full(const Word& w, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (w.empty()) throw DomainError("k-fullness of the empty word");
  if (k == 1) return w.size() == 1;  // |F_0| = 1
  return circular_factors(w, static_cast<std::size_t>(k) - 1).size() ==
         w.size();
}

std::vector<Run> runs(const Word& u) {
  std::vector<Run> out;
  std::size_t n = u.size();
  const Syms& s = u.syms();
  // Naive O(n^2) scan: for each period p, find the maximal segments where
  // s[i] == s[i+p] and keep those long enough to contain a square.  A run is
  // recorded only when p is the minimal period of the segment, i.e. when the
  // root is primitive.
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t i = 0;
    while (i + p < n) {
      if (s[i] != s[i + p]) { ++i; continue; }
      std::size_t j = i;
      while (j + p < n && s[j] == s[j + p]) ++j;
      // Segment [i, j+p) has period p and is maximal for this p.
      std::size_t len = j + p - i;
      if (len >= 2 * p) {
        Word root = u.slice(i + 1, i + p + 1);
        if (is_primitive(root)) {
          Run r;
          r.start = i + 1;
          r.root = std::move(root);
          r.exponent = Rational(static_cast<long long>(len),
                                static_cast<long long>(p));
          out.push_back(std::move(r));
        }
      }
      i = j + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const Run& a, const Run& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.root.size() < b.root.size();
  });
  return out;
}

}  // namespace kabelian
