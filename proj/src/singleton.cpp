#include "kabelian/singleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace kabelian {

namespace {

// 1-based start positions of x in u; the empty factor occurs at 1..|u|+1.
std::vector<std::size_t> occurrences(const Word& u, const Syms& x) {
  std::vector<std::size_t> out;
  const Syms& s = u.syms();
  if (x.empty()) {
    for (std::size_t i = 1; i <= s.size() + 1; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t i = 0; i + x.size() <= s.size(); ++i)
    if (std::equal(x.begin(), x.end(), s.begin() + i)) out.push_back(i + 1);
  return out;
}

// Distinct return words from x to y given their occurrence lists; stops
// early once `cap` distinct returns have been seen (0 = no cap).
std::vector<ReturnWord> returns_impl(const Word& u, const Word& x,
                                     const Word& y,
                                     const std::vector<std::size_t>& px,
                                     const std::vector<std::size_t>& py,
                                     std::size_t cap) {
  std::vector<ReturnWord> out;
  std::map<Syms, std::size_t> index_of;
  for (std::size_t a = 0; a < px.size(); ++a) {
    std::size_t p = px[a];
    // Minimal y-occurrence strictly after p; no y can then lie inside (p,q).
    auto it = std::upper_bound(py.begin(), py.end(), p);
    if (it == py.end()) continue;
    std::size_t q = *it;
    // No x-occurrence strictly inside (p, q) either.
    if (a + 1 < px.size() && px[a + 1] < q) continue;
    Syms v(u.syms().begin() + (p - 1), u.syms().begin() + (q - 1));
    auto [pos, fresh] = index_of.try_emplace(v, out.size());
    if (fresh) {
      ReturnWord r;
      r.x = x;
      r.y = y;
      r.v = Word(u.alphabet(), v);
      out.push_back(std::move(r));
    }
    out[pos->second].positions.push_back(p);
    if (cap && index_of.size() > cap) break;
  }
  return out;
}

}  // namespace

std::vector<ReturnWord> returns(const Word& u, const Word& x, const Word& y) {
  if (x.size() != y.size())
    throw DomainError("returns requires |x| = |y|");
  for (const Word* w : {&x, &y})
    if (!w->empty() && !u.empty() && !(u.alphabet() == w->alphabet()))
      throw DomainError("returns requires words over the same alphabet");
  return returns_impl(u, x, y, occurrences(u, x.syms()),
                      occurrences(u, y.syms()), 0);
}

bool is_singleton(const Word& u, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (k == 1) {
    // Abelian singletons are exactly the powers of a single letter.
    for (std::size_t i = 2; i <= u.size(); ++i)
      if (u.at(i) != u.at(1)) return false;
    return true;
  }
  std::vector<Syms> xs = factor_set(u, static_cast<std::size_t>(k) - 1);
  std::vector<std::vector<std::size_t>> occ;
  occ.reserve(xs.size());
  for (const Syms& x : xs) occ.push_back(occurrences(u, x));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b) {
      Word wx(u.alphabet(), xs[a]), wy(u.alphabet(), xs[b]);
      if (returns_impl(u, wx, wy, occ[a], occ[b], 1).size() > 1) return false;
    }
  return true;
}

namespace {

unsigned long long guarded_total(std::size_t n, std::size_t m,
                                 unsigned long long guard) {
  if (m == 0) {
    if (n > 0) throw DomainError("empty alphabet with positive length");
    return 1;
  }
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > guard / m)
      throw GuardError("enumeration size exceeds guard");
    total *= m;
  }
  if (total > guard) throw GuardError("enumeration size exceeds guard");
  return total;
}

Word word_at(const Alphabet& alpha, std::size_t n, unsigned long long idx) {
  Syms s(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<Sym>(idx % alpha.size());
    idx /= alpha.size();
  }
  return Word(alpha, std::move(s));
}

// Runs `body` over [0, total) split across `workers` contiguous chunks; the
// per-chunk outputs are concatenated in chunk order, so results are
// identical to a sequential scan.
template <typename T, typename Body>
std::vector<T> parallel_scan(unsigned long long total, int workers,
                             Body body) {
  if (workers < 1) workers = 1;
  auto w = static_cast<unsigned long long>(workers);
  if (w > total) w = total ? total : 1;
  std::vector<std::vector<T>> parts(w);
  std::vector<std::thread> threads;
  for (unsigned long long c = 0; c < w; ++c) {
    unsigned long long lo = total / w * c + std::min(c, total % w);
    unsigned long long hi = lo + total / w + (c < total % w ? 1 : 0);
    threads.emplace_back(
        [&, c, lo, hi] { body(lo, hi, parts[c]); });
  }
  for (auto& t : threads) t.join();
  std::vector<T> out;
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

std::vector<Word> singleton_list(std::size_t n, int k, const Alphabet& alpha,
                                 unsigned long long guard, int workers) {
  unsigned long long total = guarded_total(n, alpha.size(), guard);
  return parallel_scan<Word>(
      total, workers,
      [&](unsigned long long lo, unsigned long long hi,
          std::vector<Word>& out) {
        for (unsigned long long i = lo; i < hi; ++i) {
          Word w = word_at(alpha, n, i);
          if (is_singleton(w, k)) out.push_back(std::move(w));
        }
      });
}

long long singleton_count(std::size_t n, int k, const Alphabet& alpha,
                          unsigned long long guard, int workers) {
  unsigned long long total = guarded_total(n, alpha.size(), guard);
  auto counts = parallel_scan<long long>(
      total, workers,
      [&](unsigned long long lo, unsigned long long hi,
          std::vector<long long>& out) {
        long long c = 0;
        for (unsigned long long i = lo; i < hi; ++i)
          if (is_singleton(word_at(alpha, n, i), k)) ++c;
        out.push_back(c);
      });
  long long c = 0;
  for (long long part : counts) c += part;
  return c;
}

SingletonFactorization factorize_singleton(const Word& u, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::size_t e = static_cast<std::size_t>(k) - 1;
  std::size_t n = u.size();

  // Every (k-1)-factor occurring at least three times pins down a unique
  // return word and hence a repetition, which extends to a maximal run.
  struct Span {
    std::size_t s, t;  // [s, t), 1-based
    std::size_t p;     // period
  };
  std::vector<Span> spans;
  for (const Syms& x : factor_set(u, e)) {
    std::vector<std::size_t> occ = occurrences(u, x);
    if (occ.size() < 3) continue;
    std::size_t p = occ[1] - occ[0];
    for (std::size_t i = 1; i + 1 < occ.size(); ++i)
      if (occ[i + 1] - occ[i] != p)
        throw DomainError("unequally spaced repeated factor: not a singleton");
    // Repetition v^{l} x spans [first, last + e); consecutive gap words all
    // equal v because the spacing is the period.
    for (std::size_t i = 0; i + 1 < occ.size(); ++i)
      for (std::size_t d = 0; d < p; ++d)
        if (u.at(occ[i] + d) != u.at(occ[0] + d))
          throw DomainError("distinct returns to a factor: not a singleton");
    std::size_t s = occ.front();
    std::size_t t = occ.back() + e;  // exclusive
    while (s > 1 && u.at(s - 1) == u.at(s - 1 + p)) --s;
    while (t <= n && u.at(t) == u.at(t - p)) ++t;
    spans.push_back({s, t, p});
  }

  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  });
  spans.erase(std::unique(spans.begin(), spans.end(),
                          [](const Span& a, const Span& b) {
                            return a.s == b.s && a.t == b.t && a.p == b.p;
                          }),
              spans.end());
  for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
    if (spans[i + 1].s <= spans[i].s || spans[i + 1].t <= spans[i].t)
      throw DomainError("nested runs: not a singleton");
    if (spans[i].t > spans[i + 1].s &&
        spans[i].t - spans[i + 1].s > (e >= 1 ? e - 1 : 0))
      throw DomainError("runs overlap by more than k-2: not a singleton");
  }

  SingletonFactorization f;
  if (spans.empty()) {
    f.t0 = u;
    f.ts = Word(u.alphabet(), {});
    return f;
  }
  f.t0 = u.slice(1, spans.front().s);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Span& sp = spans[i];
    Word root = u.slice(sp.s, sp.s + sp.p);
    if (!is_primitive(root))
      throw DomainError("imprimitive run root: not a singleton");
    f.blocks.push_back(
        {root, Rational(static_cast<long long>(sp.t - sp.s),
                        static_cast<long long>(sp.p))});
    if (i + 1 < spans.size()) {
      if (spans[i + 1].s >= sp.t) {  // gap (possibly empty)
        f.joints.push_back(u.slice(sp.t, spans[i + 1].s));
        f.signs.push_back(+1);
      } else {  // overlap on the shared segment
        f.joints.push_back(u.slice(spans[i + 1].s, sp.t));
        f.signs.push_back(-1);
      }
    }
  }
  f.ts = u.slice_from(spans.back().t);
  return f;
}

Word expand_factorization(const SingletonFactorization& f) {
  if (f.joints.size() != f.signs.size() ||
      f.joints.size() + 1 != std::max<std::size_t>(f.blocks.size(), 1))
    throw DomainError("malformed factorization");
  Word w = f.t0;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    Word piece = fractional_power(f.blocks[i].root, f.blocks[i].exponent);
    if (i == 0) {
      w = w.concat(piece);
      continue;
    }
    const Word& t = f.joints[i - 1];
    if (f.signs[i - 1] > 0) {
      w = w.concat(t).concat(piece);
    } else {
      if (t.size() > piece.size() || piece.prefix(t.size()) != t)
        throw DomainError("overlap word is not a prefix of the right block");
      if (t.size() > w.size() || w.suffix(t.size()) != t)
        throw DomainError("overlap word is not a suffix of the left block");
      w = w.concat(piece.slice_from(t.size() + 1));
    }
  }
  return w.concat(f.ts);
}

namespace {

std::string piece(const Word& root, const Rational& q) {
  std::string r = root.str();
  std::string out = root.size() == 1 ? r : "(" + r + ")";
  return out + "^" + q.str();
}

}  // namespace

std::string SingletonFactorization::str() const {
  std::vector<std::string> parts;
  if (!t0.empty()) parts.push_back(t0.str());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) {
      std::string j = "[" + joints[i - 1].str() + "]";
      if (signs[i - 1] < 0) j += "^-1";
      parts.push_back(j);
    }
    parts.push_back(piece(blocks[i].root, blocks[i].exponent));
  }
  if (!ts.empty()) parts.push_back(ts.str());
  if (parts.empty()) parts.push_back("");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ";
    out += parts[i];
  }
  return out;
}

std::string SingletonType::str() const {
  std::string out = "'" + t0 + "'";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) {
      out += " [" + joints[i - 1] + "]";
      if (signs[i - 1] < 0) out += "^-1";
    }
    out += " ";
    std::string r = roots[i];
    out += r.size() == 1 ? r : "(" + r + ")";
    out += "^*";
    if (fracs[i].num != 0) out += "+" + fracs[i].str();
  }
  out += " '" + ts + "'";
  return out;
}

SingletonType type_of(const Word& u, int k) {
  SingletonFactorization f = factorize_singleton(u, k);
  SingletonType t;
  t.t0 = f.t0.str();
  t.ts = f.ts.str();
  for (const Block& b : f.blocks) {
    t.roots.push_back(b.root.str());
    t.fracs.push_back(b.exponent.frac());
  }
  for (const Word& j : f.joints) t.joints.push_back(j.str());
  t.signs = f.signs;
  return t;
}

std::vector<SingletonType> enumerate_types(std::size_t n, int k,
                                           const Alphabet& alpha,
                                           unsigned long long guard,
                                           int workers) {
  std::vector<Word> singles = singleton_list(n, k, alpha, guard, workers);
  std::set<SingletonType> types;
  for (const Word& w : singles) types.insert(type_of(w, k));
  return {types.begin(), types.end()};
}

}  // namespace kabelian
