#include "kabelian/necklace.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kabelian {

namespace {

long euler_phi(long d) {
  long r = d;
  for (long p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      r -= r / p;
      while (d % p == 0) d /= p;
    }
  if (d > 1) r -= r / d;
  return r;
}

BigInt power(std::size_t base, std::size_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace

BigInt necklace_count(std::size_t m, std::size_t l) {
  if (l == 0) return 1;
  BigInt sum = 0;
  for (std::size_t d = 1; d <= l; ++d)
    if (l % d == 0) sum += euler_phi(static_cast<long>(d)) * power(m, l / d);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(),
              BigInt(static_cast<unsigned long>(l)).get_mpz_t());
  if (r != 0) throw DomainError("necklace count is not integral");
  return q;
}

std::vector<Word> enumerate_necklaces(const Alphabet& alpha, std::size_t l) {
  std::vector<Word> out;
  if (l == 0) {
    out.emplace_back(alpha, Syms{});
    return out;
  }
  if (alpha.empty()) return out;
  // Fredricksen-Kessler-Maiorana: emits least representatives ascending.
  std::size_t m = alpha.size();
  Syms a(l + 1, 0);
  auto rec = [&](auto&& self, std::size_t t, std::size_t p) -> void {
    if (t > l) {
      if (l % p == 0) out.emplace_back(alpha, Syms(a.begin() + 1, a.end()));
      return;
    }
    a[t] = a[t - p];
    self(self, t + 1, p);
    for (std::size_t v = a[t - p] + 1; v < m; ++v) {
      a[t] = static_cast<Sym>(v);
      self(self, t + 1, t);
    }
  };
  rec(rec, 1, 1);
  return out;
}

Cycle cycle_of_word(const Word& w, std::size_t n) {
  if (n < 1) throw DomainError("window length must be >= 1");
  if (w.empty()) throw DomainError("cycle of the empty word");
  if (!is_primitive(w)) throw DomainError("cycle word must be primitive");
  const Syms& s = w.syms();
  Syms ext;
  ext.reserve(s.size() + n - 1);
  for (std::size_t i = 0; i < s.size() + n - 1; ++i)
    ext.push_back(s[i % s.size()]);
  Cycle c;
  c.label = w;
  std::set<Syms> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Syms v(ext.begin() + i, ext.begin() + i + n);
    if (!seen.insert(v).second)
      throw DomainError("cycle word is not (n+1)-full: windows repeat");
    c.vertices.push_back(std::move(v));
  }
  return c;
}

Decomposition validate_decomposition(const std::vector<Word>& labels,
                                     std::size_t n) {
  if (labels.empty())
    throw DomainError("decomposition needs at least one cycle");
  Decomposition d;
  d.n = n;
  d.alpha = labels.front().alphabet();
  for (const Word& w : labels)
    if (!w.empty() && !(w.alphabet() == d.alpha))
      throw DomainError("cycle labels must share one alphabet");

  std::set<Syms> used;
  for (const Word& w : labels) {
    Cycle c = cycle_of_word(w, n);
    for (const Syms& v : c.vertices)
      if (!used.insert(v).second)
        throw DomainError("cycles overlap on vertex " + render(d.alpha, v));
    d.cycles.push_back(std::move(c));
  }

  BigInt bound = necklace_count(d.alpha.size(), n);
  if (BigInt(static_cast<unsigned long>(d.cycles.size())) > bound)
    throw DomainError("more vertex-disjoint cycles than the Mykkeltveit bound");
  d.maximal = BigInt(static_cast<unsigned long>(d.cycles.size())) == bound;

  // Leftover vertices V_otimes: everything not on a cycle.
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kDefaultGuard / d.alpha.size())
      throw GuardError("vertex set too large to enumerate");
    total *= d.alpha.size();
  }
  Syms v(n, 0);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    unsigned long long t = idx;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<Sym>(t % d.alpha.size());
      t /= d.alpha.size();
    }
    if (!used.count(v)) d.leftover.push_back(v);
  }
  if (d.maximal && !d.leftover.empty())
    throw DomainError("maximal decomposition leaves vertices uncovered");
  return d;
}

QuotientGraph quotient(const Decomposition& d) {
  QuotientGraph q;
  q.alpha = d.alpha;
  q.n = d.n;
  q.undirected = d.maximal;
  std::map<Syms, std::size_t> owner;
  for (const Cycle& c : d.cycles) {
    q.labels.push_back(c.label.str());
    q.blocks.push_back(c.vertices);
  }
  for (const Syms& v : d.leftover) {
    q.labels.push_back(render(d.alpha, v));
    q.blocks.push_back({v});
  }
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (const Syms& v : q.blocks[b])
      if (!owner.emplace(v, b).second)
        throw DomainError("blocks overlap");
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (const Syms& v : q.blocks[b])
      for (std::size_t a = 0; a < d.alpha.size(); ++a) {
        Syms w(v.begin() + 1, v.end());
        w.push_back(static_cast<Sym>(a));
        auto it = owner.find(w);
        if (it == owner.end() || it->second == b) continue;
        std::size_t x = b, y = it->second;
        if (q.undirected && x > y) std::swap(x, y);
        q.edges.insert({x, y});
      }
  return q;
}

QuotientGraph necklace_graph(const Alphabet& alpha, std::size_t n) {
  if (n < 1) throw DomainError("necklace graph needs n >= 1");
  if (alpha.empty()) throw DomainError("necklace graph needs symbols");
  Decomposition d;
  d.n = n;
  d.alpha = alpha;
  d.maximal = true;
  for (const Word& rep : enumerate_necklaces(alpha, n)) {
    Cycle c = cycle_of_word(primitive_root(rep).first, n);
    c.label = rep;  // blocks are labelled by the full representative
    d.cycles.push_back(std::move(c));
  }
  return quotient(d);
}

namespace {

struct BudgetStop {};
struct FoundStop {};

// Shared backtracking engine for hamiltonian_path and longest_path.
class PathSearcher {
 public:
  PathSearcher(const QuotientGraph& g, bool ham, unsigned long long budget)
      : ham_(ham), budget_(budget), nv_(g.blocks.size()) {
    adj_.resize(nv_);
    und_.resize(nv_);
    for (const auto& [a, b] : g.edges) {
      adj_[a].push_back(b);
      if (g.undirected) adj_[b].push_back(a);
      und_[a].push_back(b);
      und_[b].push_back(a);
    }
    for (auto& v : und_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    undirected_ = g.undirected;
    for (auto& v : adj_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      std::sort(v.begin(), v.end(), [&](std::size_t x, std::size_t y) {
        auto dx = adj_[x].size(), dy = adj_[y].size();
        return dx != dy ? dx < dy : x < y;
      });
    }
    color_.assign(nv_, -1);
    bipartite_ = two_color();
    rem_[0] = rem_[1] = 0;
    if (bipartite_)
      for (std::size_t v = 0; v < nv_; ++v) ++rem_[color_[v]];
    rem_total_ = nv_;
    rdeg_.resize(nv_);
    for (std::size_t v = 0; v < nv_; ++v) {
      rdeg_[v] = und_[v].size();
      if (rdeg_[v] == 0) ++cnt0_;
    }
    visited_.assign(nv_, 0);
    upper_ = nv_;
    if (bipartite_)
      upper_ = std::min<std::size_t>(
          nv_, 2 * std::min(rem_[0], rem_[1]) + 1);
  }

  PathSearch run(std::optional<std::size_t> forced_start) {
    PathSearch res;
    if (nv_ == 0) {
      res.status = PathSearch::Status::kFound;
      return res;
    }
    if (ham_ && upper_ < nv_) {
      // The alternation bound already rules a covering path out.
      res.status = PathSearch::Status::kExhausted;
      return res;
    }
    std::vector<std::size_t> starts;
    if (forced_start) {
      starts.push_back(*forced_start);
    } else {
      for (std::size_t v = 0; v < nv_; ++v) starts.push_back(v);
      std::sort(starts.begin(), starts.end(),
                [&](std::size_t x, std::size_t y) {
                  auto dx = adj_[x].size(), dy = adj_[y].size();
                  return dx != dy ? dx < dy : x < y;
                });
    }
    try {
      for (std::size_t s : starts) dfs(s);
      res.status = ham_ && best_.size() != nv_
                       ? PathSearch::Status::kExhausted
                       : PathSearch::Status::kFound;
    } catch (BudgetStop) {
      res.status = PathSearch::Status::kBudget;
    } catch (FoundStop) {
      res.status = PathSearch::Status::kFound;
    }
    res.path = best_;
    res.nodes = nodes_;
    return res;
  }

 private:
  bool two_color() {
    for (std::size_t s = 0; s < nv_; ++s) {
      if (color_[s] != -1) continue;
      color_[s] = 0;
      std::vector<std::size_t> stack{s};
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : und_[v]) {
          if (color_[u] == -1) {
            color_[u] = 1 - color_[v];
            stack.push_back(u);
          } else if (color_[u] == color_[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Max vertices addable after a path endpoint of colour c.
  std::size_t headroom(int c) const {
    if (!bipartite_) return rem_total_;
    std::size_t other = rem_[1 - c], same = rem_[c];
    return std::min(2 * other, 2 * same + 1);
  }

  void dfs(std::size_t v) {
    if (++nodes_ > budget_) throw BudgetStop{};
    visited_[v] = 1;
    cur_.push_back(v);
    --rem_total_;
    if (bipartite_) --rem_[color_[v]];
    if (rdeg_[v] == 0) --cnt0_;  // v no longer counts as stranded
    for (std::size_t u : und_[v]) {
      --rdeg_[u];
      if (!visited_[u] && rdeg_[u] == 0) ++cnt0_;
    }

    if (cur_.size() > best_.size()) {
      best_ = cur_;
      if (best_.size() == (ham_ ? nv_ : upper_)) throw FoundStop{};
    }

    bool prune = false;
    if (ham_ && undirected_ && cnt0_ >= 2) prune = true;
    std::size_t need = ham_ ? nv_ : best_.size() + 1;
    if (!prune && cur_.size() + headroom(color_[v]) < need) prune = true;
    if (!prune) {
      // Warnsdorff order: expand the successor with the fewest remaining
      // unvisited neighbours first (ties by index, so runs are deterministic).
      std::vector<std::pair<std::size_t, std::size_t>> next;
      for (std::size_t u : adj_[v])
        if (!visited_[u]) next.emplace_back(rdeg_[u], u);
      std::sort(next.begin(), next.end());
      for (const auto& [d, u] : next) dfs(u);
    }

    for (std::size_t u : und_[v]) {
      if (!visited_[u] && rdeg_[u] == 0) --cnt0_;
      ++rdeg_[u];
    }
    if (rdeg_[v] == 0) ++cnt0_;
    if (bipartite_) ++rem_[color_[v]];
    ++rem_total_;
    cur_.pop_back();
    visited_[v] = 0;
  }

  bool ham_;
  unsigned long long budget_;
  std::size_t nv_;
  bool undirected_ = false;
  std::vector<std::vector<std::size_t>> adj_;  // successors, ascending degree
  std::vector<std::vector<std::size_t>> und_;  // underlying neighbours
  std::vector<int> color_;
  bool bipartite_ = false;
  std::size_t rem_[2];
  std::size_t rem_total_;
  std::vector<std::size_t> rdeg_;
  std::size_t cnt0_ = 0;
  std::vector<char> visited_;
  std::vector<std::size_t> cur_, best_;
  std::size_t upper_;
  unsigned long long nodes_ = 0;
};

}  // namespace

PathSearch hamiltonian_path(const QuotientGraph& g,
                            unsigned long long budget) {
  return PathSearcher(g, true, budget).run(std::nullopt);
}

PathSearch longest_path(const QuotientGraph& g, unsigned long long budget) {
  return PathSearcher(g, false, budget).run(std::nullopt);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bipartition(
    const QuotientGraph& g) {
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> parts;
  std::vector<int> side(g.blocks.size());
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    long long ones = 0;
    for (char c : g.labels[b])
      if (c == '1') ++ones;
    side[b] = static_cast<int>(ones % 2);
    (side[b] == 0 ? parts.first : parts.second).push_back(b);
  }
  for (const auto& [a, b] : g.edges)
    if (side[a] == side[b])
      throw DomainError("parity classes are not a bipartition");
  return parts;
}

BigInt bpl(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw DomainError("bpl needs even n >= 2");
  BigInt sum = 0;
  for (std::size_t d = 1; d <= n; d += 2)
    if (n % d == 0) sum += euler_phi(static_cast<long>(d)) * power(2, n / d);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(),
              BigInt(static_cast<unsigned long>(n)).get_mpz_t());
  if (r != 0) throw DomainError("bpl sum is not integral");
  return q + 1;
}

namespace {

const Alphabet& binary() {
  static const Alphabet alpha("01");
  return alpha;
}

int hex_digit(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw DomainError(std::string("invalid code digit '") + c + "'");
}

char hex_char(int d) {
  return d <= 9 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

Word canonical(const Word& w) { return min_rotation(w); }

}  // namespace

std::vector<Word> gray_decode(const std::string& code, std::size_t n) {
  if (n < 1 || n > 15) throw DomainError("gray codes support 1 <= n <= 15");
  std::vector<Word> out;
  std::set<Word> seen;
  Word cur(binary(), Syms(n, 0));
  out.push_back(cur);
  seen.insert(cur);
  for (char c : code) {
    int d = hex_digit(c);
    if (static_cast<std::size_t>(d) > n)
      throw DomainError("flip position exceeds word length");
    Word next = canonical(
        cur.with_symbol_at(static_cast<std::size_t>(d), 1 - cur.at(d)));
    if (next == cur)
      throw DomainError("flip does not change the necklace");
    if (!seen.insert(next).second)
      throw DomainError("necklace repeats during decode");
    out.push_back(next);
    cur = next;
  }
  return out;
}

std::string gray_encode(const std::vector<Word>& ordering) {
  if (ordering.empty()) throw DomainError("empty ordering");
  std::size_t n = ordering.front().size();
  if (n < 1 || n > 15) throw DomainError("gray codes support 1 <= n <= 15");
  std::vector<Word> reps;
  for (const Word& w : ordering) {
    if (w.size() != n) throw DomainError("ordering mixes word lengths");
    if (!(w.alphabet() == binary()))
      throw DomainError("gray codes are binary");
    reps.push_back(canonical(w));
  }
  if (reps.front() != Word(binary(), Syms(n, 0)))
    throw DomainError("gray codes start at the all-zero necklace");
  std::string code;
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
    bool hit = false;
    for (std::size_t p = 1; p <= n && !hit; ++p) {
      Word next =
          canonical(reps[i].with_symbol_at(p, 1 - reps[i].at(p)));
      if (next == reps[i + 1]) {
        code += hex_char(static_cast<int>(p));
        hit = true;
      }
    }
    if (!hit)
      throw DomainError("consecutive necklaces admit no one-flip move");
  }
  return code;
}

bool gray_verify(const std::vector<Word>& ordering, std::size_t n) {
  if (n < 1 || n > 15) throw DomainError("gray codes support 1 <= n <= 15");
  std::set<Word> seen;
  std::vector<Word> reps;
  for (const Word& w : ordering) {
    if (w.size() != n) throw DomainError("ordering mixes word lengths");
    if (!(w.alphabet() == binary()))
      throw DomainError("gray codes are binary");
    Word r = canonical(w);
    if (!seen.insert(r).second) return false;  // repeated class
    reps.push_back(std::move(r));
  }
  if (BigInt(static_cast<unsigned long>(reps.size())) !=
      necklace_count(2, n))
    return false;  // not every necklace visited
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
    bool adj = false;
    for (std::size_t p = 1; p <= n && !adj; ++p)
      adj = canonical(reps[i].with_symbol_at(p, 1 - reps[i].at(p))) ==
            reps[i + 1];
    if (!adj) return false;
  }
  return true;
}

GraySearch gray_search(std::size_t n, unsigned long long budget) {
  if (n < 1 || n > 15) throw DomainError("gray codes support 1 <= n <= 15");
  QuotientGraph g = necklace_graph(binary(), n);
  // Gray codes start at 0^n, so pin the path start to that block.
  std::size_t start = 0;
  bool found = false;
  for (std::size_t b = 0; b < g.labels.size() && !found; ++b)
    if (g.labels[b] == std::string(n, '0')) {
      start = b;
      found = true;
    }
  if (!found) throw DomainError("all-zero block missing");
  PathSearch ps = PathSearcher(g, true, budget).run(start);
  GraySearch out;
  out.status = ps.status;
  out.nodes = ps.nodes;
  if (ps.status == PathSearch::Status::kFound) {
    std::vector<Word> ordering;
    for (std::size_t b : ps.path)
      ordering.push_back(Word::parse(g.labels[b], binary()));
    out.code = gray_encode(ordering);
  }
  return out;
}

}  // namespace kabelian
