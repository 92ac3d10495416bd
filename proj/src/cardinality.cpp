#include "kabelian/cardinality.hpp"

#include <algorithm>
#include <set>

namespace kabelian {

MultiGraph MultiGraph::from_factor_vector(const FactorVector& f) {
  MultiGraph g;
  g.alpha_ = f.alphabet();
  g.labelled_ = true;
  std::size_t k = static_cast<std::size_t>(f.k());
  std::set<Syms> verts;
  for (const auto& [z, c] : f.entries()) {
    verts.insert(Syms(z.begin(), z.end() - 1));
    verts.insert(Syms(z.begin() + 1, z.end()));
  }
  g.verts_.assign(verts.begin(), verts.end());
  g.arcs_.resize(g.verts_.size());
  for (const auto& [z, c] : f.entries()) {
    Syms pre(z.begin(), z.end() - 1);
    Syms suf(z.begin() + 1, z.end());
    std::size_t a = *g.vertex_index(pre);
    std::size_t b = *g.vertex_index(suf);
    g.mult_[{a, b}] += c;
    g.arcs_[a].push_back({z[k - 1], b, c});
  }
  for (auto& arcs : g.arcs_)
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return x.letter < y.letter; });
  return g;
}

MultiGraph MultiGraph::from_edges(
    Alphabet alpha, std::vector<Syms> vertices,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges) {
  MultiGraph g;
  g.alpha_ = std::move(alpha);
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw DomainError("duplicate vertex labels");
  g.verts_ = std::move(vertices);
  g.arcs_.resize(g.verts_.size());
  for (const auto& [a, b, c] : edges) {
    if (a >= g.verts_.size() || b >= g.verts_.size())
      throw DomainError("edge endpoint out of range");
    if (c < 0) throw DomainError("negative edge multiplicity");
    if (c > 0) g.mult_[{a, b}] += c;
  }
  return g;
}

MultiGraph build_graph(const FactorVector& f) {
  return MultiGraph::from_factor_vector(f);
}

std::optional<std::size_t> MultiGraph::vertex_index(const Syms& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - verts_.begin());
}

long long MultiGraph::multiplicity(std::size_t a, std::size_t b) const {
  auto it = mult_.find({a, b});
  return it == mult_.end() ? 0 : it->second;
}

long long MultiGraph::out_degree(std::size_t v) const {
  long long d = 0;
  for (const auto& [e, c] : mult_)
    if (e.first == v) d += c;
  return d;
}

long long MultiGraph::in_degree(std::size_t v) const {
  long long d = 0;
  for (const auto& [e, c] : mult_)
    if (e.second == v) d += c;
  return d;
}

long long MultiGraph::edge_total() const {
  long long t = 0;
  for (const auto& [e, c] : mult_) t += c;
  return t;
}

bool MultiGraph::underlying_connected() const {
  if (verts_.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(verts_.size());
  for (const auto& [e, c] : mult_) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<bool> seen(verts_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t cnt = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == verts_.size();
}

bool eulerian_path_feasible(const MultiGraph& g, const Word& u, const Word& v) {
  if (g.vertices().empty()) return u == v;
  auto iu = g.vertex_index(u.syms());
  auto iv = g.vertex_index(v.syms());
  if (!iu || !iv) throw DomainError("endpoint is not a vertex of the graph");
  if (!g.underlying_connected()) return false;
  for (std::size_t s = 0; s < g.vertices().size(); ++s) {
    long long din = g.in_degree(s), dout = g.out_degree(s);
    long long want = 0;
    if (*iu != *iv) {
      if (s == *iu) want = -1;      // d-(u) = d+(u) - 1
      else if (s == *iv) want = 1;  // d-(v) = d+(v) + 1
    }
    if (din - dout != want) return false;
  }
  return true;
}

Matrix laplacian(const MultiGraph& g) {
  std::size_t n = g.vertices().size();
  Matrix lap(n, std::vector<BigInt>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    lap[a][a] = static_cast<long>(g.out_degree(a) - g.multiplicity(a, a));
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) lap[a][b] = -static_cast<long>(g.multiplicity(a, b));
  }
  return lap;
}

BigInt minor_determinant(const Matrix& m, std::size_t remove) {
  std::size_t n = m.size();
  if (remove >= n) throw DomainError("removed index out of range");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("matrix is not square");
  if (n == 1) return 1;  // 0x0 minor

  // Copy without row/column `remove`.
  std::size_t d = n - 1;
  Matrix a(d, std::vector<BigInt>(d));
  for (std::size_t i = 0, ai = 0; i < n; ++i) {
    if (i == remove) continue;
    for (std::size_t j = 0, aj = 0; j < n; ++j) {
      if (j == remove) continue;
      a[ai][aj++] = m[i][j];
    }
    ++ai;
  }

  // Bareiss fraction-free elimination with row pivoting.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < d; ++c) {
    if (a[c][c] == 0) {
      std::size_t p = c + 1;
      while (p < d && a[p][c] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[c], a[p]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < d; ++i)
      for (std::size_t j = c + 1; j < d; ++j) {
        BigInt t = a[i][j] * a[c][c] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[c][c];
  }
  return sign > 0 ? a[d - 1][d - 1] : -a[d - 1][d - 1];
}

namespace {

BigInt factorial(long long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void euler_dfs(const std::vector<std::vector<MultiGraph::Arc>>& arcs,
               std::vector<std::vector<long long>>& left, std::size_t at,
               std::size_t goal, long long remaining, BigInt& acc) {
  // Branching on the distinct letter-labelled arcs from `at` counts each
  // spelled word exactly once, regardless of parallel multiplicities.
  if (remaining == 0) {
    if (at == goal) acc += 1;
    return;
  }
  for (std::size_t e = 0; e < arcs[at].size(); ++e) {
    if (left[at][e] == 0) continue;
    --left[at][e];
    euler_dfs(arcs, left, arcs[at][e].target, goal, remaining - 1, acc);
    ++left[at][e];
  }
}

}  // namespace

BigInt class_size(const Word& w, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::size_t e = static_cast<std::size_t>(k) - 1;
  if (w.size() < e) return 1;  // below formula range: the class is {w}

  FactorVector f = psi(w, k);
  std::vector<Syms> verts = factor_set(w, e);
  std::size_t n = verts.size();
  auto index_of = [&](const Syms& x) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };

  // Laplacian over F_{k-1}(w) (which equals the support graph's vertex set
  // whenever |w| >= k; for |w| = k-1 it is the single isolated vertex w).
  Matrix lap(n, std::vector<BigInt>(n, 0));
  for (const auto& [z, c] : f.entries()) {
    std::size_t a = index_of(Syms(z.begin(), z.end() - 1));
    std::size_t b = index_of(Syms(z.begin() + 1, z.end()));
    if (a != b) {  // self-loops cancel: diagonal is d+(a) - m(a,a)
      lap[a][a] += static_cast<long>(c);
      lap[a][b] -= static_cast<long>(c);
    }
  }

  Syms suf(w.syms().end() - e, w.syms().end());
  BigInt det = minor_determinant(lap, index_of(suf));
  if (det == 0) return 0;  // cannot happen for a genuine Psi_k(w)

  BigInt num = det, den = 1;
  for (const Syms& x : verts) {
    long long cx = factor_count(w, Word(w.alphabet(), x));
    num *= factorial(cx - 1);
    for (Sym a = 0; a < w.alphabet().size(); ++a) {
      Syms xa = x;
      xa.push_back(a);
      long long cxa = f.at(xa);
      if (cxa > 1) den *= factorial(cxa);
    }
  }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw DomainError("class size product is not integral");
  return q;
}

BigInt count_eulerian_paths_bruteforce(const MultiGraph& g, const Word& u,
                                       const Word& v, long long max_edges) {
  if (!g.labelled())
    throw DomainError("brute-force count needs a factor-vector graph");
  if (g.edge_total() > max_edges)
    throw GuardError("graph too large for brute-force Eulerian count");
  if (g.vertices().empty()) return u == v ? 1 : 0;
  auto iu = g.vertex_index(u.syms());
  auto iv = g.vertex_index(v.syms());
  if (!iu || !iv) throw DomainError("endpoint is not a vertex of the graph");

  std::vector<std::vector<long long>> left(g.vertices().size());
  for (std::size_t a = 0; a < g.vertices().size(); ++a)
    for (const auto& arc : g.out_arcs()[a]) left[a].push_back(arc.mult);
  BigInt acc = 0;
  euler_dfs(g.out_arcs(), left, *iu, *iv, g.edge_total(), acc);
  return acc;
}

}  // namespace kabelian
