// Exact k-abelian class cardinality via transition multigraphs and the
// matrix-tree / BEST machinery:
//
//   |[w]_k| = det(Lap(G) with row/col of suff_{k-1}(w) removed)
//             * prod_{x in F_{k-1}(w)} (|w|_x - 1)! / prod_{a} |w|_{xa}!
//
// The multigraph of a factor vector f has the (k-1)-prefixes/suffixes of the
// support as vertices and, for every z with f[z] > 0, an edge
// pref_{k-1}(z) -> suff_{k-1}(z) of multiplicity f[z].

#pragma once

#include "kabelian/word.hpp"

#include <gmpxx.h>

#include <optional>

namespace kabelian {

using BigInt = mpz_class;
using Matrix = std::vector<std::vector<BigInt>>;

class MultiGraph {
 public:
  // Graph of a factor vector (edges carry their k-word labels).
  static MultiGraph from_factor_vector(const FactorVector& f);
  // Bare multigraph from explicit vertex labels and (from, to, mult)
  // triples; parallel edges between a vertex pair are merged.
  static MultiGraph from_edges(
      Alphabet alpha, std::vector<Syms> vertices,
      const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges);

  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<Syms>& vertices() const { return verts_; }  // sorted
  std::optional<std::size_t> vertex_index(const Syms& v) const;

  long long multiplicity(std::size_t a, std::size_t b) const;  // m(a,b)
  long long out_degree(std::size_t v) const;
  long long in_degree(std::size_t v) const;
  long long edge_total() const;
  bool underlying_connected() const;

  // Outgoing letter-labelled edges (letter, target, multiplicity); only
  // present for graphs built from a factor vector.
  struct Arc {
    Sym letter;
    std::size_t target;
    long long mult;
  };
  bool labelled() const { return labelled_; }
  const std::vector<std::vector<Arc>>& out_arcs() const { return arcs_; }

 private:
  Alphabet alpha_;
  std::vector<Syms> verts_;
  std::map<std::pair<std::size_t, std::size_t>, long long> mult_;
  std::vector<std::vector<Arc>> arcs_;
  bool labelled_ = false;
};

MultiGraph build_graph(const FactorVector& f);

// Lemma-style feasibility of an Eulerian path from u to v: connected
// underlying graph and balanced degrees (with the one +1/-1 exception when
// u != v).  For the empty graph this is simply u == v.
bool eulerian_path_feasible(const MultiGraph& g, const Word& u, const Word& v);

// Out-degree Laplacian: L[a][a] = d+(a) - m(a,a), L[a][b] = -m(a,b).
Matrix laplacian(const MultiGraph& g);

// Determinant of M with row and column `remove` deleted, by fraction-free
// Bareiss elimination.  The 0x0 minor has determinant 1.
BigInt minor_determinant(const Matrix& m, std::size_t remove);

// Exact class cardinality |[w]_k|; words shorter than k-1 are singletons.
BigInt class_size(const Word& w, int k);

// Independent oracle: counts the distinct words spelled by Eulerian paths
// from u to v in a factor-vector graph by exhaustive DFS over edge labels.
// GuardError if the graph has more than `max_edges` edges.
BigInt count_eulerian_paths_bruteforce(const MultiGraph& g, const Word& u,
                                       const Word& v,
                                       long long max_edges = 20);

}  // namespace kabelian
