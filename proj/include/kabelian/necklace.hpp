// Necklaces, de Bruijn graphs, cycle decompositions and their quotients,
// Hamiltonian / longest path search, and Gray codes for binary necklaces.
//
// dB(n) has vertex set Sigma^n and edges ax -> xb.  A set of vertex-disjoint
// cycles is a semi-decomposition; it is maximal when it reaches the
// Mykkeltveit bound N_m(n), in which case it covers every vertex.  The
// quotient contracts each cycle (plus each leftover vertex) to a block.
// The necklace graph NG(n) is the quotient by the rotation-class cycles; a
// Gray code for necklaces is a Hamiltonian path in NG(n), encoded by the
// 1-based flip positions (hex digits) applied to least representatives,
// starting from 0^n.

#pragma once

#include "kabelian/cardinality.hpp"
#include "kabelian/periodic.hpp"
#include "kabelian/word.hpp"

#include <optional>
#include <set>

namespace kabelian {

// Number of necklaces (rotation classes) of length l over m symbols:
// (1/l) sum_{d|l} phi(d) m^{l/d}, with N_m(0) = 1.
BigInt necklace_count(std::size_t m, std::size_t l);

// Lexicographically least representatives, ascending (FKM order).
std::vector<Word> enumerate_necklaces(const Alphabet& alpha, std::size_t l);

// The cycle of dB(n) traced by a primitive, (n+1)-full word w: its |w|
// circular n-windows in order.
struct Cycle {
  Word label;
  std::vector<Syms> vertices;
};
Cycle cycle_of_word(const Word& w, std::size_t n);

struct Decomposition {
  std::size_t n = 0;
  Alphabet alpha;
  std::vector<Cycle> cycles;
  std::vector<Syms> leftover;  // V_otimes, ascending
  bool maximal = false;
};

// Checks labels for validity and pairwise vertex-disjointness; flags
// maximality (cycle count = N_m(n), which forces empty leftover).
Decomposition validate_decomposition(const std::vector<Word>& labels,
                                     std::size_t n);

struct QuotientGraph {
  Alphabet alpha;
  std::size_t n = 0;
  bool undirected = false;
  std::vector<std::string> labels;        // cycle labels, then leftover vertices
  std::vector<std::vector<Syms>> blocks;  // vertex sets
  std::set<std::pair<std::size_t, std::size_t>> edges;  // directed, a != b

  bool adjacent(std::size_t a, std::size_t b) const {
    return edges.count({a, b}) ||
           (undirected && edges.count({b, a}));
  }
};

QuotientGraph quotient(const Decomposition& d);

// Quotient of dB(n) by the rotation-class cycles, blocks labelled by the
// least representatives in ascending order; undirected.
QuotientGraph necklace_graph(const Alphabet& alpha, std::size_t n);

// Backtracking path search over a quotient graph.
struct PathSearch {
  enum class Status {
    kFound,      // hamiltonian: a full path; longest: optimum proven
    kExhausted,  // hamiltonian: proven absent (full search exhausted)
    kBudget,     // node budget ran out; `path` is the best found so far
  };
  Status status = Status::kExhausted;
  std::vector<std::size_t> path;
  unsigned long long nodes = 0;
};

inline constexpr unsigned long long kDefaultBudget = 10'000'000;

PathSearch hamiltonian_path(const QuotientGraph& g,
                            unsigned long long budget = kDefaultBudget);
PathSearch longest_path(const QuotientGraph& g,
                        unsigned long long budget = kDefaultBudget);

// Parity bipartition (even / odd number of ones in the block label) of a
// binary necklace graph; DomainError if some edge stays inside a part.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bipartition(
    const QuotientGraph& g);

// 1 + (1/n) sum_{d|n, d odd} phi(d) 2^{n/d}: the bipartite-part bound on
// path length in NG(n), even n.
BigInt bpl(std::size_t n);

// Gray codes (binary, n <= 15).  Codes are strings of hex digits 1..f; each
// digit flips that position of the current least representative and steps
// to the necklace of the result, starting from 0^n.
std::vector<Word> gray_decode(const std::string& code, std::size_t n);
std::string gray_encode(const std::vector<Word>& ordering);
bool gray_verify(const std::vector<Word>& ordering, std::size_t n);

struct GraySearch {
  PathSearch::Status status;
  std::string code;
  unsigned long long nodes = 0;
};
GraySearch gray_search(std::size_t n,
                       unsigned long long budget = kDefaultBudget);

}  // namespace kabelian
