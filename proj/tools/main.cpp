// Command-line front end for the k-abelian words library.
//
// Subcommands: psi, equiv, switch apply|enum|class, class size|enum|graph,
// singleton check|count|list|factorize|types, necklace count|list,
// db export, decomp verify, ng build|ham|longest,
// gray decode|encode|verify|search, selftest.
//
// Exit codes: 0 success, 1 domain error or bad usage, 2 guard/budget
// exceeded, 3 self-test mismatch.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixtures.hpp"
#include "kabelian/cardinality.hpp"
#include "kabelian/necklace.hpp"
#include "kabelian/periodic.hpp"
#include "kabelian/singleton.hpp"
#include "kabelian/switching.hpp"
#include "kabelian/word.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kabelian;

struct Opts {
  int k = 2;
  std::size_t n = 0;
  std::string alphabet;
  std::string format = "plain";
  unsigned long long guard = kDefaultGuard;
  int workers = 1;
  unsigned long long budget = kDefaultBudget;
  std::vector<std::string> words;
  std::string indices;
  std::string code;
};

// Reads words from stdin (one per line) when none were given positionally
// or when the single positional word is "-".
std::vector<std::string> with_stdin(std::vector<std::string> words) {
  if (!words.empty() && !(words.size() == 1 && words[0] == "-")) return words;
  words.clear();
  std::string line;
  while (std::getline(std::cin, line)) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' '))
      line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

Alphabet resolve_alphabet(const Opts& o, const std::vector<std::string>& ws) {
  if (!o.alphabet.empty()) return Alphabet(o.alphabet);
  std::string all;
  for (const std::string& w : ws) all += w;
  Alphabet a = Alphabet::infer(all);
  if (a.empty())
    throw DomainError("cannot infer an alphabet; pass --alphabet");
  return a;
}

Alphabet alphabet_or_binary(const Opts& o) {
  return o.alphabet.empty() ? Alphabet("01") : Alphabet(o.alphabet);
}

unsigned long long checked_pow(std::size_t base, std::size_t exp,
                               unsigned long long guard) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base == 0) return 0;
    if (total > guard / base) return guard + 1;
    total *= base;
  }
  return total;
}

std::string rational_str(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------- psi

int run_psi(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  if (ws.empty()) throw DomainError("psi needs at least one word");
  Alphabet alpha = resolve_alphabet(o, ws);
  for (const std::string& s : ws) {
    Word u = Word::parse(s, alpha);
    FactorVector f = psi(u, o.k);
    bool full = checked_pow(alpha.size(), static_cast<std::size_t>(o.k),
                            o.guard) <= o.guard;
    std::vector<std::pair<std::string, long long>> rows;
    if (full) {
      Syms z(static_cast<std::size_t>(o.k), 0);
      bool done = alpha.empty();
      while (!done) {
        rows.emplace_back(render(alpha, z), f.at(z));
        std::size_t i = z.size();
        while (i > 0 && z[i - 1] + 1u == alpha.size()) z[--i] = 0;
        if (i == 0) break;
        ++z[i - 1];
      }
    } else {
      for (const auto& [z, c] : f.entries())
        rows.emplace_back(render(alpha, z), c);
    }
    if (o.format == "json") {
      json j = json::object();
      for (const auto& [z, c] : rows) j[z] = c;
      std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      std::cout << "factor,count\n";
      for (const auto& [z, c] : rows) std::cout << z << "," << c << "\n";
    } else {
      for (const auto& [z, c] : rows) std::cout << z << " " << c << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- equiv

int run_equiv(const Opts& o) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (o.words.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) {
      std::istringstream is(line);
      std::string a, b;
      if (is >> a >> b) pairs.emplace_back(a, b);
    }
  } else if (o.words.size() == 2) {
    pairs.emplace_back(o.words[0], o.words[1]);
  } else {
    throw DomainError("equiv takes exactly two words (or pairs on stdin)");
  }
  for (const auto& [a, b] : pairs) {
    Alphabet alpha = resolve_alphabet(o, {a, b});
    bool eq = k_abelian_equivalent(Word::parse(a, alpha),
                                   Word::parse(b, alpha), o.k);
    std::cout << (eq ? "true" : "false") << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- switch

Switching parse_indices(const std::string& s) {
  Switching sw;
  std::istringstream is(s);
  char c1, c2, c3;
  if (!(is >> sw.i >> c1 >> sw.j >> c2 >> sw.l >> c3 >> sw.m) || c1 != ',' ||
      c2 != ',' || c3 != ',' || !is.eof())
    throw DomainError("indices must be four comma-separated integers i,j,l,m");
  return sw;
}

int run_switch_apply(const Opts& o) {
  if (o.words.size() != 1) throw DomainError("switch apply takes one word");
  Alphabet alpha = resolve_alphabet(o, o.words);
  Word u = Word::parse(o.words[0], alpha);
  std::cout << apply_switching(u, o.k, parse_indices(o.indices)).str() << "\n";
  return 0;
}

int run_switch_enum(const Opts& o) {
  if (o.words.size() != 1) throw DomainError("switch enum takes one word");
  Alphabet alpha = resolve_alphabet(o, o.words);
  std::vector<Switching> all =
      enumerate_switchings(Word::parse(o.words[0], alpha), o.k);
  if (o.format == "json") {
    json j = json::array();
    for (const Switching& s : all) j.push_back(s.str());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Switching& s : all) std::cout << s.str() << "\n";
  }
  return 0;
}

int run_switch_class(const Opts& o) {
  if (o.words.size() != 1) throw DomainError("switch class takes one word");
  Alphabet alpha = resolve_alphabet(o, o.words);
  std::vector<Word> cls =
      switching_class(Word::parse(o.words[0], alpha), o.k, o.guard);
  if (o.format == "json") {
    json j = json::array();
    for (const Word& w : cls) j.push_back(w.str());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Word& w : cls) std::cout << w.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- class

int run_class_size(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  if (ws.empty()) throw DomainError("class size needs at least one word");
  for (const std::string& s : ws) {
    Alphabet alpha = resolve_alphabet(o, {s});
    std::cout << class_size(Word::parse(s, alpha), o.k).get_str() << "\n";
  }
  return 0;
}

int run_class_enum(const Opts& o) {
  return run_switch_class(o);  // the closure is the class
}

void emit_graph(const MultiGraph& g, const std::string& format,
                bool show_mult) {
  const auto& verts = g.vertices();
  auto name = [&](std::size_t v) { return render(g.alphabet(), verts[v]); };
  if (format == "json") {
    json j;
    j["vertices"] = json::array();
    for (std::size_t v = 0; v < verts.size(); ++v)
      j["vertices"].push_back(name(v));
    j["edges"] = json::array();
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (long long m = g.multiplicity(a, b); m > 0)
          j["edges"].push_back({{"from", name(a)},
                                {"to", name(b)},
                                {"mult", m}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << "digraph G {\n";
    for (std::size_t v = 0; v < verts.size(); ++v)
      std::cout << "  \"" << name(v) << "\";\n";
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (long long m = g.multiplicity(a, b); m > 0) {
          std::cout << "  \"" << name(a) << "\" -> \"" << name(b) << "\"";
          if (show_mult) std::cout << " [label=\"×" << m << "\"]";
          std::cout << ";\n";
        }
    std::cout << "}\n";
  } else {
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (long long m = g.multiplicity(a, b); m > 0)
          std::cout << name(a) << " " << name(b) << " " << m << "\n";
  }
}

int run_class_graph(const Opts& o) {
  if (o.words.size() != 1) throw DomainError("class graph takes one word");
  Alphabet alpha = resolve_alphabet(o, o.words);
  MultiGraph g = build_graph(psi(Word::parse(o.words[0], alpha), o.k));
  emit_graph(g, o.format, true);
  return 0;
}

// ---------------------------------------------------------------- singleton

int run_singleton_check(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  if (ws.empty()) throw DomainError("singleton check needs a word");
  for (const std::string& s : ws) {
    Alphabet alpha = resolve_alphabet(o, {s});
    std::cout << (is_singleton(Word::parse(s, alpha), o.k) ? "true" : "false")
              << "\n";
  }
  return 0;
}

int run_singleton_count(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  std::cout << singleton_count(o.n, o.k, alpha, o.guard, o.workers) << "\n";
  return 0;
}

int run_singleton_list(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  for (const Word& w : singleton_list(o.n, o.k, alpha, o.guard, o.workers))
    std::cout << w.str() << "\n";
  return 0;
}

json factorization_json(const SingletonFactorization& f) {
  json j;
  j["t0"] = f.t0.str();
  j["blocks"] = json::array();
  for (const Block& b : f.blocks)
    j["blocks"].push_back(
        {{"root", b.root.str()}, {"exponent", rational_str(b.exponent)}});
  j["joints"] = json::array();
  for (std::size_t i = 0; i < f.joints.size(); ++i)
    j["joints"].push_back(
        {{"t", f.joints[i].str()}, {"sign", f.signs[i]}});
  j["ts"] = f.ts.str();
  return j;
}

int run_singleton_factorize(const Opts& o) {
  if (o.words.size() != 1)
    throw DomainError("singleton factorize takes one word");
  Alphabet alpha = resolve_alphabet(o, o.words);
  SingletonFactorization f =
      factorize_singleton(Word::parse(o.words[0], alpha), o.k);
  if (o.format == "json")
    std::cout << factorization_json(f).dump(2) << "\n";
  else
    std::cout << f.str() << "\n";
  return 0;
}

int run_singleton_types(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  std::vector<SingletonType> types =
      enumerate_types(o.n, o.k, alpha, o.guard, o.workers);
  if (o.format == "json") {
    json j = json::array();
    for (const SingletonType& t : types) j.push_back(t.str());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const SingletonType& t : types) std::cout << t.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- necklace

int run_necklace_count(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  std::cout << necklace_count(alpha.size(), o.n).get_str() << "\n";
  return 0;
}

int run_necklace_list(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  if (necklace_count(alpha.size(), o.n) >
      BigInt(static_cast<unsigned long>(o.guard)))
    throw GuardError("necklace list exceeds the guard");
  for (const Word& w : enumerate_necklaces(alpha, o.n))
    std::cout << w.str() << "\n";
  return 0;
}

// ---------------------------------------------------------------- db / ng

int run_db_export(const Opts& o) {
  Alphabet alpha = alphabet_or_binary(o);
  if (o.n < 1) throw DomainError("db export needs --n >= 1");
  if (checked_pow(alpha.size(), o.n + 1, o.guard) > o.guard)
    throw GuardError("de Bruijn graph exceeds the guard");
  std::vector<Syms> verts;
  Syms v(o.n, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t pos) {
    if (pos == o.n) {
      verts.push_back(v);
      return;
    }
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      v[pos] = static_cast<Sym>(a);
      gen(pos + 1);
    }
  };
  gen(0);
  auto name = [&](const Syms& s) { return render(alpha, s); };
  auto edge_word = [&](const Syms& s, std::size_t a) {
    Syms w = s;
    w.push_back(static_cast<Sym>(a));
    return render(alpha, w);
  };
  auto shift = [&](const Syms& s, std::size_t a) {
    Syms w(s.begin() + 1, s.end());
    w.push_back(static_cast<Sym>(a));
    return w;
  };
  if (o.format == "json") {
    json j;
    j["vertices"] = json::array();
    for (const Syms& s : verts) j["vertices"].push_back(name(s));
    j["edges"] = json::array();
    for (const Syms& s : verts)
      for (std::size_t a = 0; a < alpha.size(); ++a)
        j["edges"].push_back({{"from", name(s)},
                              {"to", name(shift(s, a))},
                              {"mult", 1}});
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "plain") {
    for (const Syms& s : verts)
      for (std::size_t a = 0; a < alpha.size(); ++a)
        std::cout << name(s) << " " << name(shift(s, a)) << "\n";
  } else {
    std::cout << "digraph G {\n";
    for (const Syms& s : verts) std::cout << "  \"" << name(s) << "\";\n";
    for (const Syms& s : verts)
      for (std::size_t a = 0; a < alpha.size(); ++a)
        std::cout << "  \"" << name(s) << "\" -> \"" << name(shift(s, a))
                  << "\" [label=\"" << edge_word(s, a) << "\"];\n";
    std::cout << "}\n";
  }
  return 0;
}

void emit_quotient(const QuotientGraph& g, const std::string& format) {
  if (format == "json") {
    json j;
    j["vertices"] = json::array();
    for (const std::string& l : g.labels) j["vertices"].push_back(l);
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges)
      j["edges"].push_back({{"from", g.labels[a]}, {"to", g.labels[b]}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "plain") {
    for (const auto& [a, b] : g.edges)
      std::cout << g.labels[a] << " " << g.labels[b] << "\n";
  } else {
    const char* arrow = g.undirected ? " -- " : " -> ";
    std::cout << (g.undirected ? "graph" : "digraph") << " G {\n";
    for (const std::string& l : g.labels) std::cout << "  \"" << l << "\";\n";
    for (const auto& [a, b] : g.edges)
      std::cout << "  \"" << g.labels[a] << "\"" << arrow << "\""
                << g.labels[b] << "\";\n";
    std::cout << "}\n";
  }
}

int run_decomp_verify(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  if (ws.empty()) throw DomainError("decomp verify needs cycle labels");
  Alphabet alpha = o.alphabet.empty()
                       ? resolve_alphabet(o, ws)
                       : Alphabet(o.alphabet);
  std::vector<Word> labels;
  for (const std::string& s : ws) labels.push_back(Word::parse(s, alpha));
  Decomposition d = validate_decomposition(labels, o.n);
  if (o.format == "json") {
    json j;
    j["cycles"] = json::array();
    for (const Cycle& c : d.cycles) j["cycles"].push_back(c.label.str());
    j["leftover"] = json::array();
    for (const Syms& v : d.leftover)
      j["leftover"].push_back(render(d.alpha, v));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cycles " << d.cycles.size() << "\n";
    std::cout << "leftover " << d.leftover.size() << "\n";
    std::cout << "maximal " << (d.maximal ? "true" : "false") << "\n";
  }
  return 0;
}

int run_ng_build(const Opts& o) {
  QuotientGraph g = necklace_graph(alphabet_or_binary(o), o.n);
  emit_quotient(g, o.format);
  return 0;
}

int emit_path_result(const QuotientGraph& g, const PathSearch& r, bool ham,
                     const std::string& format) {
  if (format == "json") {
    json out;
    out["status"] = r.status == PathSearch::Status::kFound
                        ? (ham ? "found" : "proven")
                        : r.status == PathSearch::Status::kExhausted ? "none"
                                                                     : "budget";
    out["nodes"] = r.nodes;
    json path = json::array();
    if (r.status != PathSearch::Status::kExhausted)
      for (std::size_t b : r.path) path.push_back(g.labels[b]);
    out["path"] = std::move(path);
    std::cout << out.dump(2) << "\n";
    return r.status == PathSearch::Status::kBudget ? 2 : 0;
  }
  switch (r.status) {
    case PathSearch::Status::kFound:
      std::cout << (ham ? "found" : "proven") << "\n";
      break;
    case PathSearch::Status::kExhausted:
      std::cout << "none\n";
      break;
    case PathSearch::Status::kBudget:
      std::cout << "budget\n";
      break;
  }
  if (!ham) std::cout << "vertices " << r.path.size() << "\n";
  if (r.status != PathSearch::Status::kExhausted)
    for (std::size_t b : r.path) std::cout << g.labels[b] << "\n";
  return r.status == PathSearch::Status::kBudget ? 2 : 0;
}

int run_ng_ham(const Opts& o) {
  QuotientGraph g = necklace_graph(alphabet_or_binary(o), o.n);
  return emit_path_result(g, hamiltonian_path(g, o.budget), true, o.format);
}

int run_ng_longest(const Opts& o) {
  QuotientGraph g = necklace_graph(alphabet_or_binary(o), o.n);
  return emit_path_result(g, longest_path(g, o.budget), false, o.format);
}

// ---------------------------------------------------------------- gray

int run_gray_decode(const Opts& o) {
  for (const Word& w : gray_decode(o.code, o.n)) std::cout << w.str() << "\n";
  return 0;
}

int run_gray_encode(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  std::vector<Word> ordering;
  for (const std::string& s : ws)
    ordering.push_back(Word::parse(s, Alphabet("01")));
  std::cout << gray_encode(ordering) << "\n";
  return 0;
}

int run_gray_verify(const Opts& o) {
  std::vector<std::string> ws = with_stdin(o.words);
  std::vector<Word> ordering;
  for (const std::string& s : ws)
    ordering.push_back(Word::parse(s, Alphabet("01")));
  std::cout << (gray_verify(ordering, o.n) ? "true" : "false") << "\n";
  return 0;
}

int run_gray_search(const Opts& o) {
  GraySearch r = gray_search(o.n, o.budget);
  switch (r.status) {
    case PathSearch::Status::kFound:
      std::cout << r.code << "\n";
      return 0;
    case PathSearch::Status::kExhausted:
      std::cout << "none\n";
      return 0;
    case PathSearch::Status::kBudget:
      std::cout << "budget\n";
      return 2;
  }
  return 0;
}

// ---------------------------------------------------------------- selftest

int run_selftest(const Opts&) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok " : "MISMATCH ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    bool ok = true;
    for (std::size_t l = 0; l < fixtures::kNecklaceCounts2.size(); ++l)
      ok = ok && necklace_count(2, l) ==
                     BigInt(static_cast<long>(fixtures::kNecklaceCounts2[l]));
    check("necklace-counts", ok);
  }

  {
    Word w = Word::parse("ababaaaa");
    bool ok = class_size(w, 2) == 10;
    MultiGraph g = build_graph(psi(w, 2));
    Matrix lap = laplacian(g);
    ok = ok && lap.size() == 2 && lap[0][0] == 2 && lap[0][1] == -2 &&
         lap[1][0] == -2 && lap[1][1] == 2;
    ok = ok && minor_determinant(lap, 0) == 2;
    ok = ok && class_size(Word::parse("aababb"), 2) == 4;
    check("class-size", ok);
  }

  {
    Word u = Word::parse("aabababaaabab");
    Word v = apply_switching(u, 4, Switching{2, 3, 4, 11});
    bool ok = v.str() == "aababaaababab" && k_abelian_equivalent(u, v, 4);
    std::vector<Word> cls = switching_class(Word::parse("aababb"), 2);
    std::vector<std::string> got;
    for (const Word& w : cls) got.push_back(w.str());
    ok = ok && got == std::vector<std::string>{"aababb", "aabbab", "abaabb",
                                               "abbaab"};
    ok = ok && switching_class(Word::parse("ababab"), 2).size() == 1;
    ok = ok && switching_class(Word::parse("ababaaaa"), 2).size() == 10;
    check("switching", ok);
  }

  {
    Alphabet ab("ab");
    bool ok = k_abelian_equivalent(Word::parse("aababb", ab),
                                   Word::parse("abbaab", ab), 2);
    ok = ok && !k_abelian_equivalent(Word::parse("aababb", ab),
                                     Word::parse("ababab", ab), 2);
    check("equivalence", ok);
  }

  {
    bool ok = true;
    Alphabet bin("01");
    for (std::size_t n = 4; n <= 14 && ok; ++n) {
      std::vector<Word> got = singleton_list(n, 2, bin);
      std::vector<std::string> gs;
      for (const Word& w : got) gs.push_back(w.str());
      ok = gs == fixtures::binary_k2_singleton_patterns(n) &&
           static_cast<long long>(gs.size()) == 2 * static_cast<long long>(n) + 4;
    }
    check("singleton-counts", ok);
  }

  {
    bool ok = true;
    for (const auto& fx : fixtures::kFactorizations) {
      Word u = Word::parse(fx.word, Alphabet("01"));
      ok = ok && is_singleton(u, fx.k);
      SingletonFactorization f = factorize_singleton(u, fx.k);
      ok = ok && f.str() == fx.rendered && expand_factorization(f) == u;
    }
    check("factorizations", ok);
  }

  {
    bool ok = true;
    std::vector<Word> dec5 = gray_decode(fixtures::kGrayCode5, 5);
    std::vector<std::string> got;
    for (const Word& w : dec5) got.push_back(w.str());
    ok = ok && got == fixtures::kGrayOrdering5;
    for (auto& [code, n] :
         std::vector<std::pair<std::string, std::size_t>>{
             {fixtures::kGrayCode5, 5},
             {fixtures::kGrayCode7, 7},
             {fixtures::kGrayCode9, 9}}) {
      std::vector<Word> dec = gray_decode(code, n);
      ok = ok && gray_verify(dec, n) && gray_encode(dec) == code;
    }
    check("gray-codes", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < fixtures::kBplValues.size(); ++i)
      ok = ok && bpl(2 * (i + 1)) ==
                     BigInt(static_cast<long>(fixtures::kBplValues[i]));
    ok = ok && gray_decode(fixtures::kEvenCode6, 6).size() == 13;
    ok = ok && gray_decode(fixtures::kEvenCode8, 8).size() == 33;
    check("even-paths", ok);
  }

  {
    auto edges_of = [](std::size_t n) {
      QuotientGraph g = necklace_graph(Alphabet("01"), n);
      std::vector<std::pair<std::string, std::string>> es;
      for (const auto& [a, b] : g.edges)
        es.emplace_back(g.labels[a], g.labels[b]);
      std::sort(es.begin(), es.end());
      return es;
    };
    auto sorted = [](std::vector<std::pair<std::string, std::string>> es) {
      std::sort(es.begin(), es.end());
      return es;
    };
    bool ok = edges_of(4) == sorted(fixtures::kNg4Edges) &&
              edges_of(5) == sorted(fixtures::kNg5Edges);
    QuotientGraph g4 = necklace_graph(Alphabet("01"), 4);
    PathSearch h4 = hamiltonian_path(g4);
    PathSearch l4 = longest_path(g4);
    ok = ok && h4.status == PathSearch::Status::kExhausted &&
         l4.status == PathSearch::Status::kFound && l4.path.size() == 5;
    QuotientGraph g5 = necklace_graph(Alphabet("01"), 5);
    ok = ok && hamiltonian_path(g5).status == PathSearch::Status::kFound;
    check("necklace-graphs", ok);
  }

  {
    auto validate = [&](const std::vector<std::string>& cyc, std::size_t n,
                        std::size_t want, Decomposition& out) {
      std::vector<Word> labels;
      for (const std::string& s : cyc)
        labels.push_back(Word::parse(s, Alphabet("01")));
      out = validate_decomposition(labels, n);
      return out.maximal && out.leftover.empty() && out.cycles.size() == want;
    };
    auto order_is_path = [](const QuotientGraph& q) {
      for (std::size_t i = 0; i + 1 < q.labels.size(); ++i)
        if (!q.adjacent(i, i + 1) && !q.adjacent(i + 1, i)) return false;
      return true;
    };
    Decomposition d6;
    Decomposition d8;
    bool ok = validate(fixtures::kDb6Cycles, 6, 14, d6) &&
              validate(fixtures::kDb8Cycles, 8, 36, d8);
    // The listed order of the 36-cycle decomposition traces a Hamiltonian
    // path through its quotient.  The 14-cycle decomposition is maximal but
    // its quotient admits no Hamiltonian path at all (exhaustive search),
    // so there we pin the proven absence instead of an ordering.
    ok = ok && order_is_path(quotient(d8));
    ok = ok && hamiltonian_path(quotient(d6)).status ==
                   PathSearch::Status::kExhausted;
    check("decompositions", ok);
  }

  return failures > 0 ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-abelian equivalence toolkit"};
  app.require_subcommand(1);
  Opts o;
  std::function<int(const Opts&)> action;

  auto add_common = [&](CLI::App* cmd, bool words, bool k = true) {
    if (k) cmd->add_option("-k,--k", o.k, "factor length bound k");
    cmd->add_option("--alphabet", o.alphabet, "alphabet symbols, in order");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "dot"}));
    cmd->add_option("--guard", o.guard, "enumeration size guard");
    cmd->add_option("--workers", o.workers, "worker threads for scans");
    if (words) cmd->add_option("words", o.words, "input words");
    return cmd;
  };
  auto set = [&](CLI::App* cmd, int (*fn)(const Opts&)) {
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  set(add_common(app.add_subcommand("psi", "factor-count vector"), true),
      run_psi);
  set(add_common(app.add_subcommand("equiv", "k-abelian equivalence test"),
                 true),
      run_equiv);

  CLI::App* sw = app.add_subcommand("switch", "k-switching operations");
  sw->require_subcommand(1);
  CLI::App* swa = add_common(sw->add_subcommand("apply", "apply a switching"),
                             true);
  swa->add_option("--indices", o.indices, "switching tuple i,j,l,m")
      ->required();
  set(swa, run_switch_apply);
  set(add_common(sw->add_subcommand("enum", "list valid switchings"), true),
      run_switch_enum);
  set(add_common(sw->add_subcommand("class", "closure under switchings"),
                 true),
      run_switch_class);

  CLI::App* cls = app.add_subcommand("class", "equivalence class queries");
  cls->require_subcommand(1);
  set(add_common(cls->add_subcommand("size", "exact class cardinality"),
                 true),
      run_class_size);
  set(add_common(cls->add_subcommand("enum", "list class members"), true),
      run_class_enum);
  set(add_common(cls->add_subcommand("graph", "export the factor multigraph"),
                 true),
      run_class_graph);

  CLI::App* sg = app.add_subcommand("singleton", "singleton classes");
  sg->require_subcommand(1);
  set(add_common(sg->add_subcommand("check", "singleton predicate"), true),
      run_singleton_check);
  CLI::App* sgc = add_common(sg->add_subcommand("count", "count singletons"),
                             false);
  sgc->add_option("-n,--n", o.n, "word length")->required();
  set(sgc, run_singleton_count);
  CLI::App* sgl = add_common(sg->add_subcommand("list", "list singletons"),
                             false);
  sgl->add_option("-n,--n", o.n, "word length")->required();
  set(sgl, run_singleton_list);
  set(add_common(sg->add_subcommand("factorize", "structural factorization"),
                 true),
      run_singleton_factorize);
  CLI::App* sgt = add_common(sg->add_subcommand("types", "distinct types"),
                             false);
  sgt->add_option("-n,--n", o.n, "word length")->required();
  set(sgt, run_singleton_types);

  CLI::App* nk = app.add_subcommand("necklace", "necklace enumeration");
  nk->require_subcommand(1);
  CLI::App* nkc = add_common(nk->add_subcommand("count", "necklace count"),
                             false, false);
  nkc->add_option("-n,--n", o.n, "necklace length")->required();
  set(nkc, run_necklace_count);
  CLI::App* nkl = add_common(nk->add_subcommand("list", "least representatives"),
                             false, false);
  nkl->add_option("-n,--n", o.n, "necklace length")->required();
  set(nkl, run_necklace_list);

  CLI::App* db = app.add_subcommand("db", "de Bruijn graphs");
  db->require_subcommand(1);
  CLI::App* dbe = add_common(db->add_subcommand("export", "emit dB(n)"),
                             false, false);
  dbe->add_option("-n,--n", o.n, "vertex word length")->required();
  set(dbe, run_db_export);

  CLI::App* dc = app.add_subcommand("decomp", "cycle decompositions");
  dc->require_subcommand(1);
  CLI::App* dcv = add_common(dc->add_subcommand("verify",
                                                "validate a decomposition"),
                             true, false);
  dcv->add_option("-n,--n", o.n, "vertex word length")->required();
  set(dcv, run_decomp_verify);

  CLI::App* ng = app.add_subcommand("ng", "necklace graphs");
  ng->require_subcommand(1);
  auto add_ng = [&](const char* name, const char* help,
                    int (*fn)(const Opts&)) {
    CLI::App* c = add_common(ng->add_subcommand(name, help), false, false);
    c->add_option("-n,--n", o.n, "necklace length")->required();
    c->add_option("--budget", o.budget, "search node budget");
    set(c, fn);
  };
  add_ng("build", "emit NG(n)", run_ng_build);
  add_ng("ham", "search a Hamiltonian path", run_ng_ham);
  add_ng("longest", "search a longest path", run_ng_longest);

  CLI::App* gr = app.add_subcommand("gray", "Gray codes for necklaces");
  gr->require_subcommand(1);
  CLI::App* grd = gr->add_subcommand("decode", "code string to ordering");
  grd->add_option("-n,--n", o.n, "necklace length")->required();
  grd->add_option("code", o.code, "hex code string")->required();
  set(grd, run_gray_decode);
  CLI::App* gre = gr->add_subcommand("encode", "ordering to code string");
  gre->add_option("words", o.words, "necklace ordering");
  set(gre, run_gray_encode);
  CLI::App* grv = gr->add_subcommand("verify", "check a full Gray code");
  grv->add_option("-n,--n", o.n, "necklace length")->required();
  grv->add_option("words", o.words, "necklace ordering");
  set(grv, run_gray_verify);
  CLI::App* grs = gr->add_subcommand("search", "find a Gray code");
  grs->add_option("-n,--n", o.n, "necklace length")->required();
  grs->add_option("--budget", o.budget, "search node budget");
  set(grs, run_gray_search);

  set(app.add_subcommand("selftest", "replay built-in reference fixtures"),
      run_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    return action ? action(o) : 1;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
