#include "kabelian/word.hpp"

#include <algorithm>

namespace kabelian {

Alphabet::Alphabet(std::string_view symbols) : syms_(symbols) {
  std::string sorted(symbols);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("alphabet symbols must be distinct");
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string sorted(text);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Alphabet(sorted);
}

Sym Alphabet::index(char c) const {
  auto pos = syms_.find(c);
  if (pos == std::string::npos)
    throw DomainError(std::string("symbol '") + c + "' not in alphabet '" +
                      syms_ + "'");
  return static_cast<Sym>(pos);
}

Word::Word(Alphabet alpha, Syms syms) : alpha_(std::move(alpha)), s_(std::move(syms)) {
  for (Sym v : s_)
    if (v >= alpha_.size()) throw DomainError("symbol index out of range");
}

Word Word::parse(std::string_view text, const Alphabet& alpha) {
  Syms s;
  s.reserve(text.size());
  for (char c : text) s.push_back(alpha.index(c));
  return Word(alpha, std::move(s));
}

Word Word::parse(std::string_view text) {
  return parse(text, Alphabet::infer(text));
}

Sym Word::at(std::size_t i) const {
  if (i < 1 || i > s_.size()) throw DomainError("position out of range");
  return s_[i - 1];
}

std::string Word::str() const { return render(alpha_, s_); }

Word Word::slice(std::size_t i, std::size_t j) const {
  if (i < 1) throw DomainError("slice start must be >= 1");
  if (j > s_.size() + 1) throw DomainError("slice end out of range");
  if (i >= j) return Word(alpha_, {});
  return Word(alpha_, Syms(s_.begin() + (i - 1), s_.begin() + (j - 1)));
}

Word Word::slice_from(std::size_t i) const { return slice(i, s_.size() + 1); }

Word Word::prefix(std::size_t len) const {
  if (len > s_.size()) throw DomainError("prefix longer than word");
  return slice(1, len + 1);
}

Word Word::suffix(std::size_t len) const {
  if (len > s_.size()) throw DomainError("suffix longer than word");
  return slice(s_.size() - len + 1, s_.size() + 1);
}

Word Word::concat(const Word& other) const {
  if (!other.empty() && !empty() && !(alpha_ == other.alpha_))
    throw DomainError("cannot concatenate words over different alphabets");
  Syms s = s_;
  s.insert(s.end(), other.s_.begin(), other.s_.end());
  return Word(empty() ? other.alpha_ : alpha_, std::move(s));
}

Word Word::rotated(std::size_t r) const {
  if (empty()) return *this;
  r %= s_.size();
  Syms s(s_.begin() + r, s_.end());
  s.insert(s.end(), s_.begin(), s_.begin() + r);
  return Word(alpha_, std::move(s));
}

Word Word::with_symbol_at(std::size_t i, Sym v) const {
  if (i < 1 || i > s_.size()) throw DomainError("position out of range");
  if (v >= alpha_.size()) throw DomainError("symbol index out of range");
  Syms s = s_;
  s[i - 1] = v;
  return Word(alpha_, std::move(s));
}

std::string render(const Alphabet& alpha, const Syms& s) {
  std::string out;
  out.reserve(s.size());
  for (Sym v : s) out.push_back(alpha.symbol(v));
  return out;
}

Syms to_syms(const Word& w) { return w.syms(); }

long long factor_count(const Word& u, const Word& x) {
  if (!x.empty() && !u.empty() && !(u.alphabet() == x.alphabet()))
    throw DomainError("factor_count requires words over the same alphabet");
  if (x.empty()) return static_cast<long long>(u.size()) + 1;
  if (x.size() > u.size()) return 0;
  long long n = 0;
  const Syms& s = u.syms();
  const Syms& p = x.syms();
  for (std::size_t i = 0; i + p.size() <= s.size(); ++i)
    if (std::equal(p.begin(), p.end(), s.begin() + i)) ++n;
  return n;
}

std::vector<Syms> factor_set(const Word& u, std::size_t len) {
  std::vector<Syms> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (len > u.size()) return out;
  const Syms& s = u.syms();
  for (std::size_t i = 0; i + len <= s.size(); ++i)
    out.emplace_back(s.begin() + i, s.begin() + i + len);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long FactorVector::at(const Syms& z) const {
  if (z.size() != static_cast<std::size_t>(k_))
    throw DomainError("factor length does not match k");
  auto it = counts_.find(z);
  return it == counts_.end() ? 0 : it->second;
}

void FactorVector::add(const Syms& z, long long d) {
  if (z.size() != static_cast<std::size_t>(k_))
    throw DomainError("factor length does not match k");
  long long& c = counts_[z];
  c += d;
  if (c < 0) throw DomainError("factor count became negative");
  if (c == 0) counts_.erase(z);
}

long long FactorVector::total() const {
  long long t = 0;
  for (const auto& [z, c] : counts_) t += c;
  return t;
}

FactorVector psi(const Word& u, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  FactorVector f(u.alphabet(), k);
  const Syms& s = u.syms();
  for (std::size_t i = 0; i + k <= s.size(); ++i)
    f.add(Syms(s.begin() + i, s.begin() + i + k), 1);
  return f;
}

bool k_abelian_equivalent(const Word& u, const Word& v, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (!u.empty() && !v.empty() && !(u.alphabet() == v.alphabet()))
    throw DomainError("equivalence requires words over the same alphabet");
  if (u.size() != v.size()) return false;
  std::size_t n = u.size();
  if (n + 1 < static_cast<std::size_t>(k)) {
    // Shorter than k-1: fall back to the definition over all m <= k.
    for (int m = 1; m <= k; ++m)
      if (!(psi(u, m) == psi(v, m))) return false;
    return true;
  }
  // |u| >= k-1: equivalent to equal Psi_k plus shared (k-1)-prefix/suffix.
  std::size_t e = static_cast<std::size_t>(k) - 1;
  return u.prefix(e) == v.prefix(e) && u.suffix(e) == v.suffix(e) &&
         psi(u, k) == psi(v, k);
}

}  // namespace kabelian
