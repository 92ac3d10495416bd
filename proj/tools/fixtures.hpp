// Frozen reference values shared by the CLI self-test and the test suite:
// binary necklace counts, published Gray codes for necklaces, longest-path
// bounds, the small necklace graphs, and maximal cycle decompositions of
// dB(6) and dB(8).

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// N_2(l) for l = 0..18.
inline const std::vector<long long> kNecklaceCounts2 = {
    1,   2,   3,    4,    6,    8,    14,   20,   36,  60,
    108, 188, 352,  632,  1182, 2192, 4116, 7712, 14602};

// Gray codes over all binary necklaces of odd length n (hex flip positions).
inline const std::string kGrayCode5 = "1114111";
inline const std::string kGrayCode7 = "1116165614521341111";
inline const std::string kGrayCode9 =
    "11181878167876781576876567861878678185951575415813754113211";

// The necklace ordering decoded from kGrayCode5.
inline const std::vector<std::string> kGrayOrdering5 = {
    "00000", "00001", "00011", "00111", "00101", "01011", "01111", "11111"};

// Longest-path codes in NG(n) for even n, covering exactly bpl(n) necklaces.
inline const std::string kEvenCode6 = "111521651511";
inline const std::string kEvenCode8 = "11171767156725671472674521615611";

// bpl(2n) for n = 1..12.
inline const std::vector<long long> kBplValues = {
    3,    5,    13,    33,    105,   345,
    1173, 4097, 14573, 52433, 190653, 699073};

// Edge lists of the binary necklace graphs NG(4) and NG(5).
inline const std::vector<std::pair<std::string, std::string>> kNg4Edges = {
    {"0000", "0001"}, {"0001", "0011"}, {"0001", "0101"},
    {"0011", "0111"}, {"0101", "0111"}, {"0111", "1111"}};
inline const std::vector<std::pair<std::string, std::string>> kNg5Edges = {
    {"00000", "00001"}, {"00001", "00011"}, {"00001", "00101"},
    {"00011", "00111"}, {"00011", "01011"}, {"00101", "00111"},
    {"00101", "01011"}, {"00111", "01111"}, {"01011", "01111"},
    {"01111", "11111"}};

// Maximal cycle decomposition of dB(6): N_2(6) = 14 vertex-disjoint cycles
// whose listed order is a Hamiltonian path in the quotient.
inline const std::vector<std::string> kDb6Cycles = {
    "0",      "00000101", "0001",   "000011", "000111", "001111", "001011",
    "001",    "001101",   "011",    "01",     "010111", "011111", "1"};

// Maximal cycle decomposition of dB(8): N_2(8) = 36 cycles, listed order a
// Hamiltonian path in the quotient.
inline const std::vector<std::string> kDb8Cycles = {
    "0",        "00000001", "00000011",      "00000111", "00000101",
    "00001101", "00001001", "00001011",      "00001111", "00011111",
    "00011101", "00011001", "0001",          "00010101", "01",
    "0101011111",           "00110101",      "00010011", "00011011",
    "011",      "0101101111011",             "00101101", "00100101",
    "00111001", "00111101", "00111111",      "00110111", "0011",
    "00111011", "00101011", "00101111",      "00010111", "010111",
    "0111",     "01111111", "1"};

// Worked singleton factorizations: input word, k, bracket rendering.
struct FactorizationFixture {
  std::string word;
  int k;
  std::string rendered;
};
inline const std::vector<FactorizationFixture> kFactorizations = {
    {"0110110110010010010", 4, "(011)^10/3 [10]^-1 (100)^11/3"},
    {"00000000001100110011000101010101010", 5,
     "0^10 [00]^-1 (0011)^7/2 [] (01)^13/2"},
    {"0010101010001111", 4, "0 (01)^9/2 001111"},
};

// Binary 2-abelian singletons of length n >= 4: the pattern family
// a+b* | ab*a | (ab)*(eps|a) together with the 0<->1 mirrors, 2n+4 words.
inline std::vector<std::string> binary_k2_singleton_patterns(std::size_t n) {
  std::vector<std::string> out;
  auto add = [&](const std::string& w) {
    if (w.size() == n) out.push_back(w);
  };
  for (std::size_t i = 1; i <= n; ++i)
    add(std::string(i, '0') + std::string(n - i, '1'));
  if (n >= 2) add("0" + std::string(n - 2, '1') + "0");
  {
    std::string w;
    while (w.size() < n) {
      add(w);
      add(w + "0");
      w += "01";
    }
    add(w);
    add(w + "0");
  }
  // mirrors
  std::vector<std::string> mirrored;
  for (const std::string& w : out) {
    std::string m = w;
    for (char& c : m) c = c == '0' ? '1' : '0';
    mirrored.push_back(m);
  }
  out.insert(out.end(), mirrored.begin(), mirrored.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fixtures
