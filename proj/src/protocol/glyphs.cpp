#include "dualtap/protocol/glyphs.hpp"

#include <mutex>

#include "dualtap/core/rng.hpp"

namespace dualtap::glyphs {

namespace {

constexpr int kBits = kCell * kCell;
constexpr std::uint64_t kTemplateSeed = 0x67c1f0d5a2b3e489ULL;

struct Bank {
  std::vector<std::vector<unsigned char>> char_bits;
  std::vector<std::vector<unsigned char>> anchor_bits;
  std::vector<VectorR> char_tpl;
  std::vector<VectorR> anchor_tpl;
};

int hamming(const std::vector<unsigned char>& a, const std::vector<unsigned char>& b) {
  int d = 0;
  for (int i = 0; i < kBits; ++i) d += a[std::size_t(i)] != b[std::size_t(i)];
  return d;
}

std::vector<unsigned char> balanced_pattern(Rng& rng) {
  // exactly half the dots set, uniformly placed
  std::vector<unsigned char> bits(kBits, 0);
  std::vector<int> idx(kBits);
  for (int i = 0; i < kBits; ++i) idx[std::size_t(i)] = i;
  rng.shuffle(idx);
  for (int i = 0; i < kBits / 2; ++i) bits[std::size_t(idx[std::size_t(i)])] = 1;
  return bits;
}

VectorR normalize(const std::vector<unsigned char>& bits) {
  VectorR t(kBits);
  for (int i = 0; i < kBits; ++i) t[i] = Real(bits[std::size_t(i)]);
  t.array() -= t.mean();
  Real n = t.norm();
  return t / n;
}

Bank build_bank() {
  Bank bank;
  Rng rng(kTemplateSeed);
  const int total = int(alphabet().size()) + kNumAnchors;
  const int min_dist = 12;
  std::vector<std::vector<unsigned char>> all;
  while (int(all.size()) < total) {
    auto cand = balanced_pattern(rng);
    bool ok = true;
    for (const auto& prev : all)
      if (hamming(cand, prev) < min_dist) {
        ok = false;
        break;
      }
    if (ok) all.push_back(std::move(cand));
  }
  for (int i = 0; i < int(alphabet().size()); ++i) {
    bank.char_bits.push_back(all[std::size_t(i)]);
    bank.char_tpl.push_back(normalize(all[std::size_t(i)]));
  }
  for (int i = 0; i < kNumAnchors; ++i) {
    auto& bits = all[std::size_t(int(alphabet().size()) + i)];
    bank.anchor_bits.push_back(bits);
    bank.anchor_tpl.push_back(normalize(bits));
  }
  return bank;
}

const Bank& bank() {
  static Bank b = build_bank();
  return b;
}

}  // namespace

const std::string& alphabet() {
  static const std::string a = "0123456789abcdefghijklmnopqrstuvwxyz-.@/ ";
  return a;
}

int char_index(char c) {
  const std::string& a = alphabet();
  auto pos = a.find(c);
  return pos == std::string::npos ? -1 : int(pos);
}

const VectorR& char_template(int i) { return bank().char_tpl.at(std::size_t(i)); }
const VectorR& anchor_template(int k) { return bank().anchor_tpl.at(std::size_t(k)); }
const std::vector<unsigned char>& char_dots(int i) { return bank().char_bits.at(std::size_t(i)); }
const std::vector<unsigned char>& anchor_dots(int k) { return bank().anchor_bits.at(std::size_t(k)); }

}  // namespace dualtap::glyphs
