#ifndef GARSIDE_BITSET_HPP
#define GARSIDE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace garside {

// Growable bitset over 64-bit words.  Two bitsets compare and combine by
// value regardless of how many trailing zero words either one carries, so
// inversion sets computed at different root-registry sizes stay comparable.
class DynBitset {
public:
  DynBitset() = default;

  void set(std::size_t i) {
    std::size_t w = i >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i & 63);
  }

  bool test(std::size_t i) const {
    std::size_t w = i >> 6;
    return w < words_.size() && (words_[w] >> (i & 63)) & 1;
  }

  DynBitset& operator|=(const DynBitset& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t j = 0; j < o.words_.size(); ++j) words_[j] |= o.words_[j];
    return *this;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t j = 0; j < words_.size(); ++j)
      words_[j] &= j < o.words_.size() ? o.words_[j] : 0;
    return *this;
  }

  // this ⊆ o
  bool subset_of(const DynBitset& o) const {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      std::uint64_t ow = j < o.words_.size() ? o.words_[j] : 0;
      if (words_[j] & ~ow) return false;
    }
    return true;
  }

  bool intersects(const DynBitset& o) const {
    std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t j = 0; j < m; ++j)
      if (words_[j] & o.words_[j]) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const DynBitset& o) const {
    std::size_t m = std::max(words_.size(), o.words_.size());
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t a = j < words_.size() ? words_[j] : 0;
      std::uint64_t b = j < o.words_.size() ? o.words_[j] : 0;
      if (a != b) return false;
    }
    return true;
  }

  // Indices of set bits, ascending.
  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t j = 0; j < words_.size(); ++j) {
      std::uint64_t w = words_[j];
      while (w) {
        unsigned b = std::countr_zero(w);
        out.push_back(static_cast<std::uint32_t>((j << 6) + b));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t j = words_.size(); j-- > 0;) {
      if (words_[j] == 0 && h == 0x9e3779b97f4a7c15ull) continue;  // skip trailing zeros
      h ^= words_[j] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  std::vector<std::uint64_t> words_;
};

inline DynBitset operator|(DynBitset a, const DynBitset& b) {
  a |= b;
  return a;
}

}  // namespace garside

#endif
