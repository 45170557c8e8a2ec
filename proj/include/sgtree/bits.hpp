#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

// Word-level helpers for membership bit blocks. A block stores bits
// 0..nbits-1 little-endian within each 64-bit word.
namespace sgtree::bits {

inline constexpr int kWordBits = 64;

inline int words_for(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const std::uint64_t> w, int i) {
  return (w[static_cast<std::size_t>(i) / kWordBits] >>
          (static_cast<unsigned>(i) % kWordBits)) &
         1u;
}

inline void set(std::span<std::uint64_t> w, int i) {
  w[static_cast<std::size_t>(i) / kWordBits] |=
      std::uint64_t{1} << (static_cast<unsigned>(i) % kWordBits);
}

inline void clear(std::span<std::uint64_t> w, int i) {
  w[static_cast<std::size_t>(i) / kWordBits] &=
      ~(std::uint64_t{1} << (static_cast<unsigned>(i) % kWordBits));
}

// Number of set bits with index in [0, upto].
inline int popcount_through(std::span<const std::uint64_t> w, int upto) {
  if (upto < 0) return 0;
  int full = upto / kWordBits;
  int count = 0;
  for (int j = 0; j < full; ++j) count += std::popcount(w[j]);
  unsigned rem = static_cast<unsigned>(upto) % kWordBits;
  std::uint64_t mask = rem == 63 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << (rem + 1)) - 1);
  count += std::popcount(w[full] & mask);
  return count;
}

// dst |= src << shift, writing only words of dst (dst may be longer).
inline void shift_or(std::vector<std::uint64_t>& dst,
                     std::span<const std::uint64_t> src, int shift) {
  const int word_shift = shift / kWordBits;
  const int bit_shift = shift % kWordBits;
  const int n = static_cast<int>(dst.size());
  for (int j = static_cast<int>(src.size()) - 1; j >= 0; --j) {
    std::uint64_t v = src[static_cast<std::size_t>(j)];
    if (v == 0) continue;
    int lo = j + word_shift;
    if (bit_shift == 0) {
      if (lo < n) dst[static_cast<std::size_t>(lo)] |= v;
    } else {
      if (lo < n) dst[static_cast<std::size_t>(lo)] |= v << bit_shift;
      if (lo + 1 < n)
        dst[static_cast<std::size_t>(lo + 1)] |= v >> (kWordBits - bit_shift);
    }
  }
}

}  // namespace sgtree::bits
