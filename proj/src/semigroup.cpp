#include "sgtree/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sgtree/bits.hpp"

namespace sgtree {

namespace detail {

bool ext_member(std::span<const std::uint64_t> words, int frobenius, int n) {
  if (n > frobenius) return true;
  return bits::test(words, n);
}

int multiplicity_of(std::span<const std::uint64_t> words, int frobenius) {
  if (frobenius < 0) return 1;
  for (std::size_t j = 0; j < words.size(); ++j) {
    std::uint64_t w = words[j];
    if (j == 0) w &= ~std::uint64_t{1};  // skip member 0
    if (w != 0) {
      int i = static_cast<int>(j) * bits::kWordBits + std::countr_zero(w);
      if (i <= frobenius) return i;
      break;
    }
  }
  return frobenius + 1;
}

std::vector<int> minimal_generators_of(std::span<const std::uint64_t> words,
                                       int frobenius) {
  if (frobenius < 0) return {1};
  const int m = multiplicity_of(words, frobenius);
  const int bound = frobenius + m;

  // Extended membership over [0, bound]: block bits plus the implicit tail.
  std::vector<std::uint64_t> ext(bits::words_for(bound + 1), 0);
  std::copy(words.begin(), words.end(), ext.begin());
  for (int i = frobenius + 1; i <= bound; ++i) bits::set(ext, i);

  // sums[x] = 1 iff x = s + t for nonzero members s, t; the shift source
  // must exclude 0 or every member would count as its own sum.
  std::vector<std::uint64_t> nonzero = ext;
  bits::clear(nonzero, 0);
  std::vector<std::uint64_t> sums(ext.size(), 0);
  for (int s = m; 2 * s <= bound; ++s) {
    if (bits::test(ext, s)) bits::shift_or(sums, nonzero, s);
  }

  std::vector<int> gens;
  for (int x = m; x <= bound; ++x) {
    if (bits::test(ext, x) && !bits::test(sums, x)) gens.push_back(x);
  }
  return gens;
}

int gcd_left_of(std::span<const std::uint64_t> words, int frobenius) {
  int d = 0;
  for (int i = 1; i < frobenius; ++i) {
    if (bits::test(words, i)) {
      d = std::gcd(d, i);
      if (d == 1) break;
    }
  }
  return d;
}

bool has_consecutive_left_of(std::span<const std::uint64_t> words,
                             int frobenius) {
  for (int i = 0; i + 1 < frobenius; ++i) {
    if (bits::test(words, i) && bits::test(words, i + 1)) return true;
  }
  return false;
}

std::string gap_string_of(std::span<const std::uint64_t> words, int frobenius) {
  std::string out;
  for (int i = 1; i <= frobenius; ++i) {
    if (!bits::test(words, i)) {
      if (!out.empty()) out += ',';
      out += std::to_string(i);
    }
  }
  return out;
}

}  // namespace detail

Semigroup Semigroup::trivial() {
  Semigroup s;
  s.words_ = {1};
  s.frobenius_ = -1;
  s.genus_ = 0;
  s.multiplicity_ = 1;
  s.min_generators_ = {1};
  return s;
}

Semigroup Semigroup::from_membership(std::vector<std::uint64_t> words,
                                     int frobenius) {
  if (frobenius < -1) throw Error("frobenius must be >= -1");
  if (static_cast<int>(words.size()) != bits::words_for(frobenius + 2) &&
      !(frobenius == -1 && words.size() == 1)) {
    throw Error("membership block has wrong size");
  }
  if (!bits::test(words, 0)) throw Error("0 must be a member");
  if (frobenius >= 0 && bits::test(words, frobenius))
    throw Error("frobenius must be a gap");

  // Canonicalize: bits past the conductor are implicit, keep them zero so
  // equality is representation independent.
  const int top = frobenius + 1;
  const std::size_t lastw = static_cast<std::size_t>(top) / bits::kWordBits;
  const int lastb = top % bits::kWordBits;
  words[lastw] &= lastb == bits::kWordBits - 1
                      ? ~std::uint64_t{0}
                      : ((std::uint64_t{1} << (lastb + 1)) - 1);

  Semigroup s;
  s.frobenius_ = frobenius;
  s.genus_ = frobenius < 1
                 ? 0
                 : frobenius + 1 - bits::popcount_through(words, frobenius);
  s.multiplicity_ = detail::multiplicity_of(words, frobenius);
  s.min_generators_ = detail::minimal_generators_of(words, frobenius);
  s.words_ = std::move(words);
  return s;
}

Semigroup Semigroup::from_gap_set(const std::vector<int>& gaps) {
  if (gaps.empty()) return trivial();
  std::vector<int> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 1) throw Error("gaps must be positive integers");

  const int frobenius = sorted.back();
  std::vector<std::uint64_t> words(bits::words_for(frobenius + 2), 0);
  for (int i = 0; i <= frobenius + 1; ++i) bits::set(words, i);
  for (int gap : sorted) bits::clear(words, gap);

  // Closure of the complement, reporting the smallest violating pair.
  for (int a = 1; a < frobenius; ++a) {
    if (!bits::test(words, a)) continue;
    for (int b = a; a + b <= frobenius; ++b) {
      if (bits::test(words, b) && !bits::test(words, a + b))
        throw NotClosedError(a, b);
    }
  }
  return from_membership(std::move(words), frobenius);
}

bool Semigroup::contains(int n) const {
  if (n < 0) throw std::invalid_argument("membership is defined for n >= 0");
  return detail::ext_member(words_, frobenius_, n);
}

std::vector<int> Semigroup::effective_generators() const {
  std::vector<int> out;
  for (int x : min_generators_)
    if (x > frobenius_) out.push_back(x);
  return out;
}

std::vector<int> Semigroup::left_elements() const {
  std::vector<int> out;
  for (int i = 0; i < frobenius_; ++i)
    if (bits::test(words_, i)) out.push_back(i);
  return out;
}

std::vector<int> Semigroup::gaps() const {
  std::vector<int> out;
  for (int i = 1; i <= frobenius_; ++i)
    if (!bits::test(words_, i)) out.push_back(i);
  return out;
}

int Semigroup::gcd_left() const {
  return detail::gcd_left_of(words_, frobenius_);
}

bool Semigroup::has_consecutive_left_elements() const {
  return detail::has_consecutive_left_of(words_, frobenius_);
}

std::string Semigroup::gap_string() const {
  return detail::gap_string_of(words_, frobenius_);
}

std::string Semigroup::hex_id() const {
  // Gap bitmap as an integer: bit i-1 set iff i is a gap.
  std::vector<std::uint64_t> value(words_.size(), 0);
  for (int i = 1; i <= frobenius_; ++i) {
    if (!bits::test(words_, i)) bits::set(value, i - 1);
  }
  static const char* digits = "0123456789abcdef";
  std::string out;
  bool leading = true;
  for (int j = static_cast<int>(value.size()) - 1; j >= 0; --j) {
    for (int nib = 15; nib >= 0; --nib) {
      unsigned d = (value[static_cast<std::size_t>(j)] >> (nib * 4)) & 0xF;
      if (leading && d == 0) continue;
      leading = false;
      out += digits[d];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace sgtree
