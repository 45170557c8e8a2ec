#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sgtree/errors.hpp"

namespace sgtree {

// A numerical semigroup: a cofinite subset of the nonnegative integers that
// contains 0 and is closed under addition. Immutable after construction and
// safe to share between threads.
//
// Membership is a bit block over [0, conductor] with conductor = F + 1;
// every integer beyond the block is implicitly a member. The trivial
// semigroup (all nonnegative integers) has F = -1 and the single bit 0.
class Semigroup {
 public:
  // The nonnegative integers; genus 0, the root of the semigroup tree.
  static Semigroup trivial();

  // The semigroup whose gap set is exactly `gaps` (positive integers,
  // duplicates ignored). Throws NotClosedError when the complement is not
  // closed under addition.
  static Semigroup from_gap_set(const std::vector<int>& gaps);

  // Wraps an existing membership block. The block must already describe a
  // valid semigroup (bit 0 set, bit `frobenius` clear, closed complement);
  // only cheap shape checks are performed here.
  static Semigroup from_membership(std::vector<std::uint64_t> words,
                                   int frobenius);

  bool contains(int n) const;

  int frobenius() const { return frobenius_; }  // -1 for the trivial semigroup
  int conductor() const { return frobenius_ + 1; }
  int genus() const { return genus_; }
  int multiplicity() const { return multiplicity_; }

  // All minimal generators: nonzero members that are not a sum of two
  // nonzero members. Sorted ascending.
  const std::vector<int>& min_generators() const { return min_generators_; }

  // Minimal generators greater than F; removing one yields a child in the
  // semigroup tree.
  std::vector<int> effective_generators() const;

  // Members strictly below F, ascending (includes 0 whenever F > 0).
  std::vector<int> left_elements() const;

  std::vector<int> gaps() const;

  // gcd of the nonzero left elements, 0 when there are none.
  int gcd_left() const;

  // True iff gcd_left() != 1, i.e. the nonzero left elements do not generate
  // 1 (the empty case, gcd 0, counts). Exactly these semigroups have
  // infinitely many descendants in the semigroup tree.
  bool in_infinite_chain() const { return gcd_left() != 1; }

  // True when some n has both n and n+1 members strictly below F.
  bool has_consecutive_left_elements() const;

  // Canonical textual form: comma-separated sorted gap list, "" for the
  // trivial semigroup.
  std::string gap_string() const;

  // Canonical id: hex encoding of the gap bitmap, bit i-1 <-> integer i.
  std::string hex_id() const;

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const Semigroup& other) const {
    return frobenius_ == other.frobenius_ && words_ == other.words_;
  }

 private:
  Semigroup() = default;

  std::vector<std::uint64_t> words_;
  int frobenius_ = -1;
  int genus_ = 0;
  int multiplicity_ = 1;
  std::vector<int> min_generators_;
};

namespace detail {

// Membership with the implicit tail: integers above `frobenius` are members.
bool ext_member(std::span<const std::uint64_t> words, int frobenius, int n);

// Smallest nonzero member (F + 1 when no set bit in [1, F]; 1 when F = -1).
int multiplicity_of(std::span<const std::uint64_t> words, int frobenius);

// All minimal generators of the block. The search is bounded by F + m:
// any member beyond that is m plus a member >= conductor, hence not minimal.
std::vector<int> minimal_generators_of(std::span<const std::uint64_t> words,
                                       int frobenius);

int gcd_left_of(std::span<const std::uint64_t> words, int frobenius);

bool has_consecutive_left_of(std::span<const std::uint64_t> words,
                             int frobenius);

std::string gap_string_of(std::span<const std::uint64_t> words, int frobenius);

}  // namespace detail

}  // namespace sgtree
