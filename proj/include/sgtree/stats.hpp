#pragma once

#include <string>
#include <vector>

#include "sgtree/exact.hpp"
#include "sgtree/semigroup.hpp"
#include "sgtree/tree.hpp"

namespace sgtree {

// Largest admissible epsilon for the left-element lemmas at genus g:
// (3*gamma - 2 - 1/g) / (1 + 3*gamma). Throws GenusTooSmallError for g < 6,
// where the bound is not positive.
Quad epsilon_max(int g);

struct EpsilonParams {
  Quad epsilon;
  Quad epsilon1;
  Quad epsilon2;

  // Derives epsilon1 = gamma*eps/(4+eps) and epsilon2 = eps/2.
  static EpsilonParams from_epsilon(const Quad& eps);
  // Independent values, for sweeps that pin epsilon1/epsilon2 directly.
  static EpsilonParams with_values(Quad eps, Quad eps1, Quad eps2);
};

struct ClassFlags {
  bool in_Am = false;          // (gamma - eps1) g < m < (gamma + eps1) g
  bool in_AF = false;          // (2 - eps2) m < F < (2 + eps2) m
  bool in_AmF = false;         // both of the above
  bool in_B = false;           // m in (gamma +- eps) g and F in (2 +- eps) gamma g
  bool not_infinite = false;   // gcd of nonzero left elements is 1
};

// Direct evaluation of the five memberships; exact arithmetic throughout.
// Throws GenusMismatchError when g != genus(s).
ClassFlags classify(const Semigroup& s, int g, const EpsilonParams& p);

struct GenusStats {
  int g = 0;
  long long n_g = 0;
  long long count_Am = 0;
  long long count_AF = 0;
  long long count_AmF = 0;
  long long count_B = 0;
  long long count_not_infinite = 0;
  long long count_infinite = 0;

  // count/n_g rendered with `digits` fractional digits, truncated.
  std::string ratio(long long count, int digits = 6) const;
};

// Aggregates ClassFlags over all of S_g. Traversal options (strategy,
// workers) are honored; counts are worker-count invariant.
GenusStats classify_genus(int g, const EpsilonParams& p,
                          const EnumerateOptions& opts = {});

// One traversal filling rows for every genus 0..max_genus.
std::vector<GenusStats> stats_table(int max_genus, const EpsilonParams& p,
                                    const EnumerateOptions& opts = {});

struct InclusionReport {
  int g = 0;
  GenusStats stats;
  // Gap strings of counterexamples; all expected empty.
  std::vector<std::string> violations_AmF_in_B;
  std::vector<std::string> violations_B_consecutive;
  std::vector<std::string> violations_B_in_notinf;

  bool ok() const {
    return violations_AmF_in_B.empty() && violations_B_consecutive.empty() &&
           violations_B_in_notinf.empty();
  }
};

// Exhaustive counterexample search over S_g for the inclusion chain
// A_g^{m,F} in B_g in S_g^(no infinite chain), plus the consecutive
// left-element property of B_g members. The second and third checks are only
// guaranteed for epsilon <= epsilon_max(g); larger epsilon raises
// EpsilonOutOfRangeError unless allow_out_of_range is set.
InclusionReport verify_inclusions(int g, const Quad& epsilon,
                                  bool allow_out_of_range = false,
                                  const EnumerateOptions& opts = {});

// CSV with header
// genus,n_g,count_Am,count_AF,count_AmF,count_B,count_not_infinite,count_infinite
std::string stats_csv(const std::vector<GenusStats>& rows);
// JSON array of objects with the same field names.
std::string stats_json(const std::vector<GenusStats>& rows);

struct TrendRow {
  int g = 0;
  long long n_g = 0;
  long long count_not_infinite = 0;
  long long count_Am = 0;
  long long count_AF = 0;
};

// Per-genus ratios backing the density trend; ratios are reported, never
// asserted to reach their limits.
std::vector<TrendRow> ratio_trend(int max_genus, const EpsilonParams& p,
                                  const EnumerateOptions& opts = {});
std::string trend_table(const std::vector<TrendRow>& rows);

}  // namespace sgtree
