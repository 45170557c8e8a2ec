#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "sgtree/errors.hpp"
#include "sgtree/semigroup.hpp"
#include "sgtree/tree.hpp"

using sgtree::Semigroup;

namespace {

std::vector<Semigroup> all_of_genus_at_most(int max_genus) {
  std::vector<Semigroup> out;
  sgtree::enumerate(max_genus, [&](const sgtree::NodeView& v, int) {
    out.push_back(v.materialize());
  });
  return out;
}

// Additive closure of a generator set over [0, bound], independent of the
// library's sums bitmap.
std::vector<bool> closure_over(const std::vector<int>& gens, int bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (int v = 1; v <= bound; ++v) {
    for (int g : gens) {
      if (g <= v && member[static_cast<std::size_t>(v - g)]) {
        member[static_cast<std::size_t>(v)] = true;
        break;
      }
    }
  }
  return member;
}

}  // namespace

TEST_CASE("trivial semigroup") {
  const Semigroup n = Semigroup::trivial();
  CHECK(n.frobenius() == -1);
  CHECK(n.conductor() == 0);
  CHECK(n.genus() == 0);
  CHECK(n.multiplicity() == 1);
  CHECK(n.min_generators() == std::vector<int>{1});
  CHECK(n.effective_generators() == std::vector<int>{1});
  CHECK(n.gap_string().empty());
  CHECK(n.hex_id() == "0");
  CHECK(n.contains(0));
  CHECK(n.contains(7));
  CHECK(n.left_elements().empty());
  CHECK(n.gaps().empty());
  CHECK(n.gcd_left() == 0);
  CHECK(n.in_infinite_chain());
  CHECK_FALSE(n.has_consecutive_left_elements());
}

TEST_CASE("gap set constructor derives all fields") {
  const Semigroup s = Semigroup::from_gap_set({1, 2, 5});
  CHECK(s.frobenius() == 5);
  CHECK(s.conductor() == 6);
  CHECK(s.genus() == 3);
  CHECK(s.multiplicity() == 3);
  CHECK(s.min_generators() == std::vector<int>{3, 4});
  CHECK(s.effective_generators().empty());
  CHECK(s.left_elements() == std::vector<int>{0, 3, 4});
  CHECK(s.gaps() == std::vector<int>{1, 2, 5});
  CHECK(s.gap_string() == "1,2,5");
  CHECK(s.hex_id() == "13");
  CHECK(s.gcd_left() == 1);
  CHECK_FALSE(s.in_infinite_chain());
  CHECK(s.has_consecutive_left_elements());

  const Semigroup t = Semigroup::from_gap_set({1, 3});
  CHECK(t.frobenius() == 3);
  CHECK(t.genus() == 2);
  CHECK(t.multiplicity() == 2);
  CHECK(t.min_generators() == std::vector<int>{2, 5});
  CHECK(t.effective_generators() == std::vector<int>{5});
  CHECK(t.left_elements() == std::vector<int>{0, 2});
  CHECK(t.gcd_left() == 2);
  CHECK(t.in_infinite_chain());
  CHECK_FALSE(t.has_consecutive_left_elements());
  CHECK(t.hex_id() == "5");

  const Semigroup ordinary = Semigroup::from_gap_set({1, 2});
  CHECK(ordinary.multiplicity() == 3);
  CHECK(ordinary.min_generators() == std::vector<int>{3, 4, 5});
  CHECK(ordinary.gcd_left() == 0);
  CHECK(ordinary.in_infinite_chain());
}

TEST_CASE("gap set input is order and duplicate insensitive") {
  const Semigroup a = Semigroup::from_gap_set({5, 1, 2, 2});
  const Semigroup b = Semigroup::from_gap_set({1, 2, 5});
  CHECK(a == b);
  CHECK(Semigroup::from_gap_set({}) == Semigroup::trivial());
}

TEST_CASE("unrealizable gap sets report the smallest violating pair") {
  CHECK_THROWS_AS((void)Semigroup::from_gap_set({1, 4}), sgtree::NotClosedError);
  try {
    (void)Semigroup::from_gap_set({1, 4});
  } catch (const sgtree::NotClosedError& e) {
    CHECK(e.a == 2);
    CHECK(e.b == 2);
  }
  try {
    (void)Semigroup::from_gap_set({3, 5});  // 1 is a member, 1+2=3 is a gap
  } catch (const sgtree::NotClosedError& e) {
    CHECK(e.a == 1);
    CHECK(e.b == 2);
  }
  CHECK_THROWS_AS((void)Semigroup::from_gap_set({0, 1}), sgtree::Error);
  CHECK_THROWS_AS((void)Semigroup::from_gap_set({-2, 1}), sgtree::Error);
}

TEST_CASE("membership constructor validates its block") {
  CHECK_THROWS_AS((void)Semigroup::from_membership({0}, -1), sgtree::Error);
  CHECK_THROWS_AS((void)Semigroup::from_membership({1, 0}, 3), sgtree::Error);
  // Frobenius bit set.
  CHECK_THROWS_AS((void)Semigroup::from_membership({0xFF}, 3), sgtree::Error);
  // Stray bits past the conductor are implicit members; normalized away.
  const Semigroup s = Semigroup::from_membership({0b11101}, 1);
  CHECK(s.genus() == 1);
  CHECK(s.gap_string() == "1");
  CHECK(s == Semigroup::from_gap_set({1}));
}

TEST_CASE("contains rejects negative input") {
  CHECK_THROWS_AS((void)Semigroup::trivial().contains(-1),
                  std::invalid_argument);
}

TEST_CASE("round-trip and closure over the enumerated tree") {
  for (const Semigroup& s : all_of_genus_at_most(9)) {
    const Semigroup back = Semigroup::from_gap_set(s.gaps());
    CHECK(back == s);
    CHECK(back.genus() == s.genus());
    CHECK(back.multiplicity() == s.multiplicity());
    CHECK(back.min_generators() == s.min_generators());
    CHECK(back.hex_id() == s.hex_id());
  }
  // Exhaustive closure scan, deeper but field-light.
  long long checked = 0;
  sgtree::enumerate(15, [&](const sgtree::NodeView& v, int) {
    const Semigroup s = v.materialize();
    const int f = s.frobenius();
    for (int a = 1; a < f; ++a) {
      if (!s.contains(a)) continue;
      for (int b = a; a + b <= f; ++b) {
        if (s.contains(b)) {
          CHECK(s.contains(a + b));
          ++checked;
        }
      }
    }
  });
  CHECK(checked > 0);
}

TEST_CASE("left element structure") {
  for (const Semigroup& s : all_of_genus_at_most(12)) {
    const auto left = s.left_elements();
    const int gcd = s.gcd_left();
    bool any_nonzero = false;
    for (int v : left) {
      if (v == 0) continue;
      any_nonzero = true;
      CHECK(v % gcd == 0);
    }
    CHECK((gcd == 0) == !any_nonzero);
    if (s.has_consecutive_left_elements()) CHECK_FALSE(s.in_infinite_chain());
    CHECK(s.in_infinite_chain() == (gcd != 1));
  }
}

TEST_CASE("minimal generators generate and are irredundant") {
  for (const Semigroup& s : all_of_genus_at_most(12)) {
    const auto gens = s.min_generators();
    const int bound = s.frobenius() + s.multiplicity();
    const auto generated = closure_over(gens, bound);
    for (int v = 0; v <= bound; ++v)
      CHECK(generated[static_cast<std::size_t>(v)] == s.contains(v));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<int> rest = gens;
      rest.erase(rest.begin() + static_cast<long>(i));
      const auto partial = closure_over(rest, bound);
      CHECK_FALSE(partial[static_cast<std::size_t>(gens[i])]);
    }
  }
}

TEST_CASE("Frobenius number stays under twice the genus") {
  sgtree::enumerate(13, [&](const sgtree::NodeView& v, int depth) {
    if (depth >= 1) CHECK(v.frobenius() <= 2 * depth - 1);
  });
}
