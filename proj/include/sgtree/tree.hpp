#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sgtree/semigroup.hpp"

namespace sgtree {

// How children of a node obtain their minimal generators.
//  - recompute: rebuild the generator set of the child bitmap from scratch
//    (reference implementation).
//  - incremental: inherit the parent's effective generators above the removed
//    one and test the handful of new candidates; must agree bit-for-bit with
//    recompute.
enum class ChildStrategy { recompute, incremental };

struct TreeEdge {
  std::string parent_id;
  std::string child_id;
  int removed_generator = 0;
  bool highlighted = false;  // child lies on an infinite chain
};

struct TraversalReport {
  int max_genus = 0;
  std::vector<long long> per_genus_counts;
  long long node_visit_count = 0;
  std::chrono::duration<double> wall_time{0};
};

struct EnumerateOptions {
  ChildStrategy strategy = ChildStrategy::incremental;
  int workers = 1;
  // Depth at which the traversal fans out across workers; subtrees rooted at
  // this depth are handed out whole.
  int fanout_depth = 8;
  // Maximum nodes to visit; 0 means unlimited. Hitting the cap raises
  // BudgetExceededError.
  long long node_budget = 0;
};

namespace detail {

// Traversal-internal node: membership block over [0, frobenius+1] plus the
// fields needed to derive children without recomputation.
struct TreeNode {
  std::vector<std::uint64_t> words;
  int frobenius = -1;
  int multiplicity = 1;
  int genus = 0;
  std::vector<int> eff;  // minimal generators > frobenius, ascending
};

TreeNode root_node();
TreeNode node_of(const Semigroup& s);
TreeNode make_child(const TreeNode& parent, int removed, ChildStrategy strategy);

}  // namespace detail

// Read-only view of a traversal node. Cheap accessors over the node's bitmap;
// materialize() builds a full Semigroup (recomputing minimal generators) and
// is meant for leaf use, not per-node hot paths. Views are only valid inside
// the visitor invocation they are passed to.
class NodeView {
 public:
  explicit NodeView(const detail::TreeNode& node) : node_(&node) {}

  int genus() const { return node_->genus; }
  int multiplicity() const { return node_->multiplicity; }
  int frobenius() const { return node_->frobenius; }
  const std::vector<int>& effective_generators() const { return node_->eff; }

  int gcd_left() const;
  bool in_infinite_chain() const { return gcd_left() != 1; }
  bool has_consecutive_left_elements() const;
  std::string gap_string() const;
  Semigroup materialize() const;

 private:
  const detail::TreeNode* node_;
};

// Visitor contract: in parallel mode a visitor is invoked concurrently from
// several workers unless it was produced per worker by a factory.
using NodeVisitor = std::function<void(const NodeView&, int depth)>;
using VisitorFactory = std::function<NodeVisitor(int worker)>;

// Adjoins F(S); throws RootHasNoParentError for the full semigroup of
// nonnegative integers.
Semigroup parent(const Semigroup& s);

// All tree children of S, ascending by removed generator.
std::vector<std::pair<int, Semigroup>> children(
    const Semigroup& s, ChildStrategy strategy = ChildStrategy::recompute);

// Visits every semigroup of genus <= max_genus exactly once. Serial order is
// depth-first preorder with children in ascending removed-generator order.
// With workers > 1 the visitor must be safe for concurrent invocation and
// only the aggregate counts are order-stable.
TraversalReport enumerate(int max_genus, const NodeVisitor& visit,
                          const EnumerateOptions& opts = {});

// Same traversal, but each worker gets its own visitor from the factory
// (worker index 0..workers-1; the serial prefix uses index 0). Lets callers
// accumulate into per-worker slots without locking.
TraversalReport enumerate_partitioned(int max_genus,
                                      const VisitorFactory& make_visitor,
                                      const EnumerateOptions& opts = {});

std::vector<long long> count_by_genus(int max_genus,
                                      const EnumerateOptions& opts = {});

struct SubtreeResult {
  bool finite = false;           // false: node budget exhausted
  long long descendant_count = 0;  // proper descendants, valid when finite
};

// Exhausts the subtree under S with no depth cap. An infinite subtree always
// ends in BudgetExhausted; since bitmaps grow along chains, the descent path
// behind a large budget can get heavy, so probe suspected-infinite subtrees
// with modest budgets (finite subtrees stay shallow and are unaffected).
SubtreeResult subtree_is_finite(const Semigroup& s, long long node_budget);

// True iff some child of S lies on an infinite chain.
bool has_infinite_child(const Semigroup& s);

struct ChainConsistencyReport {
  long long nodes_checked = 0;
  // Gap strings of nodes classified infinite but lacking an infinite child.
  std::vector<std::string> missing_infinite_child;
  // Gap strings of nodes classified finite whose subtree blew the budget.
  std::vector<std::string> unbounded_finite_subtree;

  bool ok() const {
    return missing_infinite_child.empty() && unbounded_finite_subtree.empty();
  }
};

// Exhaustive co-inductive check of the infinite-chain classifier over all
// semigroups of genus <= max_genus: a node classified infinite must have a
// child classified infinite, and a node classified finite must have a finite
// subtree within subtree_budget nodes. `classifier` overrides the gcd-based
// classification (used by the CLI self-test); null means the real one.
ChainConsistencyReport verify_chain_consistency(
    int max_genus, long long subtree_budget,
    const std::function<bool(const NodeView&)>& classifier = nullptr);

}  // namespace sgtree
