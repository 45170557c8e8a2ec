#include "sgtree/tree.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sgtree/bits.hpp"
#include "sgtree/errors.hpp"

namespace sgtree {

namespace detail {

namespace {

// Minimality of z in the child: no split z = a + (z-a) into nonzero members.
bool is_minimal(std::span<const std::uint64_t> words, int frobenius,
                int multiplicity, int z) {
  for (int a = multiplicity; 2 * a <= z; ++a) {
    if (ext_member(words, frobenius, a) && ext_member(words, frobenius, z - a))
      return false;
  }
  return true;
}

}  // namespace

TreeNode root_node() {
  TreeNode n;
  n.words = {1};
  n.frobenius = -1;
  n.multiplicity = 1;
  n.genus = 0;
  n.eff = {1};
  return n;
}

TreeNode node_of(const Semigroup& s) {
  TreeNode n;
  const auto w = s.words();
  n.words.assign(w.begin(), w.end());
  n.frobenius = s.frobenius();
  n.multiplicity = s.multiplicity();
  n.genus = s.genus();
  n.eff = s.effective_generators();
  return n;
}

TreeNode make_child(const TreeNode& parent, int removed,
                    ChildStrategy strategy) {
  TreeNode c;
  c.frobenius = removed;
  c.genus = parent.genus + 1;

  // Child block covers [0, removed+1]: parent bits, the implicit tail of the
  // parent set, minus the removed generator.
  c.words.assign(bits::words_for(removed + 2), 0);
  std::copy(parent.words.begin(), parent.words.end(), c.words.begin());
  for (int i = parent.frobenius + 1; i <= removed + 1; ++i) bits::set(c.words, i);
  bits::clear(c.words, removed);

  if (removed == parent.multiplicity) {
    int m = parent.multiplicity + 1;
    while (!ext_member(c.words, c.frobenius, m)) ++m;
    c.multiplicity = m;
  } else {
    c.multiplicity = parent.multiplicity;
  }

  if (strategy == ChildStrategy::recompute) {
    auto gens = minimal_generators_of(c.words, c.frobenius);
    for (int y : gens)
      if (y > c.frobenius) c.eff.push_back(y);
    return c;
  }

  // Incremental rule. Generators of the parent above the removed one stay
  // minimal in the child (removal cannot create a decomposition). The only
  // possible new effective generator is removed + m(parent): any other new
  // non-sum z would admit z = m + (z - m) with z - m past the child's
  // Frobenius number. Removing the multiplicity itself leaves the ordinary
  // semigroup of multiplicity m+1, which picks up 2m and 2m+1.
  for (int y : parent.eff)
    if (y > removed) c.eff.push_back(y);
  if (removed == parent.multiplicity) {
    c.eff.push_back(2 * parent.multiplicity);
    c.eff.push_back(2 * parent.multiplicity + 1);
  } else {
    int z = removed + parent.multiplicity;
    if (is_minimal(c.words, c.frobenius, c.multiplicity, z)) c.eff.push_back(z);
  }
  return c;
}

}  // namespace detail

int NodeView::gcd_left() const {
  return detail::gcd_left_of(node_->words, node_->frobenius);
}

bool NodeView::has_consecutive_left_elements() const {
  return detail::has_consecutive_left_of(node_->words, node_->frobenius);
}

std::string NodeView::gap_string() const {
  return detail::gap_string_of(node_->words, node_->frobenius);
}

Semigroup NodeView::materialize() const {
  return Semigroup::from_membership(node_->words, node_->frobenius);
}

Semigroup parent(const Semigroup& s) {
  const int f = s.frobenius();
  if (f < 0) throw RootHasNoParentError();

  int fp = -1;  // largest gap below f, the parent's Frobenius number
  for (int i = f - 1; i >= 1; --i) {
    if (!s.contains(i)) {
      fp = i;
      break;
    }
  }

  std::vector<std::uint64_t> words(bits::words_for(fp + 2), 0);
  const auto src = s.words();
  std::copy(src.begin(), src.begin() + static_cast<long>(words.size()),
            words.begin());
  // Mask strays above fp+1, then restore the top bit (fp+1 may have been the
  // old Frobenius gap).
  const int top = fp + 1;
  const std::size_t lastw = static_cast<std::size_t>(top) / bits::kWordBits;
  const int lastb = top % bits::kWordBits;
  words[lastw] &= lastb == bits::kWordBits - 1
                      ? ~std::uint64_t{0}
                      : ((std::uint64_t{1} << (lastb + 1)) - 1);
  bits::set(words, top);
  return Semigroup::from_membership(std::move(words), fp);
}

std::vector<std::pair<int, Semigroup>> children(const Semigroup& s,
                                                ChildStrategy strategy) {
  const detail::TreeNode node = detail::node_of(s);
  std::vector<std::pair<int, Semigroup>> out;
  out.reserve(node.eff.size());
  for (int x : node.eff) {
    detail::TreeNode c = detail::make_child(node, x, strategy);
    out.emplace_back(x, Semigroup::from_membership(std::move(c.words),
                                                   c.frobenius));
  }
  return out;
}

namespace {

// Depth-first preorder walk of the subtree rooted at `root`, visiting nodes
// with genus <= max_genus (max_genus < 0: no depth cap). Returns false as
// soon as materializing one more node would pass `budget` (budget 0:
// unlimited). Children are generated lazily so memory stays proportional to
// the descent path, and a node's last child replaces its spent frame, which
// keeps walks down bare chains in constant frames.
template <typename Fn>
bool walk_subtree(detail::TreeNode root, int max_genus, ChildStrategy strategy,
                  long long budget, std::atomic<long long>& visited, Fn&& fn) {
  struct Frame {
    detail::TreeNode node;
    std::size_t next_child = 0;
  };

  if (budget > 0 && visited.fetch_add(1) + 1 > budget) return false;
  fn(root);
  std::vector<Frame> stack;
  if ((max_genus < 0 || root.genus < max_genus) && !root.eff.empty())
    stack.push_back(Frame{std::move(root), 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_child >= top.node.eff.size()) {
      stack.pop_back();
      continue;
    }
    const int x = top.node.eff[top.next_child++];
    if (budget > 0 && visited.fetch_add(1) + 1 > budget) return false;
    detail::TreeNode child = detail::make_child(top.node, x, strategy);
    fn(child);
    if ((max_genus < 0 || child.genus < max_genus) && !child.eff.empty()) {
      if (top.next_child >= top.node.eff.size())
        top = Frame{std::move(child), 0};
      else
        stack.push_back(Frame{std::move(child), 0});
    }
  }
  return true;
}

}  // namespace

TraversalReport enumerate_partitioned(int max_genus,
                                      const VisitorFactory& make_visitor,
                                      const EnumerateOptions& opts) {
  if (max_genus < 0) throw Error("max_genus must be >= 0");
  if (opts.workers < 1) throw Error("workers must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  std::atomic<long long> visited{0};

  const bool parallel = opts.workers > 1 && max_genus > opts.fanout_depth;
  NodeVisitor serial_visitor = make_visitor(0);

  if (!parallel) {
    bool ok = walk_subtree(detail::root_node(), max_genus, opts.strategy,
                           opts.node_budget, visited,
                           [&](const detail::TreeNode& n) {
                             ++counts[static_cast<std::size_t>(n.genus)];
                             if (serial_visitor)
                               serial_visitor(NodeView(n), n.genus);
                           });
    if (!ok) throw BudgetExceededError(opts.node_budget);
  } else {
    // Serial prefix above the fan-out depth; subtrees rooted at the fan-out
    // depth are handed out whole to workers.
    std::vector<detail::TreeNode> frontier;
    bool ok = walk_subtree(
        detail::root_node(), opts.fanout_depth, opts.strategy,
        opts.node_budget, visited, [&](const detail::TreeNode& n) {
          if (n.genus == opts.fanout_depth) {
            frontier.push_back(n);
            return;
          }
          ++counts[static_cast<std::size_t>(n.genus)];
          if (serial_visitor) serial_visitor(NodeView(n), n.genus);
        });
    // Frontier nodes were counted against the budget but not yet visited;
    // hand the count back so workers recount them on visit.
    visited.fetch_sub(static_cast<long long>(frontier.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> exhausted{!ok};
    std::mutex merge_mutex;

    auto run_worker = [&](int index) {
      NodeVisitor visit = index == 0 ? serial_visitor : make_visitor(index);
      std::vector<long long> local(counts.size(), 0);
      while (!exhausted.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        bool sub_ok = walk_subtree(std::move(frontier[i]), max_genus,
                                   opts.strategy, opts.node_budget, visited,
                                   [&](const detail::TreeNode& n) {
                                     ++local[static_cast<std::size_t>(n.genus)];
                                     if (visit) visit(NodeView(n), n.genus);
                                   });
        if (!sub_ok) exhausted.store(true, std::memory_order_relaxed);
      }
      const std::lock_guard<std::mutex> lock(merge_mutex);
      for (std::size_t g = 0; g < counts.size(); ++g) counts[g] += local[g];
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(opts.workers) - 1);
    for (int w = 1; w < opts.workers; ++w) threads.emplace_back(run_worker, w);
    run_worker(0);
    for (auto& t : threads) t.join();
    if (exhausted.load()) throw BudgetExceededError(opts.node_budget);
  }

  TraversalReport report;
  report.max_genus = max_genus;
  report.per_genus_counts = std::move(counts);
  for (long long c : report.per_genus_counts) report.node_visit_count += c;
  report.wall_time = std::chrono::steady_clock::now() - t0;
  return report;
}

TraversalReport enumerate(int max_genus, const NodeVisitor& visit,
                          const EnumerateOptions& opts) {
  return enumerate_partitioned(
      max_genus, [&](int) { return visit; }, opts);
}

std::vector<long long> count_by_genus(int max_genus,
                                      const EnumerateOptions& opts) {
  return enumerate(max_genus, nullptr, opts).per_genus_counts;
}

SubtreeResult subtree_is_finite(const Semigroup& s, long long node_budget) {
  if (node_budget <= 0) throw Error("node_budget must be positive");
  std::atomic<long long> visited{0};
  bool ok = walk_subtree(detail::node_of(s), -1, ChildStrategy::incremental,
                         node_budget, visited, [](const detail::TreeNode&) {});
  SubtreeResult r;
  r.finite = ok;
  r.descendant_count = ok ? visited.load() - 1 : 0;  // exclude the root
  return r;
}

bool has_infinite_child(const Semigroup& s) {
  const detail::TreeNode node = detail::node_of(s);
  for (int x : node.eff) {
    detail::TreeNode c =
        detail::make_child(node, x, ChildStrategy::incremental);
    if (detail::gcd_left_of(c.words, c.frobenius) != 1) return true;
  }
  return false;
}

ChainConsistencyReport verify_chain_consistency(
    int max_genus, long long subtree_budget,
    const std::function<bool(const NodeView&)>& classifier) {
  if (max_genus < 0) throw Error("max_genus must be >= 0");
  if (subtree_budget <= 0) throw Error("subtree_budget must be positive");

  auto classify = [&](const detail::TreeNode& n) {
    return classifier ? classifier(NodeView(n)) : NodeView(n).in_infinite_chain();
  };

  ChainConsistencyReport report;
  std::atomic<long long> visited{0};
  walk_subtree(
      detail::root_node(), max_genus, ChildStrategy::incremental, 0, visited,
      [&](const detail::TreeNode& n) {
        ++report.nodes_checked;
        if (classify(n)) {
          bool found = false;
          for (int x : n.eff) {
            detail::TreeNode c =
                detail::make_child(n, x, ChildStrategy::incremental);
            if (classify(c)) {
              found = true;
              break;
            }
          }
          if (!found)
            report.missing_infinite_child.push_back(
                detail::gap_string_of(n.words, n.frobenius));
        } else {
          std::atomic<long long> sub_visited{0};
          bool finite = walk_subtree(n, -1, ChildStrategy::incremental,
                                     subtree_budget, sub_visited,
                                     [](const detail::TreeNode&) {});
          if (!finite)
            report.unbounded_finite_subtree.push_back(
                detail::gap_string_of(n.words, n.frobenius));
        }
      });
  return report;
}

}  // namespace sgtree
