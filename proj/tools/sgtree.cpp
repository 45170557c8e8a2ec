#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "sgtree/errors.hpp"
#include "sgtree/exact.hpp"
#include "sgtree/semigroup.hpp"
#include "sgtree/stats.hpp"
#include "sgtree/tree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::string path;  // empty: stdout

  int write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file: " << path << "\n";
      return kExitUsage;
    }
    file << text;
    return kExitOk;
  }
};

// Global node-budget guard; 0 = unlimited. Malformed values are a usage
// error so misconfigured CI jobs fail loudly.
long long max_nodes_from_env() {
  const char* raw = std::getenv("SGTREE_MAX_NODES");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0)
    throw sgtree::Error(std::string("invalid SGTREE_MAX_NODES: ") + raw);
  return value;
}

sgtree::EnumerateOptions make_options(int workers,
                                      sgtree::ChildStrategy strategy) {
  sgtree::EnumerateOptions opts;
  opts.workers = workers;
  opts.strategy = strategy;
  opts.node_budget = max_nodes_from_env();
  return opts;
}

int cmd_count(int max_genus, int workers, sgtree::ChildStrategy strategy,
              const std::string& format, const OutputTarget& out) {
  const auto counts = sgtree::count_by_genus(
      max_genus, make_options(workers, strategy));
  std::ostringstream text;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < counts.size(); ++g)
      arr.push_back({{"genus", g}, {"n_g", counts[g]}});
    text << arr.dump(2) << "\n";
  } else {
    if (format == "csv") text << "g,n_g\n";
    for (std::size_t g = 0; g < counts.size(); ++g)
      text << g << ',' << counts[g] << '\n';
  }
  return out.write(text.str());
}

int cmd_stats(int max_genus, const std::string& epsilon_text, int workers,
              const std::string& format, const OutputTarget& out) {
  sgtree::Rational eps = sgtree::parse_rational(epsilon_text);
  if (eps <= 0) throw sgtree::Error("epsilon must be positive");
  const auto params = sgtree::EpsilonParams::from_epsilon(
      sgtree::Quad(eps));
  const auto rows = sgtree::stats_table(
      max_genus, params, make_options(workers, sgtree::ChildStrategy::incremental));
  return out.write(format == "json" ? sgtree::stats_json(rows)
                                    : sgtree::stats_csv(rows));
}

int cmd_verify(int max_genus, int workers, const OutputTarget& out) {
  const auto opts = make_options(workers, sgtree::ChildStrategy::incremental);
  std::ostringstream text;
  bool all_pass = true;

  for (int g = 6; g <= max_genus; ++g) {
    const sgtree::Quad bound = sgtree::epsilon_max(g);
    const std::pair<const char*, sgtree::Quad> sweeps[] = {
        {"epsilon_max", bound}, {"epsilon_max/2", bound / sgtree::Quad(2)}};
    for (const auto& [name, eps] : sweeps) {
      const auto report = sgtree::verify_inclusions(g, eps, false, opts);
      if (report.ok()) {
        text << "PASS inclusions g=" << g << " epsilon=" << name << "\n";
        continue;
      }
      all_pass = false;
      text << "FAIL inclusions g=" << g << " epsilon=" << name << "\n";
      for (const auto& s : report.violations_AmF_in_B)
        text << "  AmF-not-in-B " << s << "\n";
      for (const auto& s : report.violations_B_consecutive)
        text << "  B-not-consecutive " << s << "\n";
      for (const auto& s : report.violations_B_in_notinf)
        text << "  B-on-infinite-chain " << s << "\n";
    }
  }

  // Test builds can negate the classifier to prove the harness detects
  // counterexamples. The negated run probes genuinely infinite subtrees, so
  // it gets a small budget; the real run only ever walks finite ones.
  const bool negate = std::getenv("SGTREE_SELFTEST_NEGATE_CLASSIFIER") != nullptr;
  std::function<bool(const sgtree::NodeView&)> classifier;
  if (negate)
    classifier = [](const sgtree::NodeView& v) { return !v.in_infinite_chain(); };

  const int chain_genus = std::min(max_genus, 12);
  const auto chain = sgtree::verify_chain_consistency(
      chain_genus, negate ? 2'000 : 10'000'000, classifier);
  if (chain.ok()) {
    text << "PASS chain-consistency max-genus=" << chain_genus
         << " nodes=" << chain.nodes_checked << "\n";
  } else {
    all_pass = false;
    text << "FAIL chain-consistency max-genus=" << chain_genus << "\n";
    for (const auto& s : chain.missing_infinite_child)
      text << "  no-infinite-child " << s << "\n";
    for (const auto& s : chain.unbounded_finite_subtree)
      text << "  subtree-not-finite " << s << "\n";
  }

  const int write_rc = out.write(text.str());
  if (write_rc != kExitOk) return write_rc;
  return all_pass ? kExitOk : kExitViolation;
}

int cmd_list(int genus, const std::string& format, const OutputTarget& out) {
  std::ostringstream text;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  sgtree::EnumerateOptions opts;
  opts.node_budget = max_nodes_from_env();
  sgtree::enumerate(
      genus,
      [&](const sgtree::NodeView& view, int depth) {
        if (depth != genus) return;
        const int gcd = view.gcd_left();
        const bool infinite = gcd != 1;
        if (format == "json") {
          arr.push_back({{"gaps", view.gap_string()},
                         {"multiplicity", view.multiplicity()},
                         {"frobenius", view.frobenius()},
                         {"gcd_left", gcd},
                         {"infinite", infinite}});
        } else {
          text << view.gap_string() << ';' << view.multiplicity() << ';'
               << view.frobenius() << ';' << gcd << ';'
               << (infinite ? "infinite" : "finite") << '\n';
        }
      },
      opts);
  if (format == "json") text << arr.dump(2) << "\n";
  return out.write(text.str());
}

void draw_subtree(const sgtree::Semigroup& node, int max_genus, bool highlight,
                  std::ostringstream& text) {
  text << "  \"" << node.gap_string() << "\" [label=\"<";
  const auto gens = node.min_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) text << ',';
    text << gens[i];
  }
  text << ">\"];\n";
  if (node.genus() >= max_genus) return;
  for (const auto& [removed, child] : sgtree::children(node)) {
    text << "  \"" << node.gap_string() << "\" -> \"" << child.gap_string()
         << "\"";
    if (highlight && child.in_infinite_chain())
      text << " [class=\"infinite\",color=\"crimson\",penwidth=2.0]";
    text << ";\n";
    draw_subtree(child, max_genus, highlight, text);
  }
}

int cmd_draw(int max_genus, bool highlight, bool force,
             const std::string& format, const OutputTarget& out) {
  if (max_genus > 14 && !force) {
    std::cerr << "error: draw beyond genus 14 produces an unreadable graph; "
                 "pass --force to override\n";
    return kExitUsage;
  }
  if (format == "json") {
    // Edge list; same traversal order as the DOT body.
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::function<void(const sgtree::Semigroup&)> walk =
        [&](const sgtree::Semigroup& node) {
          if (node.genus() >= max_genus) return;
          for (const auto& [removed, child] : sgtree::children(node)) {
            arr.push_back({{"parent_id", node.gap_string()},
                           {"child_id", child.gap_string()},
                           {"removed_generator", removed},
                           {"highlighted",
                            highlight && child.in_infinite_chain()}});
            walk(child);
          }
        };
    walk(sgtree::Semigroup::trivial());
    return out.write(arr.dump(2) + "\n");
  }
  std::ostringstream text;
  text << "digraph semigroup_tree {\n  node [shape=box];\n";
  draw_subtree(sgtree::Semigroup::trivial(), max_genus, highlight, text);
  text << "}\n";
  return out.write(text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup tree: enumeration, chain statistics, "
               "verification sweeps"};
  app.require_subcommand(1);

  const std::map<std::string, sgtree::ChildStrategy> strategies{
      {"recompute", sgtree::ChildStrategy::recompute},
      {"incremental", sgtree::ChildStrategy::incremental}};

  int max_genus = 0;
  int genus = 0;
  int workers = 1;
  std::string epsilon = "1/10";
  std::string format;
  std::string output_path;
  bool no_highlight = false;
  bool force = false;
  sgtree::ChildStrategy strategy = sgtree::ChildStrategy::incremental;

  auto* count = app.add_subcommand("count", "print n_g for g = 0..max-genus");
  count->add_option("--max-genus", max_genus, "deepest genus to enumerate")
      ->required()
      ->check(CLI::Range(0, 64));
  count->add_option("--workers", workers)->check(CLI::Range(1, 512));
  count->add_option("--strategy", strategy, "child generator strategy")
      ->transform(CLI::CheckedTransformer(strategies));
  count->add_option("--format", format)
      ->check(CLI::IsMember({"text", "csv", "json"}));
  count->add_option("--output", output_path, "write to file instead of stdout");

  auto* stats = app.add_subcommand(
      "stats", "per-genus set membership counts (CSV or JSON)");
  stats->add_option("--max-genus", max_genus)->required()->check(CLI::Range(0, 64));
  stats->add_option("--epsilon", epsilon, "window parameter, rational p/q");
  stats->add_option("--workers", workers)->check(CLI::Range(1, 512));
  stats->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  stats->add_option("--output", output_path);

  auto* verify = app.add_subcommand(
      "verify", "inclusion sweeps and chain-consistency checks");
  verify->add_option("--max-genus", max_genus)->required()->check(CLI::Range(6, 64));
  verify->add_option("--workers", workers)->check(CLI::Range(1, 512));
  verify->add_option("--output", output_path);

  auto* list = app.add_subcommand("list", "all semigroups of one genus");
  list->add_option("--genus", genus)->required()->check(CLI::Range(0, 64));
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  list->add_option("--output", output_path);

  auto* draw = app.add_subcommand("draw", "DOT graph of the tree");
  draw->add_option("--max-genus", max_genus)->required()->check(CLI::Range(0, 64));
  draw->add_flag("--no-highlight", no_highlight,
                 "do not mark infinite-chain edges");
  draw->add_flag("--force", force, "allow max-genus beyond 14");
  draw->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  draw->add_option("--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const OutputTarget out{output_path};
  try {
    if (count->parsed())
      return cmd_count(max_genus, workers, strategy, format, out);
    if (stats->parsed())
      return cmd_stats(max_genus, epsilon, workers, format, out);
    if (verify->parsed()) return cmd_verify(max_genus, workers, out);
    if (list->parsed()) return cmd_list(genus, format, out);
    if (draw->parsed())
      return cmd_draw(max_genus, !no_highlight, force,
                      format.empty() ? "dot" : format, out);
  } catch (const sgtree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
