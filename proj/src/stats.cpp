#include "sgtree/stats.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "sgtree/errors.hpp"

namespace sgtree {

namespace {

// Inclusive integer range equivalent to a strict real interval (lo, hi).
struct IntWindow {
  long long lo = 0;
  long long hi = -1;

  bool contains(long long v) const { return lo <= v && v <= hi; }
};

IntWindow strict_window(const Quad& lo, const Quad& hi) {
  // v > lo iff v >= floor(lo)+1; v < hi iff v <= ceil(hi)-1; both hold for
  // integer endpoints too, since the interval is open.
  return {lo.floor() + 1, -(-hi).floor() - 1};
}

// Integer windows making per-node membership tests pure integer compares.
struct GenusWindows {
  IntWindow am;                 // multiplicity window of A_g^m
  IntWindow bm;                 // multiplicity window of B_g
  IntWindow bf;                 // Frobenius window of B_g
  std::vector<IntWindow> af;    // Frobenius window of A_g^F, indexed by m
};

GenusWindows make_windows(int g, const EpsilonParams& p) {
  const Quad gamma = gamma_value();
  const Quad gq{Rational(g)};
  GenusWindows w;
  w.am = strict_window((gamma - p.epsilon1) * gq, (gamma + p.epsilon1) * gq);
  w.bm = strict_window((gamma - p.epsilon) * gq, (gamma + p.epsilon) * gq);
  w.bf = strict_window((Quad(2) - p.epsilon) * gamma * gq,
                       (Quad(2) + p.epsilon) * gamma * gq);
  w.af.resize(static_cast<std::size_t>(g) + 2);
  for (int m = 1; m <= g + 1; ++m) {
    const Quad mq{Rational(m)};
    w.af[static_cast<std::size_t>(m)] =
        strict_window((Quad(2) - p.epsilon2) * mq, (Quad(2) + p.epsilon2) * mq);
  }
  return w;
}

ClassFlags classify_node(const NodeView& view, const GenusWindows& w) {
  ClassFlags f;
  const int m = view.multiplicity();
  const int frob = view.frobenius();
  f.in_Am = w.am.contains(m);
  f.in_AF = m < static_cast<int>(w.af.size()) &&
            w.af[static_cast<std::size_t>(m)].contains(frob);
  f.in_AmF = f.in_Am && f.in_AF;
  f.in_B = w.bm.contains(m) && w.bf.contains(frob);
  f.not_infinite = view.gcd_left() == 1;
  return f;
}

void add_flags(GenusStats& s, const ClassFlags& f) {
  ++s.n_g;
  s.count_Am += f.in_Am;
  s.count_AF += f.in_AF;
  s.count_AmF += f.in_AmF;
  s.count_B += f.in_B;
  s.count_not_infinite += f.not_infinite;
  s.count_infinite += !f.not_infinite;
}

void merge(GenusStats& into, const GenusStats& from) {
  into.n_g += from.n_g;
  into.count_Am += from.count_Am;
  into.count_AF += from.count_AF;
  into.count_AmF += from.count_AmF;
  into.count_B += from.count_B;
  into.count_not_infinite += from.count_not_infinite;
  into.count_infinite += from.count_infinite;
}

}  // namespace

Quad epsilon_max(int g) {
  if (g < 6) throw GenusTooSmallError(g);
  const Quad gamma = gamma_value();
  const Quad three_gamma = Quad(3) * gamma;
  return (three_gamma - Quad(2) - Quad(Rational(1, g))) /
         (Quad(1) + three_gamma);
}

EpsilonParams EpsilonParams::from_epsilon(const Quad& eps) {
  if (eps.sign() <= 0) throw Error("epsilon must be positive");
  EpsilonParams p;
  p.epsilon = eps;
  p.epsilon1 = gamma_value() * eps / (Quad(4) + eps);
  p.epsilon2 = eps / Quad(2);
  return p;
}

EpsilonParams EpsilonParams::with_values(Quad eps, Quad eps1, Quad eps2) {
  if (eps.sign() <= 0 || eps1.sign() <= 0 || eps2.sign() <= 0)
    throw Error("epsilon values must be positive");
  return {std::move(eps), std::move(eps1), std::move(eps2)};
}

ClassFlags classify(const Semigroup& s, int g, const EpsilonParams& p) {
  if (s.genus() != g) throw GenusMismatchError(g, s.genus());
  const Quad gamma = gamma_value();
  const Quad gq{Rational(g)};
  const Quad m{Rational(s.multiplicity())};
  const Quad frob{Rational(s.frobenius())};

  ClassFlags f;
  f.in_Am = (gamma - p.epsilon1) * gq < m && m < (gamma + p.epsilon1) * gq;
  f.in_AF = (Quad(2) - p.epsilon2) * m < frob &&
            frob < (Quad(2) + p.epsilon2) * m;
  f.in_AmF = f.in_Am && f.in_AF;
  f.in_B = (gamma - p.epsilon) * gq < m && m < (gamma + p.epsilon) * gq &&
           (Quad(2) - p.epsilon) * gamma * gq < frob &&
           frob < (Quad(2) + p.epsilon) * gamma * gq;
  f.not_infinite = s.gcd_left() == 1;
  return f;
}

std::string GenusStats::ratio(long long count, int digits) const {
  if (n_g == 0) return to_decimal(Rational(0), digits);
  return to_decimal(Rational(count, n_g), digits);
}

std::vector<GenusStats> stats_table(int max_genus, const EpsilonParams& p,
                                    const EnumerateOptions& opts) {
  if (max_genus < 0) throw Error("max_genus must be >= 0");

  std::vector<GenusWindows> windows;
  windows.reserve(static_cast<std::size_t>(max_genus) + 1);
  for (int g = 0; g <= max_genus; ++g) windows.push_back(make_windows(g, p));

  const std::size_t slots = static_cast<std::size_t>(
      opts.workers < 1 ? 1 : opts.workers);
  std::vector<std::vector<GenusStats>> partials(
      slots, std::vector<GenusStats>(static_cast<std::size_t>(max_genus) + 1));

  enumerate_partitioned(
      max_genus,
      [&](int worker) -> NodeVisitor {
        auto& mine = partials[static_cast<std::size_t>(worker)];
        return [&mine, &windows](const NodeView& view, int depth) {
          add_flags(mine[static_cast<std::size_t>(depth)],
                    classify_node(view, windows[static_cast<std::size_t>(depth)]));
        };
      },
      opts);

  std::vector<GenusStats> rows(static_cast<std::size_t>(max_genus) + 1);
  for (int g = 0; g <= max_genus; ++g) {
    rows[static_cast<std::size_t>(g)].g = g;
    for (const auto& part : partials)
      merge(rows[static_cast<std::size_t>(g)],
            part[static_cast<std::size_t>(g)]);
  }
  return rows;
}

GenusStats classify_genus(int g, const EpsilonParams& p,
                          const EnumerateOptions& opts) {
  if (g < 0) throw Error("genus must be >= 0");

  const GenusWindows windows = make_windows(g, p);
  const std::size_t slots = static_cast<std::size_t>(
      opts.workers < 1 ? 1 : opts.workers);
  std::vector<GenusStats> partials(slots);

  enumerate_partitioned(
      g,
      [&](int worker) -> NodeVisitor {
        auto& mine = partials[static_cast<std::size_t>(worker)];
        return [&mine, &windows, g](const NodeView& view, int depth) {
          if (depth == g) add_flags(mine, classify_node(view, windows));
        };
      },
      opts);

  GenusStats out;
  out.g = g;
  for (const auto& part : partials) merge(out, part);
  return out;
}

InclusionReport verify_inclusions(int g, const Quad& epsilon,
                                  bool allow_out_of_range,
                                  const EnumerateOptions& opts) {
  const Quad bound = epsilon_max(g);  // also rejects g < 6
  if (epsilon.sign() <= 0) throw Error("epsilon must be positive");
  if (epsilon > bound && !allow_out_of_range) throw EpsilonOutOfRangeError(g);

  const EpsilonParams p = EpsilonParams::from_epsilon(epsilon);
  const GenusWindows windows = make_windows(g, p);

  const std::size_t slots = static_cast<std::size_t>(
      opts.workers < 1 ? 1 : opts.workers);
  std::vector<InclusionReport> partials(slots);

  enumerate_partitioned(
      g,
      [&](int worker) -> NodeVisitor {
        auto& mine = partials[static_cast<std::size_t>(worker)];
        return [&mine, &windows, g](const NodeView& view, int depth) {
          if (depth != g) return;
          const ClassFlags f = classify_node(view, windows);
          add_flags(mine.stats, f);
          if (f.in_AmF && !f.in_B)
            mine.violations_AmF_in_B.push_back(view.gap_string());
          if (f.in_B && !view.has_consecutive_left_elements())
            mine.violations_B_consecutive.push_back(view.gap_string());
          if (f.in_B && !f.not_infinite)
            mine.violations_B_in_notinf.push_back(view.gap_string());
        };
      },
      opts);

  InclusionReport out;
  out.g = g;
  out.stats.g = g;
  for (auto& part : partials) {
    merge(out.stats, part.stats);
    auto take = [](std::vector<std::string>& dst, std::vector<std::string>& src) {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                 std::make_move_iterator(src.end()));
    };
    take(out.violations_AmF_in_B, part.violations_AmF_in_B);
    take(out.violations_B_consecutive, part.violations_B_consecutive);
    take(out.violations_B_in_notinf, part.violations_B_in_notinf);
  }
  return out;
}

std::string stats_csv(const std::vector<GenusStats>& rows) {
  std::ostringstream out;
  out << "genus,n_g,count_Am,count_AF,count_AmF,count_B,count_not_infinite,"
         "count_infinite\n";
  for (const auto& r : rows) {
    out << r.g << ',' << r.n_g << ',' << r.count_Am << ',' << r.count_AF
        << ',' << r.count_AmF << ',' << r.count_B << ','
        << r.count_not_infinite << ',' << r.count_infinite << '\n';
  }
  return out.str();
}

std::string stats_json(const std::vector<GenusStats>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"genus", r.g},
                   {"n_g", r.n_g},
                   {"count_Am", r.count_Am},
                   {"count_AF", r.count_AF},
                   {"count_AmF", r.count_AmF},
                   {"count_B", r.count_B},
                   {"count_not_infinite", r.count_not_infinite},
                   {"count_infinite", r.count_infinite}});
  }
  return arr.dump(2) + "\n";
}

std::vector<TrendRow> ratio_trend(int max_genus, const EpsilonParams& p,
                                  const EnumerateOptions& opts) {
  if (max_genus < 1) throw Error("max_genus must be >= 1");
  const std::vector<GenusStats> rows = stats_table(max_genus, p, opts);
  std::vector<TrendRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back({r.g, r.n_g, r.count_not_infinite, r.count_Am, r.count_AF});
  return out;
}

std::string trend_table(const std::vector<TrendRow>& rows) {
  std::ostringstream out;
  out << "g n_g ratio_not_infinite ratio_Am ratio_AF\n";
  for (const auto& r : rows) {
    auto ratio = [&](long long c) {
      return to_decimal(r.n_g ? Rational(c, r.n_g) : Rational(0), 6);
    };
    out << r.g << ' ' << r.n_g << ' ' << ratio(r.count_not_infinite) << ' '
        << ratio(r.count_Am) << ' ' << ratio(r.count_AF) << '\n';
  }
  return out.str();
}

}  // namespace sgtree
