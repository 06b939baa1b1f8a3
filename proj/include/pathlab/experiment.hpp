#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/bounds.hpp"
#include "pathlab/coloring.hpp"
#include "pathlab/construct.hpp"
#include "pathlab/decomp.hpp"
#include "pathlab/graph.hpp"
#include "pathlab/pathfind.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

enum class ExperimentKind {
  sandwich,
  prop12,
  dense_extract_kind,
  density_threshold,
  coloring_kind,
  oracle_suite,
};

inline const char* kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::sandwich: return "sandwich";
    case ExperimentKind::prop12: return "prop12";
    case ExperimentKind::dense_extract_kind: return "dense-extract";
    case ExperimentKind::density_threshold: return "density-threshold";
    case ExperimentKind::coloring_kind: return "coloring";
    case ExperimentKind::oracle_suite: return "oracle-suite";
  }
  return "?";
}

inline ExperimentKind parse_kind(const std::string& s) {
  if (s == "sandwich") return ExperimentKind::sandwich;
  if (s == "prop12") return ExperimentKind::prop12;
  if (s == "dense-extract") return ExperimentKind::dense_extract_kind;
  if (s == "density-threshold") return ExperimentKind::density_threshold;
  if (s == "coloring") return ExperimentKind::coloring_kind;
  if (s == "oracle-suite") return ExperimentKind::oracle_suite;
  throw std::invalid_argument("unknown experiment kind: " + s);
}

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::sandwich;
  std::uint32_t N = 0;
  int n = 2;
  double p = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
  std::map<std::string, double> overrides;  // alpha, beta, rounds, k, delta, r, pass_threshold

  double override_or(const std::string& key, double fallback) const {
    auto it = overrides.find(key);
    return it == overrides.end() ? fallback : it->second;
  }

  double pass_threshold() const {
    double def = 0.9;
    switch (kind) {
      case ExperimentKind::sandwich: def = 0.99; break;
      case ExperimentKind::prop12: def = 0.95; break;
      case ExperimentKind::oracle_suite: def = 1.0; break;
      default: break;
    }
    return override_or("pass_threshold", def);
  }

  void validate() {
    if (trials < 1) throw std::invalid_argument("ExperimentSpec: trials >= 1 required");
    if (kind == ExperimentKind::oracle_suite) return;  // grid-driven, N/n/p unused
    if (N < 2 || n < 2 || !(p > 0.0 && p <= 1.0))
      throw std::invalid_argument("ExperimentSpec: need N >= 2, n >= 2, p in (0,1]");
    if (kind == ExperimentKind::density_threshold && overrides.count("r") == 0)
      throw std::invalid_argument("ExperimentSpec: density-threshold needs override r");
  }
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  std::vector<double> values;  // parallel to ExperimentResult::columns (after "seed")
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<std::string> columns;  // excludes the leading seed column
  std::vector<ExperimentRow> rows;
  std::string metric;  // column the summary describes
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0, pass_rate = 0.0;
  bool passed = false;
};

namespace detail {

inline void summarize(ExperimentResult& res, const std::string& metric_col,
                      const std::string& pass_col) {
  auto idx_of = [&](const std::string& c) {
    auto it = std::find(res.columns.begin(), res.columns.end(), c);
    if (it == res.columns.end()) throw std::logic_error("summarize: missing column " + c);
    return static_cast<std::size_t>(it - res.columns.begin());
  };
  const auto mi = idx_of(metric_col);
  const auto pi = idx_of(pass_col);
  res.metric = metric_col;
  double sum = 0.0, sum2 = 0.0;
  std::size_t passes = 0;
  res.min = res.rows.front().values[mi];
  res.max = res.min;
  for (const auto& row : res.rows) {
    double x = row.values[mi];
    sum += x;
    sum2 += x * x;
    res.min = std::min(res.min, x);
    res.max = std::max(res.max, x);
    if (row.values[pi] != 0.0) ++passes;
  }
  const auto t = static_cast<double>(res.rows.size());
  res.mean = sum / t;
  res.stddev = t > 1.0 ? std::sqrt(std::max(0.0, (sum2 - sum * sum / t) / (t - 1.0))) : 0.0;
  res.pass_rate = static_cast<double>(passes) / t;
  res.passed = res.pass_rate >= res.spec.pass_threshold();
}

// Exact longest path (vertex count) of a subgraph given as an edge list; each
// component either fits the subset DP or, with e <= 24 edges total, is a tree
// on 25 vertices whose longest path is its diameter.
inline int edge_set_longest_path(std::uint32_t N, const EdgeList& edges) {
  Graph sub(N, edges);
  int best = edges.empty() ? 0 : 1;
  for (const auto& comp : connected_components(sub)) {
    if (comp.size() == 1) continue;
    if (comp.size() <= kExactCutoff) {
      best = std::max(best, static_cast<int>(component_longest_path(sub, comp).size()));
      continue;
    }
    // Tree: two sweeps give the diameter.
    auto far = [&](std::uint32_t s) {
      std::vector<std::pair<std::uint32_t, int>> stack{{s, 1}};
      std::vector<char> seen(N, 0);
      seen[s] = 1;
      std::pair<std::uint32_t, int> best_v{s, 1};
      while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        if (d > best_v.second) best_v = {v, d};
        for (auto u : sub.neighbors(v))
          if (!seen[u]) {
            seen[u] = 1;
            stack.emplace_back(u, d + 1);
          }
      }
      return best_v;
    };
    auto a = far(comp.front());
    best = std::max(best, far(a.first).second);
  }
  return best;
}

}  // namespace detail

// Exact ex(g, P_k) by branch and bound over edge inclusion; feasible only at
// toy scale (at most 24 edges, or at most 10 vertices).
inline std::uint64_t brute_force_ex(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("brute_force_ex: k >= 2 required");
  if (g.edge_count() > 24 && g.n_vertices() > 10)
    throw std::invalid_argument("brute_force_ex: instance too large (need e <= 24 or N <= 10)");
  auto edges = g.edges();
  const std::uint32_t N = g.n_vertices();
  std::uint64_t best = 0;
  EdgeList chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (chosen.size() + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = std::max<std::uint64_t>(best, chosen.size());
      return;
    }
    chosen.push_back(edges[i]);
    if (detail::edge_set_longest_path(N, chosen) < k) self(self, i + 1);
    chosen.pop_back();
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

namespace detail {

inline ExperimentResult run_sandwich(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"witness_edges", "certified_upper", "band_lo", "band_hi", "in_band"};
  auto rep = regime_classify(spec.N, spec.n, spec.p);
  const double alpha = spec.override_or("alpha", 0.5);
  const int rounds = static_cast<int>(spec.override_or("rounds", -1.0));
  double beta = spec.override_or("beta", 0.0);
  if (beta <= 0.0 && (rep.regime == Regime::t13_ii || rep.regime == Regime::t14_i ||
                      rep.regime == Regime::t14_ii)) {
    auto w = beta_window(spec.N, spec.n, spec.p, alpha);
    if (w.feasible) {
      beta = w.beta_mid();
    } else {
      const double ratio = std::log(static_cast<double>(spec.N) / spec.n) / (spec.n * spec.p);
      beta = ratio > std::exp(1.0) ? ratio / std::log(ratio) : 2.0;
    }
  }
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    auto g = gnp_generate({spec.N, spec.p, trial_seed});
    std::uint64_t witness = 0;
    switch (rep.regime) {
      case Regime::subcritical:
        witness = isolated_edge_construct(g).edge_count;
        break;
      case Regime::t13_i:
        witness = blocks_construct(g, spec.n, trial_seed).edge_count;
        break;
      case Regime::t13_ii:
      case Regime::t14_i:
      case Regime::t14_ii: {
        DenseExtractionParams params;
        params.alpha = alpha;
        params.beta = beta;
        params.n = spec.n;
        witness = repeated_dense_construct(g, spec.n, params, rounds, trial_seed).edge_count;
        break;
      }
      case Regime::out_of_scope:
        throw std::invalid_argument("sandwich: parameters fall outside every theorem regime");
    }
    const auto upper = certified_upper_bound(g, spec.n);
    const double in_band = static_cast<double>(witness) >= rep.lower_bound ? 1.0 : 0.0;
    res.rows.push_back({trial_seed,
                        {static_cast<double>(witness), static_cast<double>(upper), rep.lower_bound,
                         rep.upper_bound, in_band}});
  }
  summarize(res, "witness_edges", "in_band");
  return res;
}

inline ExperimentResult run_prop12(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"isolated_edges", "expected", "floor_n15", "pass"};
  const double expected = expected_isolated_edges(spec.N, spec.p);
  const double floor15 = static_cast<double>(spec.N) / 15.0;
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    auto g = gnp_generate({spec.N, spec.p, trial_seed});
    const auto iso = static_cast<double>(isolated_edge_count(g));
    res.rows.push_back({trial_seed, {iso, expected, floor15, iso >= floor15 ? 1.0 : 0.0}});
  }
  summarize(res, "isolated_edges", "pass");
  return res;
}

inline ExperimentResult run_dense_extract(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"internal_edges", "guarantee", "ok"};
  DenseExtractionParams params;
  params.alpha = spec.override_or("alpha", 0.5);
  params.n = spec.n;
  params.beta = spec.override_or("beta", 0.0);
  if (params.beta <= 0.0) {
    auto w = beta_window(spec.N, spec.n, spec.p, params.alpha);
    if (!w.feasible) throw std::invalid_argument("dense-extract: beta window infeasible; pass beta");
    params.beta = w.beta_mid();
  }
  const double guarantee = (1.0 - params.alpha) / 2.0 * params.beta * spec.p * spec.n * spec.n;
  std::vector<std::uint32_t> all(spec.N);
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    auto g = gnp_generate({spec.N, spec.p, trial_seed});
    auto out = dense_extract(g, all, params, trial_seed);
    const double e_a = out.ok() ? static_cast<double>(out.result->internal_edges) : 0.0;
    res.rows.push_back(
        {trial_seed, {e_a, guarantee, out.ok() && e_a >= guarantee ? 1.0 : 0.0}});
  }
  summarize(res, "internal_edges", "ok");
  return res;
}

inline ExperimentResult run_density_threshold(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"subgraph_edges", "threshold", "pass"};
  const double r = spec.overrides.at("r");
  DenseExtractionParams params;
  params.alpha = spec.override_or("alpha", 0.5);
  params.n = spec.n;
  params.beta = spec.override_or("beta", 0.0);
  if (params.beta <= 0.0) {
    // 2 beta log beta = (1/np) log(3N / 8n): the largest beta whose survivor
    // guarantee still exceeds the next part size at this scale.
    const double target = std::log(3.0 * spec.N / (8.0 * spec.n)) / (spec.n * spec.p);
    params.beta = beta_solve(std::max(target, 0.0));
  }
  const int rounds = static_cast<int>(
      spec.override_or("rounds", static_cast<double>(spec.N / static_cast<std::uint32_t>(spec.n))));
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    auto g = gnp_generate({spec.N, spec.p, trial_seed});
    auto built = repeated_dense_construct(g, spec.n, params, rounds, trial_seed);
    const double threshold = static_cast<double>(g.edge_count()) / r;
    const auto e_h = static_cast<double>(built.edge_count);
    res.rows.push_back({trial_seed, {e_h, threshold, e_h > threshold ? 1.0 : 0.0}});
  }
  summarize(res, "subgraph_edges", "pass");
  return res;
}

inline ExperimentResult run_coloring(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"largest_component", "k", "pass"};
  const int k = static_cast<int>(spec.override_or("k", std::round(2.0 * spec.p * spec.N)));
  if (k < 1) throw std::invalid_argument("coloring: k >= 1 required");
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    auto g = gnp_generate({spec.N, spec.p, trial_seed});
    auto c = random_coloring(g, k, derive_seed(trial_seed, 1));
    std::vector<EdgeList> classes(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.edges.size(); ++i)
      classes[static_cast<std::size_t>(c.color[i] - 1)].push_back(c.edges[i]);
    std::size_t largest = 0;
    for (const auto& cls : classes) {
      Graph sub(spec.N, cls);
      for (const auto& comp : connected_components(sub))
        if (comp.size() > 1) largest = std::max(largest, comp.size());
    }
    res.rows.push_back({trial_seed,
                        {static_cast<double>(largest), static_cast<double>(k),
                         largest <= static_cast<std::size_t>(spec.n) ? 1.0 : 0.0}});
  }
  summarize(res, "largest_component", "pass");
  return res;
}

inline ExperimentResult run_oracle_suite(const ExperimentSpec& spec) {
  ExperimentResult res;
  res.spec = spec;
  res.columns = {"N", "k", "brute", "formula", "match"};
  for (std::uint32_t N = 2; N <= 8; ++N) {
    for (int k = 3; k <= 5; ++k) {
      if (N % static_cast<std::uint32_t>(k - 1) != 0) continue;
      EdgeList edges;
      for (std::uint32_t v = 1; v < N; ++v)
        for (std::uint32_t u = 0; u < v; ++u) edges.emplace_back(u, v);
      Graph complete(N, std::move(edges));
      const auto brute = static_cast<double>(brute_force_ex(complete, k));
      const double formula = erdos_gallai_max(N, k);
      res.rows.push_back({static_cast<std::uint64_t>(N) * 100 + static_cast<std::uint64_t>(k),
                          {static_cast<double>(N), static_cast<double>(k), brute, formula,
                           brute == formula ? 1.0 : 0.0}});
    }
  }
  res.spec.trials = static_cast<int>(res.rows.size());
  summarize(res, "brute", "match");
  return res;
}

}  // namespace detail

inline ExperimentResult run_experiment(ExperimentSpec spec) {
  spec.validate();
  switch (spec.kind) {
    case ExperimentKind::sandwich: return detail::run_sandwich(spec);
    case ExperimentKind::prop12: return detail::run_prop12(spec);
    case ExperimentKind::dense_extract_kind: return detail::run_dense_extract(spec);
    case ExperimentKind::density_threshold: return detail::run_density_threshold(spec);
    case ExperimentKind::coloring_kind: return detail::run_coloring(spec);
    case ExperimentKind::oracle_suite: return detail::run_oracle_suite(spec);
  }
  throw std::logic_error("run_experiment: unreachable");
}

namespace detail {

inline std::string fmt(double x) {
  if (x == std::floor(x) && std::fabs(x) < 1e15) {
    std::ostringstream os;
    os << static_cast<long long>(x);
    return os.str();
  }
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace detail

inline void write_report_csv(std::ostream& os, const ExperimentResult& res) {
  os << "seed";
  for (const auto& c : res.columns) os << ',' << c;
  os << '\n';
  for (const auto& row : res.rows) {
    os << row.seed;
    for (auto v : row.values) os << ',' << detail::fmt(v);
    os << '\n';
  }
}

inline void write_report_summary(std::ostream& os, const ExperimentResult& res) {
  os << "kind=" << kind_name(res.spec.kind) << '\n'
     << "N=" << res.spec.N << '\n'
     << "n=" << res.spec.n << '\n'
     << "p=" << detail::fmt(res.spec.p) << '\n'
     << "trials=" << res.spec.trials << '\n'
     << "seed=" << res.spec.seed << '\n'
     << "metric=" << res.metric << '\n'
     << "mean=" << detail::fmt(res.mean) << '\n'
     << "stddev=" << detail::fmt(res.stddev) << '\n'
     << "min=" << detail::fmt(res.min) << '\n'
     << "max=" << detail::fmt(res.max) << '\n'
     << "pass_rate=" << detail::fmt(res.pass_rate) << '\n'
     << "pass_threshold=" << detail::fmt(res.spec.pass_threshold()) << '\n'
     << "passed=" << (res.passed ? 1 : 0) << '\n';
}

// Long format for plotting: one row per (trial, column) pair.
inline void write_report_plot(std::ostream& os, const ExperimentResult& res) {
  os << "trial,seed,series,value\n";
  for (std::size_t t = 0; t < res.rows.size(); ++t)
    for (std::size_t c = 0; c < res.columns.size(); ++c)
      os << t << ',' << res.rows[t].seed << ',' << res.columns[c] << ','
         << detail::fmt(res.rows[t].values[c]) << '\n';
}

// Writes <path>, <path>.summary.txt and <path>.plot.csv.
inline void emit_report(const ExperimentResult& res, const std::string& path) {
  auto open = [](const std::string& p) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("emit_report: cannot write " + p);
    return f;
  };
  auto csv = open(path);
  write_report_csv(csv, res);
  auto summary = open(path + ".summary.txt");
  write_report_summary(summary, res);
  auto plot = open(path + ".plot.csv");
  write_report_plot(plot, res);
}

}  // namespace pathlab
