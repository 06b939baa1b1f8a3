#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/graph.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

enum class PathAnswer { yes, no, unknown };

enum class PathCertificate {
  component_size_bound,
  exhaustive_dp,
  dfs_depth_witness,
  color_coding_exhausted,
};

struct PathVerdict {
  PathAnswer answer = PathAnswer::unknown;
  std::optional<std::vector<std::uint32_t>> witness;
  std::optional<PathCertificate> certificate;
};

struct DetectionBudget {
  double delta = 0.01;            // false-negative probability target
  std::uint64_t seed = 0;         // color-coding randomness
  std::int64_t max_rounds = 200000;  // hard cap regardless of delta

  void validate() const {
    if (!(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("DetectionBudget: delta in (0,1) required");
  }
};

struct ComponentTooLarge : std::runtime_error {
  explicit ComponentTooLarge(std::size_t size)
      : std::runtime_error("longest_path_exact: component of size " + std::to_string(size) +
                           " exceeds the 24-vertex exact cutoff"),
        component_size(size) {}
  std::size_t component_size;
};

inline bool verify_path_witness(const Graph& g, const std::vector<std::uint32_t>& path,
                                std::size_t k) {
  if (path.size() != k) return false;
  auto sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (auto v : path)
    if (v >= g.n_vertices()) return false;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!g.has_edge(path[i - 1], path[i])) return false;
  return true;
}

namespace detail {

constexpr std::size_t kExactCutoff = 24;

// Longest simple path of one component (<= 24 vertices) by DP over
// (vertex subset, endpoint) states. Returns the path in original labels.
inline std::vector<std::uint32_t> component_longest_path(const Graph& g,
                                                         const std::vector<std::uint32_t>& comp) {
  const std::size_t c = comp.size();
  if (c == 0) return {};
  if (c == 1) return {comp[0]};
  std::vector<std::uint32_t> adj(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (i != j && g.has_edge(comp[i], comp[j])) adj[i] |= 1u << j;

  std::vector<std::uint32_t> dp(std::size_t{1} << c, 0);
  for (std::size_t i = 0; i < c; ++i) dp[std::size_t{1} << i] = 1u << i;
  std::uint32_t best_set = 1, best_end = 0;
  int best_len = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << c); ++s) {
    std::uint32_t ends = dp[s];
    if (!ends) continue;
    int len = std::popcount(s);
    if (len > best_len) {
      best_len = len;
      best_set = s;
      best_end = static_cast<std::uint32_t>(std::countr_zero(ends));
    }
    while (ends) {
      auto e = static_cast<unsigned>(std::countr_zero(ends));
      ends &= ends - 1;
      std::uint32_t ext = adj[e] & ~s;
      while (ext) {
        auto v = static_cast<unsigned>(std::countr_zero(ext));
        ext &= ext - 1;
        dp[s | (1u << v)] |= 1u << v;
      }
    }
  }
  // Walk the DP table backwards from (best_set, best_end).
  std::vector<std::uint32_t> path;
  std::uint32_t s = best_set, e = best_end;
  path.push_back(comp[e]);
  while (std::popcount(s) > 1) {
    std::uint32_t prev_s = s & ~(1u << e);
    std::uint32_t cands = dp[prev_s] & adj[e];
    auto pe = static_cast<std::uint32_t>(std::countr_zero(cands));
    s = prev_s;
    e = pe;
    path.push_back(comp[e]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// DFS whose explicit stack is always a simple path; returns a path of k
// vertices if the stack ever gets that deep.
inline std::optional<std::vector<std::uint32_t>> dfs_depth_witness(const Graph& g, std::size_t k) {
  const std::uint32_t n = g.n_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::size_t> iter;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack = {root};
    iter = {0};
    if (stack.size() >= k) return std::vector<std::uint32_t>(stack.end() - k, stack.end());
    while (!stack.empty()) {
      auto v = stack.back();
      auto nb = g.neighbors(v);
      if (iter.back() < nb.size()) {
        auto u = nb[iter.back()++];
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
          iter.push_back(0);
          if (stack.size() >= k)
            return std::vector<std::uint32_t>(stack.end() - static_cast<std::ptrdiff_t>(k),
                                              stack.end());
        }
      } else {
        stack.pop_back();
        iter.pop_back();
      }
    }
  }
  return std::nullopt;
}

// One round of color coding for a path on k vertices inside one component.
inline std::optional<std::vector<std::uint32_t>> color_coding_round(
    const Graph& g, const std::vector<std::uint32_t>& comp, std::size_t k, std::uint64_t seed) {
  const std::size_t c = comp.size();
  SplitMix64 stream(seed);
  std::vector<std::uint32_t> color(c);
  for (auto& col : color) col = static_cast<std::uint32_t>(stream.next_below(k));
  std::vector<std::uint32_t> local(g.n_vertices(), UINT32_MAX);
  for (std::size_t i = 0; i < c; ++i) local[comp[i]] = static_cast<std::uint32_t>(i);

  const std::size_t nsets = std::size_t{1} << k;
  std::vector<Bitset> dp(nsets, Bitset(c));
  for (std::size_t i = 0; i < c; ++i) dp[std::size_t{1} << color[i]].set(i);
  for (std::uint32_t s = 1; s < nsets; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) >= k) continue;
    dp[s].for_each([&](std::size_t i) {
      for (auto w : g.neighbors(comp[i])) {
        auto j = local[w];
        if (j == UINT32_MAX) continue;
        if (!(s & (1u << color[j]))) dp[s | (1u << color[j])].set(j);
      }
    });
  }
  for (std::uint32_t s = 0; s < nsets; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    std::optional<std::size_t> end;
    dp[s].for_each([&](std::size_t i) {
      if (!end) end = i;
    });
    if (!end) continue;
    // Backtrack one colorful path.
    std::vector<std::uint32_t> path;
    std::uint32_t cur_s = s;
    std::size_t cur = *end;
    path.push_back(comp[cur]);
    while (std::popcount(cur_s) > 1) {
      std::uint32_t prev_s = cur_s & ~(1u << color[cur]);
      std::size_t prev = SIZE_MAX;
      for (auto w : g.neighbors(comp[cur])) {
        auto j = local[w];
        if (j != UINT32_MAX && dp[prev_s].test(j)) {
          prev = j;
          break;
        }
      }
      cur_s = prev_s;
      cur = prev;
      path.push_back(comp[cur]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
  return std::nullopt;
}

}  // namespace detail

// Smallest t with (1 - k!/k^k)^t <= delta; saturates at INT64_MAX.
inline std::int64_t color_coding_rounds(int k, double delta) {
  if (k < 1 || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("color_coding_rounds: k >= 1, delta in (0,1)");
  const double log_q = std::lgamma(static_cast<double>(k) + 1.0) -
                       static_cast<double>(k) * std::log(static_cast<double>(k));
  const double q = std::exp(log_q);  // per-round success probability
  if (q >= 1.0) return 1;
  const double t = std::ceil(std::log(delta) / std::log1p(-q));
  if (!(t < 9.0e18)) return INT64_MAX;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

// Exact maximum number of vertices on a simple path; every component must
// have at most 24 vertices.
inline int longest_path_exact(const Graph& g) {
  int best = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() > detail::kExactCutoff) throw ComponentTooLarge(comp.size());
    best = std::max(best, static_cast<int>(detail::component_longest_path(g, comp).size()));
  }
  return best;
}

// Decision ladder for "does g contain P_k":
//   (a) all components smaller than k          -> no
//   (b) DFS stack reaches depth k              -> yes (the stack is a path)
//   (c) largest component <= 24                -> exact subset DP
//   (d) color coding until the miss probability is below budget.delta,
//       then give up with an explicit unknown.
inline PathVerdict has_path(const Graph& g, int k, DetectionBudget budget = {}) {
  if (k < 1) throw std::invalid_argument("has_path: k >= 1 required");
  budget.validate();
  const auto uk = static_cast<std::size_t>(k);
  auto comps = connected_components(g);
  std::size_t largest = 0;
  for (const auto& c : comps) largest = std::max(largest, c.size());

  if (largest < uk)
    return {PathAnswer::no, std::nullopt, PathCertificate::component_size_bound};

  if (auto w = detail::dfs_depth_witness(g, uk))
    return {PathAnswer::yes, std::move(w), PathCertificate::dfs_depth_witness};

  if (largest <= detail::kExactCutoff) {
    for (const auto& comp : comps) {
      if (comp.size() < uk) continue;
      auto longest = detail::component_longest_path(g, comp);
      if (longest.size() >= uk) {
        longest.resize(uk);
        return {PathAnswer::yes, std::move(longest), PathCertificate::exhaustive_dp};
      }
    }
    return {PathAnswer::no, std::nullopt, PathCertificate::exhaustive_dp};
  }

  const double table_bytes =
      std::pow(2.0, static_cast<double>(uk)) * (static_cast<double>(largest) / 8.0 + 40.0);
  if (uk <= 20 && table_bytes <= 256.0 * 1024 * 1024) {
    std::int64_t rounds = std::min(color_coding_rounds(k, budget.delta), budget.max_rounds);
    for (std::int64_t t = 0; t < rounds; ++t) {
      for (const auto& comp : comps) {
        if (comp.size() < uk) continue;
        auto w = detail::color_coding_round(g, comp, uk,
                                            derive_seed(budget.seed, static_cast<std::uint64_t>(t)));
        if (w && verify_path_witness(g, *w, uk))
          return {PathAnswer::yes, std::move(w), std::nullopt};
      }
    }
  }
  return {PathAnswer::unknown, std::nullopt, PathCertificate::color_coding_exhausted};
}

}  // namespace pathlab
