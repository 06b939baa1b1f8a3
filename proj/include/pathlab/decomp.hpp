#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/bitset.hpp"
#include "pathlab/graph.hpp"

namespace pathlab {

struct DecompositionGroup {
  std::vector<std::uint32_t> S;
  std::vector<std::uint32_t> T;  // snapshot of the DFS stack, |T| <= n
  EdgeList F;
};

struct Decomposition {
  int n = 0;
  std::vector<DecompositionGroup> groups;
};

// Thrown when the DFS stack reaches n+1 vertices: the stack itself is a
// path on n+1 vertices, refuting the P_{n+1}-freeness precondition.
struct StackOverflowWitness : std::runtime_error {
  explicit StackOverflowWitness(std::vector<std::uint32_t> p)
      : std::runtime_error("dfs_decompose: DFS stack exhibits a path on " +
                           std::to_string(p.size()) + " vertices"),
        path(std::move(p)) {}
  std::vector<std::uint32_t> path;
};

// Edge decomposition of a P_{n+1}-free graph into ceil(N/n) groups
// F_i = E(S_i) u E(S_i, T_i). Vertices are cut into groups of n by DFS
// discovery time (roots and neighbors in ascending order), T_i is the stack
// at the instant the first vertex of S_i is pushed, and every edge is
// charged to its later-discovered endpoint. Since stack membership is a
// time interval, the earlier endpoint is on the stack at the snapshot, so
// it lands in S_i u T_i.
inline Decomposition dfs_decompose(const Graph& h, int n) {
  if (n < 1) throw std::invalid_argument("dfs_decompose: n >= 1 required");
  const std::uint32_t N = h.n_vertices();
  const auto un = static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> disc(N, UINT32_MAX);
  std::uint32_t next_disc = 0;

  Decomposition d;
  d.n = n;
  d.groups.resize((N + un - 1) / un);

  std::vector<std::uint32_t> stack;
  std::vector<std::size_t> iter;
  auto push = [&](std::uint32_t v) {
    if (stack.size() == un) {
      auto witness = stack;
      witness.push_back(v);
      throw StackOverflowWitness(std::move(witness));
    }
    if (next_disc % un == 0) d.groups[next_disc / un].T = stack;
    disc[v] = next_disc++;
    d.groups[disc[v] / un].S.push_back(v);
    stack.push_back(v);
    iter.push_back(0);
  };

  for (std::uint32_t root = 0; root < N; ++root) {
    if (disc[root] != UINT32_MAX) continue;
    push(root);
    while (!stack.empty()) {
      auto v = stack.back();
      auto nb = h.neighbors(v);
      if (iter.back() < nb.size()) {
        auto u = nb[iter.back()++];
        if (disc[u] == UINT32_MAX) push(u);
      } else {
        stack.pop_back();
        iter.pop_back();
      }
    }
  }
  for (std::uint32_t v = 0; v < N; ++v)
    for (auto u : h.neighbors(v))
      if (disc[u] < disc[v]) {
        auto& F = d.groups[disc[v] / un].F;
        F.emplace_back(std::min(u, v), std::max(u, v));
      }
  return d;
}

inline bool decomposition_verify(const Decomposition& d, const Graph& h) {
  if (d.n < 1) return false;
  const std::uint32_t N = h.n_vertices();
  const auto un = static_cast<std::uint32_t>(d.n);
  if (d.groups.size() != (N + un - 1) / un) return false;
  Bitset covered(N);
  std::uint64_t vertex_total = 0;
  EdgeList all_edges;
  for (const auto& g : d.groups) {
    if (g.S.size() > un || g.T.size() > un) return false;
    Bitset in_s(N), in_t(N);
    for (auto v : g.S) {
      if (v >= N || covered.test(v)) return false;  // S sets pairwise disjoint
      covered.set(v);
      in_s.set(v);
      ++vertex_total;
    }
    for (auto v : g.T) {
      if (v >= N || in_s.test(v)) return false;  // T disjoint from S
      in_t.set(v);
    }
    for (auto [u, v] : g.F) {
      if (!h.has_edge(u, v)) return false;
      const bool u_in = in_s.test(u), v_in = in_s.test(v);
      if (!u_in && !v_in) return false;
      const auto other = u_in ? v : u;
      if (!in_s.test(other) && !in_t.test(other)) return false;
      all_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  if (vertex_total != N) return false;
  if (all_edges.size() != h.edge_count()) return false;
  std::sort(all_edges.begin(), all_edges.end());
  if (std::adjacent_find(all_edges.begin(), all_edges.end()) != all_edges.end()) return false;
  return true;  // distinct edges of h totalling e(h): exact partition
}

// Deterministic upper bound on ex(g, P_{n+1}): any P_{n+1}-free subgraph
// decomposes into ceil(N/n) groups, and each group's edge budget is at most
// the sum of the n largest degrees of g.
inline std::uint64_t certified_upper_bound(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("certified_upper_bound: n >= 1 required");
  const std::uint32_t N = g.n_vertices();
  if (N == 0) return 0;
  std::vector<std::uint32_t> degs(N);
  for (std::uint32_t v = 0; v < N; ++v) degs[v] = g.degree(v);
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(n), degs.size());
  std::partial_sort(degs.begin(), degs.begin() + static_cast<std::ptrdiff_t>(take), degs.end(),
                    std::greater<>());
  std::uint64_t d_n = 0;
  for (std::size_t i = 0; i < take; ++i) d_n += degs[i];
  const std::uint64_t groups = (N + static_cast<std::uint32_t>(n) - 1) / static_cast<std::uint32_t>(n);
  return std::min<std::uint64_t>(g.edge_count(), groups * d_n);
}

// ceil(18 n^2 p)
inline std::uint64_t budget_lemma24(int n, double p) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("budget_lemma24: n >= 1, p in [0,1]");
  return static_cast<std::uint64_t>(std::ceil(18.0 * n * static_cast<double>(n) * p));
}

struct BetaPreconditionError : std::domain_error {
  explicit BetaPreconditionError(double b)
      : std::domain_error("budget_lemma25: beta = " + std::to_string(b) + " is not > 1"),
        beta(b) {}
  double beta;
};

// ceil(8 beta n^2 p) with beta = ((log(N/n))/(np)) / log((log(N/n))/(np)).
inline std::uint64_t budget_lemma25(double N, int n, double p) {
  if (n < 1 || !(p > 0.0 && p <= 1.0) || !(N > n))
    throw std::invalid_argument("budget_lemma25: need N > n >= 1, 0 < p <= 1");
  const double ratio = std::log(N / n) / (n * p);
  const double denom = std::log(ratio);
  const double beta = ratio / denom;
  if (!(denom > 0.0) || !(beta > 1.0)) throw BetaPreconditionError(beta);
  return static_cast<std::uint64_t>(std::ceil(8.0 * beta * n * static_cast<double>(n) * p));
}

// One line per group: "S: v...; T: v...; F: u-v,..."
inline void write_decomposition(std::ostream& os, const Decomposition& d) {
  for (const auto& g : d.groups) {
    os << "S:";
    for (auto v : g.S) os << ' ' << v;
    os << "; T:";
    for (auto v : g.T) os << ' ' << v;
    os << "; F:";
    for (std::size_t i = 0; i < g.F.size(); ++i)
      os << (i ? "," : " ") << g.F[i].first << '-' << g.F[i].second;
    os << '\n';
  }
}

}  // namespace pathlab
