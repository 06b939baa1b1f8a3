#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathlab/bitset.hpp"
#include "pathlab/graph.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

template <class Host>
concept EdgeHost = requires(const Host& h, std::uint32_t u, std::uint32_t v) {
  { h.n_vertices() } -> std::convertible_to<std::uint32_t>;
  { h.has_edge(u, v) } -> std::convertible_to<bool>;
};

template <class Host>
concept NeighborListHost = EdgeHost<Host> && requires(const Host& h, std::uint32_t v) {
  h.neighbors(v);
};

enum class FreenessCertificate { component_bound, exact };

struct ConstructionResult {
  EdgeList subgraph;
  std::uint64_t edge_count = 0;
  FreenessCertificate certificate = FreenessCertificate::component_bound;
  std::uint32_t component_bound = 0;  // every component of the subgraph has <= this many vertices
  int rounds_completed = 0;
};

enum class Selection { random, greedy_degree };

struct DenseExtractionParams {
  double alpha = 0.5;
  double beta = 1.0;
  int n = 1;
  Selection selection = Selection::random;
  std::optional<double> edge_prob;  // overrides the host's generative p
  bool early_stop = false;  // probe for survivors instead of enumerating B_i fully

  // 1/alpha must be an integer in 2..8; alpha is snapped to the nearest.
  int parts() const {
    int k = static_cast<int>(std::lround(1.0 / alpha));
    if (k < 2 || k > 8) throw std::invalid_argument("DenseExtractionParams: 1/alpha must be in 2..8");
    return k;
  }
  void validate() const {
    int k = parts();
    if (n < k || n % k != 0)
      throw std::invalid_argument("DenseExtractionParams: parts() must divide n");
    if (!(beta > 0.0)) throw std::invalid_argument("DenseExtractionParams: beta > 0 required");
  }
};

struct DenseExtractionResult {
  std::vector<std::uint32_t> A;
  std::vector<std::vector<std::uint32_t>> parts;
  std::uint64_t internal_edges = 0;
  std::vector<std::uint64_t> survivor_counts;  // |B_0|, |B_1|, ...
  bool early_stopped = false;  // counts after B_0 are probe tallies, not full |B_i|
};

struct ExtractionFailed {
  int step = 0;
  std::uint64_t survivors = 0;
};

struct DenseExtractionOutcome {
  std::optional<DenseExtractionResult> result;
  std::optional<ExtractionFailed> failure;
  bool ok() const { return result.has_value(); }
};

namespace detail {

template <EdgeHost Host>
inline std::uint32_t deg_into(const Host& host, std::uint32_t v,
                              const std::vector<std::uint32_t>& members,
                              std::uint32_t accept_at) {
  std::uint32_t deg = 0;
  auto remaining = static_cast<std::uint32_t>(members.size());
  for (auto a : members) {
    if (host.has_edge(v, a)) {
      if (++deg >= accept_at) return deg;
    }
    if (deg + --remaining < accept_at) return deg;  // cannot reach the threshold
  }
  return deg;
}

// Survivors of `pool` with deg(v, part) >= thr, excluding `part` itself.
template <EdgeHost Host>
inline std::vector<std::uint32_t> survivors_of(const Host& host,
                                               const std::vector<std::uint32_t>& pool,
                                               const std::vector<std::uint32_t>& part,
                                               std::uint32_t thr) {
  std::vector<std::uint32_t> out;
  auto in_part = [&](std::uint32_t v) {
    return std::find(part.begin(), part.end(), v) != part.end();
  };
  if constexpr (NeighborListHost<Host>) {
    std::vector<std::uint32_t> cnt(host.n_vertices(), 0);
    for (auto a : part)
      for (auto u : host.neighbors(a)) ++cnt[u];
    for (auto v : pool)
      if (cnt[v] >= thr && !in_part(v)) out.push_back(v);
  } else {
    for (auto v : pool)
      if (!in_part(v) && deg_into(host, v, part, thr) >= thr) out.push_back(v);
  }
  return out;
}

template <EdgeHost Host>
inline std::vector<std::uint32_t> select_part(const Host& host,
                                              std::vector<std::uint32_t>& candidates,
                                              std::size_t size, Selection sel, SplitMix64& rng) {
  std::vector<std::uint32_t> part;
  part.reserve(size);
  if (sel == Selection::random) {
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.next_below(candidates.size() - i));
      std::swap(candidates[i], candidates[j]);
      part.push_back(candidates[i]);
    }
  } else {
    // Highest degree into the candidate pool; ties broken by vertex index.
    Bitset pool_mask(host.n_vertices());
    for (auto v : candidates) pool_mask.set(v);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> ranked;
    ranked.reserve(candidates.size());
    for (auto v : candidates) {
      std::uint64_t deg = 0;
      if constexpr (NeighborListHost<Host>) {
        for (auto u : host.neighbors(v)) deg += pool_mask.test(u);
      } else {
        for (auto u : candidates) deg += host.has_edge(v, u);
      }
      ranked.emplace_back(deg, v);
    }
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(size),
                      ranked.end(), [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first : a.second < b.second;
                      });
    for (std::size_t i = 0; i < size; ++i) part.push_back(ranked[i].second);
    Bitset chosen(host.n_vertices());
    for (auto v : part) chosen.set(v);
    std::stable_partition(candidates.begin(), candidates.end(),
                          [&](std::uint32_t v) { return chosen.test(v); });
  }
  return part;
}

template <EdgeHost Host>
inline EdgeList induced_edges(const Host& host, const std::vector<std::uint32_t>& A) {
  EdgeList edges;
  if constexpr (NeighborListHost<Host>) {
    Bitset in_a(host.n_vertices());
    for (auto v : A) in_a.set(v);
    for (auto v : A)
      for (auto u : host.neighbors(v))
        if (u < v && in_a.test(u)) edges.emplace_back(u, v);
  } else {
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        if (host.has_edge(A[i], A[j]))
          edges.emplace_back(std::min(A[i], A[j]), std::max(A[i], A[j]));
  }
  return edges;
}

// Probe-based first step for huge pools: draws random pool members and keeps
// survivors until the remaining parts are covered with headroom. Does no
// O(|live|) work unless failure is imminent, in which case it falls back to
// a full scan so that reported failures are exact.
template <EdgeHost Host>
inline std::optional<std::vector<std::uint32_t>> probe_survivors(
    const Host& host, const std::vector<std::uint32_t>& live,
    const std::vector<std::uint32_t>& part, std::uint32_t thr, std::size_t want,
    SplitMix64& rng) {
  std::vector<std::uint32_t> found;
  found.reserve(want);
  auto already = [&](std::uint32_t v) {
    return std::find(part.begin(), part.end(), v) != part.end() ||
           std::find(found.begin(), found.end(), v) != found.end();
  };
  const std::uint64_t probe_cap = 64 * static_cast<std::uint64_t>(want) + 4096;
  for (std::uint64_t probes = 0; found.size() < want && probes < probe_cap; ++probes) {
    auto v = live[static_cast<std::size_t>(rng.next_below(live.size()))];
    if (already(v)) continue;
    if (deg_into(host, v, part, thr) >= thr) found.push_back(v);
  }
  if (found.size() < want) return std::nullopt;
  return found;
}

}  // namespace detail

// Iterative dense n-set extraction: split the target set into 1/alpha parts;
// part A_i is drawn from the survivors B_{i-1} of the previous degree filter
// (deg(v, A_{i-1}) >= beta * alpha * n * p), so every later part has the
// guaranteed degree into every earlier part.
template <EdgeHost Host>
inline DenseExtractionOutcome dense_extract(const Host& host,
                                            const std::vector<std::uint32_t>& live,
                                            const DenseExtractionParams& params,
                                            std::uint64_t seed) {
  params.validate();
  double p = 0.0;
  if (params.edge_prob) {
    p = *params.edge_prob;
  } else if constexpr (requires { host.gen_params(); }) {
    if (!host.gen_params()) throw std::invalid_argument("dense_extract: no generative p available");
    p = host.gen_params()->edge_prob;
  } else if constexpr (requires { host.edge_prob(); }) {
    p = host.edge_prob();
  } else {
    throw std::invalid_argument("dense_extract: no generative p available");
  }

  const int parts_count = params.parts();
  const auto part_size = static_cast<std::size_t>(params.n) / static_cast<std::size_t>(parts_count);
  const double threshold = params.beta * (1.0 / parts_count) * params.n * p;
  const auto thr = static_cast<std::uint32_t>(std::max(0.0, std::ceil(threshold - 1e-9)));

  if (live.size() < static_cast<std::size_t>(params.n))
    throw std::invalid_argument("dense_extract: |live| >= n required");

  SplitMix64 rng(seed);
  DenseExtractionResult res;
  res.survivor_counts.push_back(live.size());

  const bool probing = params.early_stop && params.selection == Selection::random && thr > 0;
  std::vector<std::uint32_t> candidates;

  if (probing) {
    res.early_stopped = true;
    // A_1 by rejection sampling straight from the pool.
    std::vector<std::uint32_t> part;
    while (part.size() < part_size) {
      auto v = live[static_cast<std::size_t>(rng.next_below(live.size()))];
      if (std::find(part.begin(), part.end(), v) == part.end()) part.push_back(v);
    }
    res.parts.push_back(part);
    res.A = part;
    if (parts_count > 1) {
      const std::size_t want =
          std::max<std::size_t>(part_size * static_cast<std::size_t>(parts_count - 1) * 4, 64);
      auto found = detail::probe_survivors(host, live, part, thr, want, rng);
      if (found) {
        candidates = std::move(*found);
      } else {
        candidates = detail::survivors_of(host, live, part, thr);
      }
      res.survivor_counts.push_back(candidates.size());
    }
  } else {
    candidates = live;
    if (candidates.size() < part_size)
      return {std::nullopt, ExtractionFailed{1, candidates.size()}};
    auto part = detail::select_part(host, candidates, part_size, params.selection, rng);
    res.parts.push_back(part);
    res.A = part;
    if (parts_count > 1) {
      candidates = detail::survivors_of(host, candidates, part, thr);
      res.survivor_counts.push_back(candidates.size());
    }
  }

  for (int i = 2; i <= parts_count; ++i) {
    if (candidates.size() < part_size)
      return {std::nullopt, ExtractionFailed{i, candidates.size()}};
    auto part = detail::select_part(host, candidates, part_size, params.selection, rng);
    res.parts.push_back(part);
    res.A.insert(res.A.end(), part.begin(), part.end());
    if (i == parts_count) break;
    candidates = detail::survivors_of(host, candidates, part, thr);
    res.survivor_counts.push_back(candidates.size());
  }

  auto edges = detail::induced_edges(host, res.A);
  res.internal_edges = edges.size();
  return {std::move(res), std::nullopt};
}

// Random equitable partition into ceil(N/n) blocks; the subgraph keeps only
// intra-block edges, so components have at most n vertices.
inline ConstructionResult blocks_construct(const Graph& g, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("blocks_construct: n >= 1 required");
  const std::uint32_t N = g.n_vertices();
  std::vector<std::uint32_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(order);
  std::vector<std::uint32_t> block_of(N, 0);
  const auto un = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < N; ++i) block_of[order[i]] = i / un;
  ConstructionResult res;
  for (std::uint32_t v = 0; v < N; ++v)
    for (auto u : g.neighbors(v))
      if (u < v && block_of[u] == block_of[v]) res.subgraph.emplace_back(u, v);
  res.edge_count = res.subgraph.size();
  res.certificate = FreenessCertificate::component_bound;
  res.component_bound = std::min<std::uint32_t>(un, std::max<std::uint32_t>(N, 1));
  return res;
}

// All isolated edges of g; P_3-free, hence P_{n+1}-free for every n >= 2.
inline ConstructionResult isolated_edge_construct(const Graph& g) {
  ConstructionResult res;
  for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    auto u = g.neighbors(v)[0];
    if (u < v && g.degree(u) == 1) res.subgraph.emplace_back(u, v);
  }
  res.edge_count = res.subgraph.size();
  res.certificate = FreenessCertificate::component_bound;
  res.component_bound = 2;
  return res;
}

// Repeated extraction on the unused vertex pool; stops at the first failure
// and returns the partial construction, which is still P_{n+1}-free.
// rounds < 0 means the default cap floor(N / 4n).
template <EdgeHost Host>
inline ConstructionResult repeated_dense_construct(const Host& host, int n,
                                                   DenseExtractionParams params, int rounds,
                                                   std::uint64_t seed) {
  params.n = n;
  params.validate();
  const std::uint32_t N = host.n_vertices();
  if (rounds < 0) rounds = static_cast<int>(N / (4u * static_cast<std::uint32_t>(n)));
  ConstructionResult res;
  res.certificate = FreenessCertificate::component_bound;
  res.component_bound = static_cast<std::uint32_t>(n);

  std::vector<std::uint32_t> pool(N);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint32_t> pos(N);
  std::iota(pos.begin(), pos.end(), 0);

  for (int t = 0; t < rounds; ++t) {
    if (pool.size() < static_cast<std::size_t>(n)) break;
    auto outcome =
        dense_extract(host, pool, params, derive_seed(seed, static_cast<std::uint64_t>(t)));
    if (!outcome.ok()) break;
    const auto& A = outcome.result->A;
    auto edges = detail::induced_edges(host, A);
    res.subgraph.insert(res.subgraph.end(), edges.begin(), edges.end());
    for (auto v : A) {  // swap-remove keeps rounds O(n) each
      auto i = pos[v];
      auto last = pool.back();
      pool[i] = last;
      pos[last] = i;
      pool.pop_back();
    }
    ++res.rounds_completed;
  }
  res.edge_count = res.subgraph.size();
  return res;
}

}  // namespace pathlab
