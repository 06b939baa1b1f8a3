#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathlab/bitset.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // u < v
using EdgeList = std::vector<Edge>;

struct GnpParams {
  std::uint32_t n_vertices = 1;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_vertices < 1) throw std::invalid_argument("GnpParams: N >= 1 required");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
      throw std::invalid_argument("GnpParams: p in [0,1] required");
  }
};

// Colexicographic pair index: pair (u, v) with u < v maps to v(v-1)/2 + u.
constexpr std::uint64_t pair_index(std::uint32_t u, std::uint32_t v) noexcept {
  return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

inline Edge pair_from_index(std::uint64_t idx) noexcept {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  auto u = idx - v * (v - 1) / 2;
  return {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
}

// Canonical per-pair edge decision for the dense sampling regime (p >= 0.1)
// and for implicit hosts: one mixed draw per pair index.
inline bool gnp_pair_present(std::uint64_t mixed_seed, std::uint64_t idx, double p) noexcept {
  return to_unit(mix64(mixed_seed ^ idx)) < p;
}

// Immutable simple graph. Sorted adjacency arrays always; per-vertex bit-set
// rows additionally when N is small enough that the N^2 bits are cheap.
class Graph {
 public:
  static constexpr std::uint32_t kRowLimit = 16384;

  Graph() : Graph(1, {}) {}

  // N = 0 is allowed only so that induced_subgraph(g, {}) has a value.
  Graph(std::uint32_t n, EdgeList edges, std::optional<GnpParams> gen = std::nullopt)
      : n_(n), gen_(std::move(gen)) {
    m_ = edges.size();
    std::vector<std::uint32_t> deg(n_, 0);
    for (auto [u, v] : edges) {
      if (u >= v || v >= n_) throw std::out_of_range("Graph: bad edge");
      ++deg[u];
      ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    nbrs_.resize(2 * m_);
    std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
      nbrs_[fill[u]++] = v;
      nbrs_[fill[v]++] = u;
    }
    for (std::uint32_t i = 0; i < n_; ++i)
      std::sort(nbrs_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                nbrs_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    if (n_ <= kRowLimit) {
      rows_.assign(n_, Bitset(n_));
      for (std::uint32_t i = 0; i < n_; ++i)
        for (auto v : neighbors(i)) rows_[i].set(v);
    }
  }

  std::uint32_t n_vertices() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u == v) return false;
    if (!rows_.empty()) return rows_[u].test(v);
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const std::optional<GnpParams>& gen_params() const { return gen_; }

  EdgeList edges() const {
    EdgeList out;
    out.reserve(m_);
    for (std::uint32_t v = 0; v < n_; ++v)
      for (auto u : neighbors(v))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::uint32_t n_;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> nbrs_;
  std::vector<Bitset> rows_;
  std::optional<GnpParams> gen_;
};

// G(N, p) sampler. Identical (N, p, seed) gives an identical graph
// everywhere: the dense branch draws one mixed value per pair index, the
// sparse branch walks pair indices by geometric skips over a SplitMix64
// stream seeded with `seed`.
inline Graph gnp_generate(const GnpParams& params) {
  params.validate();
  const std::uint32_t n = params.n_vertices;
  const double p = params.edge_prob;
  EdgeList edges;
  if (p <= 0.0 || n < 2) {
    return Graph(n, {}, params);
  }
  if (p >= 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t v = 1; v < n; ++v)
      for (std::uint32_t u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph(n, std::move(edges), params);
  }
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p >= 0.1) {
    const std::uint64_t mixed = mix64(params.seed);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.05) + 16);
    for (std::uint32_t v = 1; v < n; ++v)
      for (std::uint32_t u = 0; u < v; ++u)
        if (gnp_pair_present(mixed, pair_index(u, v), p)) edges.emplace_back(u, v);
  } else {
    SplitMix64 stream(params.seed);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.2) + 16);
    std::uint64_t idx = stream.next_geometric(p);
    while (idx < total) {
      edges.push_back(pair_from_index(idx));
      idx += 1 + stream.next_geometric(p);
    }
  }
  return Graph(n, std::move(edges), params);
}

struct InducedSubgraph {
  Graph graph;
  std::vector<std::uint32_t> original;  // new label -> original label
};

// Relabeled subgraph on `vertices` (ascending order defines the relabeling).
inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<std::uint32_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto v : vertices)
    if (v >= g.n_vertices()) throw std::out_of_range("induced_subgraph: vertex out of range");
  std::vector<std::uint32_t> newlabel(g.n_vertices(), UINT32_MAX);
  for (std::uint32_t i = 0; i < vertices.size(); ++i) newlabel[vertices[i]] = i;
  EdgeList edges;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (auto u : g.neighbors(vertices[i])) {
      auto j = newlabel[u];
      if (j != UINT32_MAX && j < i) edges.emplace_back(j, i);
    }
  }
  Graph sub(static_cast<std::uint32_t>(vertices.size()), std::move(edges));
  return {std::move(sub), std::move(vertices)};
}

inline std::vector<std::vector<std::uint32_t>> connected_components(const Graph& g) {
  const std::uint32_t n = g.n_vertices();
  std::vector<std::uint32_t> comp(n, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    auto id = static_cast<std::uint32_t>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (auto u : g.neighbors(v)) {
        if (comp[u] == UINT32_MAX) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// Edges whose both endpoints have degree exactly one.
inline std::uint64_t isolated_edge_count(const Graph& g) {
  std::uint64_t c = 0;
  for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    auto u = g.neighbors(v)[0];
    if (u < v && g.degree(u) == 1) ++c;
  }
  return c;
}

// Text format: "N M" then M lines "u v", u < v, 0-based.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n_vertices() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  std::uint64_t n = 0, m = 0;
  if (!(is >> n >> m)) throw std::runtime_error("edge list: bad header");
  if (n < 1 || n > UINT32_MAX) throw std::runtime_error("edge list: bad vertex count");
  EdgeList edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated");
    if (u == v) throw std::runtime_error("edge list: self-loop");
    if (!(u < v)) throw std::runtime_error("edge list: endpoints must satisfy u < v");
    if (v >= n) throw std::runtime_error("edge list: vertex out of range");
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::runtime_error("edge list: duplicate edge");
  return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

}  // namespace pathlab
