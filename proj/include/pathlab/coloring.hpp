#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/bounds.hpp"
#include "pathlab/construct.hpp"
#include "pathlab/gf.hpp"
#include "pathlab/graph.hpp"
#include "pathlab/pathfind.hpp"
#include "pathlab/rng.hpp"

namespace pathlab {

// AG(2, q): q^2 points (point id = x*q + y over GF(q)), q^2 + q lines in
// q + 1 parallel classes: one class per slope a (lines y = ax + b) plus the
// vertical class (lines x = c).
struct AffinePlane {
  std::uint32_t q = 0;
  // parallel_classes[c] is a set of q disjoint lines, each a set of q point ids.
  std::vector<std::vector<std::vector<std::uint32_t>>> parallel_classes;
  std::vector<std::uint32_t> class_of;  // class of the unique line through points a != b

  std::uint32_t n_points() const { return q * q; }
  std::uint32_t n_lines() const { return q * q + q; }
  std::uint32_t pair_class(std::uint32_t a, std::uint32_t b) const {
    return class_of[static_cast<std::size_t>(a) * n_points() + b];
  }
};

inline AffinePlane affine_plane(std::uint32_t q) {
  GaloisField f(q);
  AffinePlane plane;
  plane.q = q;
  plane.parallel_classes.resize(q + 1);
  plane.class_of.assign(static_cast<std::size_t>(q) * q * q * q, UINT32_MAX);
  auto point = [q](std::uint32_t x, std::uint32_t y) { return x * q + y; };
  auto record = [&](std::uint32_t cls, const std::vector<std::uint32_t>& line) {
    for (auto a : line)
      for (auto b : line)
        if (a != b) plane.class_of[static_cast<std::size_t>(a) * q * q + b] = cls;
    plane.parallel_classes[cls].push_back(line);
  };
  for (std::uint32_t a = 0; a < q; ++a) {  // slope class: y = ax + b
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<std::uint32_t> line;
      for (std::uint32_t x = 0; x < q; ++x) line.push_back(point(x, f.add(f.mul(a, x), b)));
      record(a, line);
    }
  }
  for (std::uint32_t c = 0; c < q; ++c) {  // vertical class: x = c
    std::vector<std::uint32_t> line;
    for (std::uint32_t y = 0; y < q; ++y) line.push_back(point(c, y));
    record(q, line);
  }
  return plane;
}

struct EdgeColoring {
  int colors = 1;
  EdgeList edges;
  std::vector<int> color;  // parallel to edges, values in [1, colors]
};

// The (r+1)-coloring behind "c <= r+1": vertices are split uniformly into
// r^2 parts indexed by the points of AG(2, r); a crossing edge takes the
// color of the parallel class of the line through its two part-points, and
// intra-part edges take color 1. Every color class then lives inside unions
// of at most r parts per line, so monochromatic components have <= n vertices.
class AffineColoring {
 public:
  AffineColoring(std::uint32_t N, int n, std::uint64_t seed)
      : plane_(affine_plane(check_ratio(N, n))), n_(n) {
    const std::uint32_t r = plane_.q;
    if (static_cast<std::uint32_t>(n) % r != 0)
      throw std::invalid_argument("AffineColoring: r must divide n");
    part_of_.resize(N);
    std::vector<std::uint32_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    rng.shuffle(order);
    const std::uint32_t part_size = N / (r * r);
    for (std::uint32_t i = 0; i < N; ++i) part_of_[order[i]] = i / part_size;
  }

  int colors() const { return static_cast<int>(plane_.q) + 1; }
  std::uint32_t n_vertices() const { return static_cast<std::uint32_t>(part_of_.size()); }
  std::uint32_t part_of(std::uint32_t v) const { return part_of_[v]; }
  const AffinePlane& plane() const { return plane_; }

  int color_of(std::uint32_t u, std::uint32_t v) const {
    auto a = part_of_[u], b = part_of_[v];
    if (a == b) return 1;
    return static_cast<int>(plane_.pair_class(a, b)) + 1;
  }

  EdgeColoring on_complete() const {
    EdgeColoring c;
    c.colors = colors();
    const auto N = n_vertices();
    for (std::uint32_t v = 1; v < N; ++v)
      for (std::uint32_t u = 0; u < v; ++u) {
        c.edges.emplace_back(u, v);
        c.color.push_back(color_of(u, v));
      }
    return c;
  }

  EdgeColoring restrict_to(const Graph& g) const {
    if (g.n_vertices() != n_vertices())
      throw std::invalid_argument("AffineColoring: vertex count mismatch");
    EdgeColoring c;
    c.colors = colors();
    c.edges = g.edges();
    c.color.reserve(c.edges.size());
    for (auto [u, v] : c.edges) c.color.push_back(color_of(u, v));
    return c;
  }

 private:
  static std::uint32_t check_ratio(std::uint32_t N, int n) {
    if (n < 1 || N % static_cast<std::uint32_t>(n) != 0)
      throw std::invalid_argument("AffineColoring: n must divide N");
    return N / static_cast<std::uint32_t>(n);  // affine_plane rejects non prime powers
  }

  AffinePlane plane_;
  int n_;
  std::vector<std::uint32_t> part_of_;
};

inline EdgeColoring affine_coloring(std::uint32_t N, int n, std::uint64_t seed) {
  return AffineColoring(N, n, seed).on_complete();
}

inline EdgeColoring random_coloring(const Graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_coloring: k >= 1 required");
  EdgeColoring c;
  c.colors = k;
  c.edges = g.edges();
  c.color.reserve(c.edges.size());
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    c.color.push_back(1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k))));
  return c;
}

struct ColoringVerification {
  bool ok = false;
  bool inconclusive = false;  // some class came back unknown; never counts as a pass
  std::uint32_t largest_component = 0;
  int worst_color = 0;  // color holding the largest component, or the witness
  std::optional<std::vector<std::uint32_t>> witness;  // a monochromatic P_{n+1} if found
};

// True iff no color class of c contains a path on n+1 vertices.
inline ColoringVerification coloring_verify(const Graph& g, const EdgeColoring& c, int n,
                                            DetectionBudget budget = {}) {
  if (n < 1) throw std::invalid_argument("coloring_verify: n >= 1 required");
  if (c.edges.size() != c.color.size() || c.edges.size() != g.edge_count())
    throw std::invalid_argument("coloring_verify: coloring is not total on g");
  {
    auto mine = c.edges;
    std::sort(mine.begin(), mine.end());
    auto host = g.edges();
    std::sort(host.begin(), host.end());
    if (mine != host) throw std::invalid_argument("coloring_verify: coloring is not total on g");
  }
  std::vector<EdgeList> classes(static_cast<std::size_t>(c.colors));
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    int col = c.color[i];
    if (col < 1 || col > c.colors) throw std::invalid_argument("coloring_verify: color out of range");
    classes[static_cast<std::size_t>(col - 1)].push_back(c.edges[i]);
  }
  ColoringVerification out;
  out.ok = true;
  for (int col = 1; col <= c.colors; ++col) {
    auto& cls = classes[static_cast<std::size_t>(col - 1)];
    if (cls.empty()) continue;
    Graph sub(g.n_vertices(), cls);
    for (const auto& comp : connected_components(sub))
      if (comp.size() > 1 && comp.size() > out.largest_component) {
        out.largest_component = static_cast<std::uint32_t>(comp.size());
        out.worst_color = col;
      }
    auto verdict = has_path(sub, n + 1, budget);
    if (verdict.answer == PathAnswer::yes) {
      out.ok = false;
      out.worst_color = col;
      out.witness = verdict.witness;
      return out;
    }
    if (verdict.answer == PathAnswer::unknown) {
      out.ok = false;
      out.inconclusive = true;
    }
  }
  return out;
}

struct ColorNumberEstimate {
  int lower = 1;
  int upper = 1;
  std::string lower_note;
  std::string upper_note;
};

namespace detail {

// Round-robin block coloring: vertices fall into b blocks of <= n; intra-block
// edges get color 1 and an edge between blocks i and j gets color (i+j) mod m
// shifted past 1, which splits the crossing edges into near-matchings of
// block pairs. Cheap candidate for the verified upper-bound search.
inline EdgeColoring block_coloring(const Graph& g, int n, std::uint64_t seed) {
  const std::uint32_t N = g.n_vertices();
  const auto un = static_cast<std::uint32_t>(n);
  const std::uint32_t b = (N + un - 1) / un;
  std::vector<std::uint32_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(order);
  std::vector<std::uint32_t> block_of(N);
  for (std::uint32_t i = 0; i < N; ++i) block_of[order[i]] = i / un;
  const std::uint32_t m = (b % 2 == 1) ? b : (b > 1 ? b - 1 : 1);
  EdgeColoring c;
  c.colors = static_cast<int>(m) + 1;
  c.edges = g.edges();
  c.color.reserve(c.edges.size());
  for (auto [u, v] : c.edges) {
    auto bu = block_of[u], bv = block_of[v];
    c.color.push_back(bu == bv ? 1 : 2 + static_cast<int>((bu + bv) % m));
  }
  return c;
}

}  // namespace detail

// Empirical bracket for c(g, P_{n+1}). Upper side: the cheapest coloring that
// passes coloring_verify among the affine scheme, a block scheme, and random
// k-colorings (binary search on k, several seeds each); one color per edge is
// the fallback. Lower side: p N^2 / (3 ex) with the best constructive lower
// bound standing in for ex, clamped so lower <= upper always holds.
inline ColorNumberEstimate c_estimate(const Graph& g, int n, int trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("c_estimate: n >= 2 required");
  if (trials < 1) throw std::invalid_argument("c_estimate: trials >= 1 required");
  ColorNumberEstimate est;
  if (g.edge_count() == 0) {
    est.lower_note = est.upper_note = "edgeless: one color by convention";
    return est;
  }
  const std::uint32_t N = g.n_vertices();

  // Singleton color classes are P_3-free, so always an upper bound for n >= 2.
  est.upper = static_cast<int>(std::min<std::uint64_t>(g.edge_count(), INT32_MAX));
  est.upper_note = "one color per edge";

  const auto un = static_cast<std::uint32_t>(n);
  if (N % un == 0) {
    const std::uint32_t r = N / un;
    if (r >= 2 && un % r == 0 && is_prime_power(r) && static_cast<int>(r) + 1 < est.upper) {
      AffineColoring ac(N, n, derive_seed(seed, 0));
      if (coloring_verify(g, ac.restrict_to(g), n).ok) {
        est.upper = static_cast<int>(r) + 1;
        est.upper_note = "affine plane classes, r = " + std::to_string(r);
      }
    }
  }
  {
    auto bc = detail::block_coloring(g, n, derive_seed(seed, 1));
    if (bc.colors < est.upper && coloring_verify(g, bc, n).ok) {
      est.upper = bc.colors;
      est.upper_note = "block pairing classes";
    }
  }
  if (est.upper > 2) {
    auto feasible = [&](int k) {
      for (int t = 0; t < trials; ++t) {
        auto rc = random_coloring(g, k, derive_seed(seed, 0x100 + static_cast<std::uint64_t>(t) * 64 +
                                                              static_cast<std::uint64_t>(k)));
        if (coloring_verify(g, rc, n).ok) return true;
      }
      return false;
    };
    int lo = 2, hi = est.upper;  // hi is known feasible
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (feasible(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    if (hi < est.upper) {
      est.upper = hi;
      est.upper_note = "random coloring, verified";
    }
  }

  double p;
  if (g.gen_params())
    p = g.gen_params()->edge_prob;
  else
    p = 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(N) * (N - 1));
  std::uint64_t ex_lb = std::max<std::uint64_t>(
      {blocks_construct(g, n, derive_seed(seed, 2)).edge_count,
       isolated_edge_construct(g).edge_count, 1});
  const double raw = p * static_cast<double>(N) * N / (3.0 * static_cast<double>(ex_lb));
  est.lower = std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
  est.lower_note = "p N^2 / (3 ex) with constructive ex estimate";
  if (est.lower > est.upper) {
    est.lower = est.upper;
    est.lower_note += "; clamped to the verified upper bound";
  }
  return est;
}

// CSV rows "u,v,color".
inline void write_coloring(std::ostream& os, const EdgeColoring& c) {
  os << "u,v,color\n";
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    os << c.edges[i].first << ',' << c.edges[i].second << ',' << c.color[i] << '\n';
}

// Lines "class,line,points..." with points space-separated.
inline void write_plane(std::ostream& os, const AffinePlane& plane) {
  for (std::size_t cls = 0; cls < plane.parallel_classes.size(); ++cls)
    for (std::size_t ln = 0; ln < plane.parallel_classes[cls].size(); ++ln) {
      os << cls << ',' << ln << ',';
      const auto& line = plane.parallel_classes[cls][ln];
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << line[i];
      os << '\n';
    }
}

}  // namespace pathlab
