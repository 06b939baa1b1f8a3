#pragma once

#include <stdexcept>

#include "pathlab/graph.hpp"

namespace pathlab {

// Implicit G(N, p) host: adjacency is recomputed per query from the counter
// RNG instead of stored. Answers agree pair-for-pair with gnp_generate in
// the dense branch (p >= 0.1), which is the only regime where materializing
// the graph is infeasible anyway. Queries are O(1), so N ~ 10^6 hosts are
// practical on one core.
class GnpOracle {
 public:
  explicit GnpOracle(const GnpParams& params)
      : params_(params), mixed_(mix64(params.seed)) {
    params.validate();
    if (params.edge_prob < 0.1)
      throw std::invalid_argument(
          "GnpOracle: p < 0.1 uses the skip-sampling stream; generate explicitly");
  }

  std::uint32_t n_vertices() const { return params_.n_vertices; }
  double edge_prob() const { return params_.edge_prob; }
  const GnpParams& params() const { return params_; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (params_.edge_prob >= 1.0) return true;
    return gnp_pair_present(mixed_, pair_index(u, v), params_.edge_prob);
  }

 private:
  GnpParams params_;
  std::uint64_t mixed_;
};

}  // namespace pathlab
