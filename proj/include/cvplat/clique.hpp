#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvplat/enumerate.hpp"
#include "cvplat/matrix.hpp"

namespace cvplat {

// Complete k-partite graph for the Euclidean reduction. Edge weights are the
// exact rational weights multiplied by the global scale L = (k-1)*C(k,2),
// which clears both the 1/(k-1) and the 1/C(k,2) coefficient, so stored
// weights are integers and for every one-vertex-per-part choice the weights
// sum to L * ||sum of chosen vectors - t||^2. Weights can be negative (inner
// products are signed); solvers accept signed weights.
struct KPartiteGraph {
  std::size_t k = 0;
  std::vector<std::size_t> parts;      // vertex count per part
  Int scale;                           // L
  Int threshold_scaled;                // L * d^2
  std::vector<IntMatrix> pair_w;       // one matrix per part pair (i1<i2)
  BlockLists origin;                   // vertex j of part i = origin.lists[i][j]

  std::size_t pair_index(std::size_t i1, std::size_t i2) const;
  const Int& weight(std::size_t i1, std::uint64_t j1, std::size_t i2,
                    std::uint64_t j2) const;
  std::size_t total_vertices() const;
};

// Split-and-list reduction for p = 2: one vertex per enumerated block vector,
// edge weight W(e) = 2L<c1,c2> + C(k,2)*(||c1||^2 + ||c2||^2 - 2<c1,t> -
// 2<c2,t>) + (k-1)*||t||^2. Requires 2 <= k <= n.
KPartiteGraph reduce_cvp_to_clique(const CvpInstance& inst, std::size_t k);

// Total weight of the k-clique selecting picks[i] in part i.
Int clique_weight(const KPartiteGraph& g, std::span<const std::uint64_t> picks);

}  // namespace cvplat
