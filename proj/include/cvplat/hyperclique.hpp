#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvplat/enumerate.hpp"

namespace cvplat {

// Binomial compensation factor C(k - distinct, p - distinct) where distinct
// counts the distinct non-sentinel elements of a tuple. Each mvp term of the
// p-th-power expansion is repeated once per p-subset containing its support,
// and this is exactly that repetition count.
Int beta(std::size_t k, std::size_t p, std::size_t distinct_non_sentinel);

// p-uniform complete k-partite hypergraph for even-norm instances. Hyperedges
// join p vertices in p distinct parts. Weights carry the global scale
// Lambda = lcm{ C(k-s, p-s) : s = 0..p } so that every 1/beta coefficient
// clears to an integer, and for every one-per-part choice the C(k,p)
// hyperedge weights sum to Lambda * ||sum of chosen vectors - t||_p^p.
struct PUniformHypergraph {
  std::size_t k = 0;
  unsigned p = 2;
  std::vector<std::size_t> parts;
  Int scale;             // Lambda
  Int threshold_scaled;  // Lambda * d^p
  std::vector<std::vector<std::size_t>> part_subsets;  // all C(k,p) subsets, lex order
  std::vector<std::vector<Int>> weights;  // per subset, row-major over vertex tuples
  BlockLists origin;

  std::size_t subset_index(std::span<const std::size_t> subset) const;
  const Int& weight(std::size_t subset_idx,
                    std::span<const std::uint64_t> vertices) const;
  std::size_t total_vertices() const;
};

// Requires even p and p <= k <= n.
PUniformHypergraph reduce_cvp_to_hyperclique(const CvpInstance& inst,
                                             std::size_t k);

Int hyperclique_weight(const PUniformHypergraph& h,
                       std::span<const std::uint64_t> picks);

}  // namespace cvplat
