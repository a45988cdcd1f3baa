#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cvplat/core.hpp"

namespace cvplat {

// Split-and-list output: the basis indices [0,n) are partitioned into k
// contiguous blocks and every {0,1}-combination inside a block is listed.
// List i holds 2^{|block i|} vectors in bitmask-ascending order, entry 0
// being the zero vector; masks[i][j] records which block members are summed
// in lists[i][j] (bit b of the mask = b-th index of the block).
struct BlockLists {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin,end) over [0,n)
  std::vector<std::vector<IntVector>> lists;
  std::vector<std::vector<std::uint64_t>> masks;

  std::size_t k() const { return blocks.size(); }
};

// Deterministic partition: contiguous blocks, the first n mod k blocks carry
// ceil(n/k) indices. Refuses (ResourceLimit) when k * 2^{ceil(n/k)} * m would
// exceed the element budget.
BlockLists split_and_list(const std::vector<IntVector>& basis, std::size_t k);
BlockLists split_and_list(const CvpInstance& inst, std::size_t k);

// Inverse of the enumeration map: one list index per block back to the full
// coefficient vector z, so that sum_i lists[i][picks[i]] == B z.
std::vector<std::uint8_t> decode_solution(const BlockLists& bl,
                                          std::span<const std::uint64_t> picks);

}  // namespace cvplat
