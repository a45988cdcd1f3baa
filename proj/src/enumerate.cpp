#include "cvplat/enumerate.hpp"

#include <bit>

#include "cvplat/runtime.hpp"

namespace cvplat {

BlockLists split_and_list(const std::vector<IntVector>& basis, std::size_t k) {
  const std::size_t n = basis.size();
  if (n == 0) throw InvalidParameter("split_and_list: empty basis");
  if (k < 1 || k > n)
    throw InvalidParameter("split_and_list: need 1 <= k <= n, got k=" +
                           std::to_string(k) + ", n=" + std::to_string(n));
  const std::size_t m = basis.front().dim();
  for (const IntVector& b : basis)
    if (b.dim() != m) throw DimensionMismatch("split_and_list: basis dimensions differ");

  const std::size_t ceil_sz = (n + k - 1) / k;
  // k * 2^ceil(n/k) * m entries; bail out before allocating anything.
  if (ceil_sz >= 63 ||
      (std::size_t{1} << ceil_sz) > element_budget() / (k * (m ? m : 1)))
    throw ResourceLimit("split_and_list: k*2^ceil(n/k)*m exceeds the element budget");

  BlockLists bl;
  bl.n = n;
  const std::size_t big_blocks = n % k;  // blocks of size ceil(n/k) come first
  std::size_t begin = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t sz = (big_blocks == 0 || i < big_blocks) ? ceil_sz : n / k;
    bl.blocks.emplace_back(begin, begin + sz);
    begin += sz;

    const std::size_t count = std::size_t{1} << sz;
    std::vector<IntVector> list;
    std::vector<std::uint64_t> masks;
    list.reserve(count);
    masks.reserve(count);
    list.emplace_back(m);  // mask 0: the zero vector
    masks.push_back(0);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      const std::uint64_t low = mask & (~mask + 1);
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(low));
      list.push_back(add(list[mask ^ low], basis[bl.blocks[i].first + bit]));
      masks.push_back(mask);
    }
    bl.lists.push_back(std::move(list));
    bl.masks.push_back(std::move(masks));
  }
  return bl;
}

BlockLists split_and_list(const CvpInstance& inst, std::size_t k) {
  inst.validate();
  return split_and_list(inst.basis, k);
}

std::vector<std::uint8_t> decode_solution(const BlockLists& bl,
                                          std::span<const std::uint64_t> picks) {
  if (picks.size() != bl.k())
    throw InvalidParameter("decode_solution: need one pick per block");
  std::vector<std::uint8_t> z(bl.n, 0);
  for (std::size_t i = 0; i < bl.k(); ++i) {
    const auto [begin, end] = bl.blocks[i];
    if (picks[i] >= bl.lists[i].size())
      throw InvalidParameter("decode_solution: pick out of range for block " +
                             std::to_string(i));
    const std::uint64_t mask = bl.masks[i][picks[i]];
    for (std::size_t b = 0; b < end - begin; ++b)
      z[begin + b] = static_cast<std::uint8_t>((mask >> b) & 1);
  }
  return z;
}

}  // namespace cvplat
