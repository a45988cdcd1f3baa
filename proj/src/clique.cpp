#include "cvplat/clique.hpp"

namespace cvplat {

std::size_t KPartiteGraph::pair_index(std::size_t i1, std::size_t i2) const {
  if (i1 >= i2 || i2 >= k)
    throw InvalidParameter("pair_index: need part indices i1 < i2 < k");
  // lex rank of (i1,i2) among ordered pairs
  return i1 * k - i1 * (i1 + 1) / 2 + (i2 - i1 - 1);
}

const Int& KPartiteGraph::weight(std::size_t i1, std::uint64_t j1,
                                 std::size_t i2, std::uint64_t j2) const {
  if (i1 > i2) {
    std::swap(i1, i2);
    std::swap(j1, j2);
  }
  const IntMatrix& m = pair_w[pair_index(i1, i2)];
  if (j1 >= m.rows || j2 >= m.cols)
    throw InvalidParameter("weight: vertex index out of range");
  return m.at(j1, j2);
}

std::size_t KPartiteGraph::total_vertices() const {
  std::size_t total = 0;
  for (std::size_t s : parts) total += s;
  return total;
}

KPartiteGraph reduce_cvp_to_clique(const CvpInstance& inst, std::size_t k) {
  inst.validate();
  if (inst.p != 2)
    throw UnsupportedNorm("reduce_cvp_to_clique: the pairwise split of the distance needs p = 2");
  if (k < 2 || k > inst.n())
    throw InvalidParameter("reduce_cvp_to_clique: need 2 <= k <= n");

  KPartiteGraph g;
  g.k = k;
  g.origin = split_and_list(inst, k);
  for (const auto& list : g.origin.lists) g.parts.push_back(list.size());

  const Int pairs = binomial(k, 2);      // C(k,2)
  const Int km1 = static_cast<long>(k - 1);
  g.scale = km1 * pairs;                 // L
  g.threshold_scaled = g.scale * inst.threshold_pow;

  // Per-vertex invariants of the weight formula.
  std::vector<std::vector<Int>> sq(k), dot_t(k);
  for (std::size_t i = 0; i < k; ++i) {
    sq[i].reserve(g.parts[i]);
    dot_t[i].reserve(g.parts[i]);
    for (const IntVector& c : g.origin.lists[i]) {
      sq[i].push_back(norm_pow(c, 2));
      const IntVector* args[2] = {&c, &inst.target};
      dot_t[i].push_back(mvp(std::span<const IntVector* const>(args, 2)));
    }
  }
  const Int t_sq = norm_pow(inst.target, 2);
  const Int t_term = km1 * t_sq;  // (L / C(k,2)) * ||t||^2

  // W(e) = 2L<c1,c2> + C(k,2)(||c1||^2 + ||c2||^2 - 2<c1,t> - 2<c2,t>)
  //        + (k-1)||t||^2, which is L times the rational edge weight.
  const Int two_scale = 2 * g.scale;
  for (std::size_t i1 = 0; i1 < k; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < k; ++i2) {
      IntMatrix w(g.parts[i1], g.parts[i2]);
      for (std::size_t j1 = 0; j1 < g.parts[i1]; ++j1) {
        const Int part1 = sq[i1][j1] - 2 * dot_t[i1][j1];
        for (std::size_t j2 = 0; j2 < g.parts[i2]; ++j2) {
          const IntVector* args[2] = {&g.origin.lists[i1][j1],
                                      &g.origin.lists[i2][j2]};
          Int cross = mvp(std::span<const IntVector* const>(args, 2));
          w.at(j1, j2) = two_scale * cross +
                         pairs * (part1 + sq[i2][j2] - 2 * dot_t[i2][j2]) +
                         t_term;
        }
      }
      g.pair_w.push_back(std::move(w));
    }
  }
  return g;
}

Int clique_weight(const KPartiteGraph& g, std::span<const std::uint64_t> picks) {
  if (picks.size() != g.k)
    throw InvalidParameter("clique_weight: need one pick per part");
  Int total = 0;
  for (std::size_t i1 = 0; i1 < g.k; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < g.k; ++i2)
      total += g.weight(i1, picks[i1], i2, picks[i2]);
  return total;
}

}  // namespace cvplat
