#include "cvplat/hyperclique.hpp"

#include <algorithm>

namespace cvplat {

Int beta(std::size_t k, std::size_t p, std::size_t distinct_non_sentinel) {
  if (p > k || distinct_non_sentinel > p)
    throw InvalidParameter("beta: need distinct <= p <= k");
  return binomial(static_cast<unsigned long>(k - distinct_non_sentinel),
                  static_cast<unsigned long>(p - distinct_non_sentinel));
}

namespace {

// Expansion term shape shared by every hyperedge: a multiset over the p
// chosen slots (0..p-1) plus the target sentinel (slot p), with the combined
// coefficient of all ordered tuples realizing it.
struct TermPattern {
  std::vector<std::size_t> slots;  // sorted, size p
  Int coefficient;                 // orderings * (-1)^sigma * Lambda / beta
};

std::vector<TermPattern> build_term_patterns(std::size_t k, unsigned p,
                                             const Int& lambda) {
  std::vector<Int> lam_over_beta(p + 1);
  for (std::size_t s = 0; s <= p; ++s)
    lam_over_beta[s] = divide_exact(lambda, beta(k, p, s));

  Int factorial_p = 1;
  for (unsigned i = 2; i <= p; ++i) factorial_p *= i;

  std::vector<TermPattern> patterns;
  std::vector<std::size_t> ms(p, 0);  // nondecreasing tuples over 0..p
  for (;;) {
    // orderings = p! / prod(multiplicities!)
    Int orderings = factorial_p;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= ms.size(); ++i) {
      if (i < ms.size() && ms[i] == ms[i - 1]) {
        ++run;
      } else {
        Int fact = 1;
        for (std::size_t f = 2; f <= run; ++f) fact *= f;
        orderings = divide_exact(orderings, fact);
        run = 1;
      }
    }
    const std::size_t sigma =
        sigma_target_count(std::span<const std::size_t>(ms), p);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (ms[i] != p && (i == 0 || ms[i] != ms[i - 1])) ++distinct;

    TermPattern t;
    t.slots = ms;
    t.coefficient = orderings * lam_over_beta[distinct];
    if (sigma % 2 == 1) t.coefficient = -t.coefficient;
    patterns.push_back(std::move(t));

    // next nondecreasing tuple
    std::size_t pos = p;
    while (pos > 0 && ms[pos - 1] == p) --pos;
    if (pos == 0) break;
    const std::size_t v = ms[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < p; ++i) ms[i] = v;
  }
  return patterns;
}

}  // namespace

std::size_t PUniformHypergraph::subset_index(
    std::span<const std::size_t> subset) const {
  std::vector<std::size_t> key(subset.begin(), subset.end());
  auto it = std::lower_bound(part_subsets.begin(), part_subsets.end(), key);
  if (it == part_subsets.end() || *it != key)
    throw InvalidParameter("subset_index: not a valid part subset");
  return static_cast<std::size_t>(it - part_subsets.begin());
}

const Int& PUniformHypergraph::weight(
    std::size_t subset_idx, std::span<const std::uint64_t> vertices) const {
  if (subset_idx >= part_subsets.size() || vertices.size() != p)
    throw InvalidParameter("weight: bad subset index or vertex count");
  const auto& subset = part_subsets[subset_idx];
  std::size_t flat = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= parts[subset[i]])
      throw InvalidParameter("weight: vertex index out of range");
    flat = flat * parts[subset[i]] + vertices[i];
  }
  return weights[subset_idx][flat];
}

std::size_t PUniformHypergraph::total_vertices() const {
  std::size_t total = 0;
  for (std::size_t s : parts) total += s;
  return total;
}

PUniformHypergraph reduce_cvp_to_hyperclique(const CvpInstance& inst,
                                             std::size_t k) {
  inst.validate();
  if (k < inst.p || k > inst.n())
    throw InvalidParameter("reduce_cvp_to_hyperclique: need p <= k <= n");

  PUniformHypergraph h;
  h.k = k;
  h.p = inst.p;
  h.origin = split_and_list(inst, k);
  for (const auto& list : h.origin.lists) h.parts.push_back(list.size());

  // Lambda = lcm of every binomial the expansion divides by.
  h.scale = 1;
  for (std::size_t s = 0; s <= inst.p; ++s) h.scale = lcm(h.scale, beta(k, inst.p, s));
  h.threshold_scaled = h.scale * inst.threshold_pow;

  const auto patterns = build_term_patterns(k, inst.p, h.scale);

  // All p-subsets of parts, lex order.
  std::vector<std::size_t> subset(inst.p);
  for (std::size_t i = 0; i < inst.p; ++i) subset[i] = i;
  for (;;) {
    h.part_subsets.push_back(subset);
    std::size_t i = inst.p;
    while (i > 0 && subset[i - 1] == k - inst.p + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < inst.p; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::vector<const IntVector*> slot_vec(inst.p + 1);
  slot_vec[inst.p] = &inst.target;
  std::vector<const IntVector*> args(inst.p);
  for (const auto& parts_of_edge : h.part_subsets) {
    std::size_t total = 1;
    for (std::size_t part : parts_of_edge) total *= h.parts[part];
    std::vector<Int> block(total);

    std::vector<std::uint64_t> vtx(inst.p, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      for (std::size_t i = 0; i < inst.p; ++i)
        slot_vec[i] = &h.origin.lists[parts_of_edge[i]][vtx[i]];
      Int w = 0;
      for (const TermPattern& t : patterns) {
        for (std::size_t i = 0; i < inst.p; ++i) args[i] = slot_vec[t.slots[i]];
        w += t.coefficient * mvp(std::span<const IntVector* const>(args));
      }
      block[flat] = std::move(w);

      // row-major odometer over the subset's vertex tuple
      std::size_t pos = inst.p;
      while (pos > 0 &&
             ++vtx[pos - 1] == h.parts[parts_of_edge[pos - 1]])
        vtx[--pos] = 0;
    }
    h.weights.push_back(std::move(block));
  }
  return h;
}

Int hyperclique_weight(const PUniformHypergraph& h,
                       std::span<const std::uint64_t> picks) {
  if (picks.size() != h.k)
    throw InvalidParameter("hyperclique_weight: need one pick per part");
  for (std::size_t i = 0; i < h.k; ++i)
    if (picks[i] >= h.parts[i])
      throw InvalidParameter("hyperclique_weight: pick out of range");
  Int total = 0;
  std::vector<std::uint64_t> sub_picks(h.p);
  for (std::size_t s = 0; s < h.part_subsets.size(); ++s) {
    for (std::size_t i = 0; i < h.p; ++i) sub_picks[i] = picks[h.part_subsets[s][i]];
    total += h.weight(s, sub_picks);
  }
  return total;
}

}  // namespace cvplat
