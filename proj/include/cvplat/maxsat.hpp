#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvplat/core.hpp"

namespace cvplat {

// Soft clause: literal set (positive var v encoded as +v, negated as -v,
// variables 1-based, sorted by variable, no duplicates or complements) and a
// strictly positive weight.
struct Clause {
  std::vector<std::int32_t> lits;
  Int weight;
  bool operator==(const Clause&) const = default;
};

// Weighted CNF emitted by the reductions. For the CVP form, every assignment
// rho over the num_base_vars decision variables satisfies
//   eval_satisfied_weight(rho) + offset
//     == scale * ((n+1)^p * base_weight - ||B rho - t||_p^p),
// so decide-by-threshold on the formula is decide-by-threshold on the
// instance. offset is the weight of clauses made constant-true when the
// target's sentinel variable is substituted away. scale is
// lcm{2^k - 1 : k = 1..p}, clearing every clause-weight denominator.
struct WcnfFormula {
  std::size_t num_vars = 0;       // decision variables + any chain auxiliaries
  std::size_t num_base_vars = 0;  // decision variables x_1..x_n
  unsigned p = 2;
  std::vector<Clause> clauses;    // aggregated, deterministic order
  Int offset;
  Int scale;        // Lambda_S
  Int base_weight;  // per-tuple baseline weight D
  Int threshold;    // compare eval + offset against this for the decision

  Int total_clause_weight() const;
};

struct MaxSatResult {
  std::vector<std::uint8_t> assignment;
  Int satisfied_weight;  // includes the formula offset
};

// Reduction from a CVP instance to Weighted Max-p-SAT on exactly n variables.
// base_weight defaults to (2^p - 2) * M + 1 with M = max(1, max |mvp| over
// tuples), the minimal uniform choice keeping every clause weight positive.
// An explicit override is accepted (weights are then validated, zero-weight
// clauses dropped, negative ones rejected).
WcnfFormula reduce_cvp_to_wcnf(const CvpInstance& inst,
                               std::optional<Int> base_weight_override = {});

// CVP-style soft clauses against target 0, plus a chain of clauses with one
// auxiliary variable per link forcing some x_i to be true. Each chain clause
// weighs 1 + total soft weight, so every optimum satisfies the whole chain
// exactly when it can, i.e. picks a nonzero z. Chain clause width is at most
// p for p >= 4 and at most 3 for p = 2 (an n-ary OR has no width-2
// equivalent). Total variables stay <= 2n.
WcnfFormula reduce_svp_to_wcnf(const SvpInstance& inst);

// Weight of the clauses satisfied by the assignment, excluding offset.
Int eval_satisfied_weight(const WcnfFormula& f,
                          std::span<const std::uint8_t> assignment);

// Exact maximum over all 2^num_vars assignments; lexicographically smallest
// maximizer. Refuses when num_vars exceeds the limit.
MaxSatResult brute_force_maxsat(const WcnfFormula& f, std::size_t limit = 24);

}  // namespace cvplat
