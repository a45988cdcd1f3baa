#include "cvplat/maxsat.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cvplat/runtime.hpp"

namespace cvplat {

Int WcnfFormula::total_clause_weight() const {
  Int total = 0;
  for (const Clause& c : clauses) total += c.weight;
  return total;
}

namespace {

// Clause families are identical for every ordering of an index tuple, so the
// loop runs over nondecreasing tuples and multiplies weights by the number
// of orderings; aggregation of identical literal sets folds the rest.
struct TupleClass {
  std::vector<std::size_t> indices;  // nondecreasing, values in 0..n (n = target)
  Int orderings;
  std::size_t sigma;  // occurrences of the target index
  Int mv;
};

std::vector<TupleClass> enumerate_tuple_classes(const CvpInstance& inst) {
  const std::size_t n = inst.n();
  const unsigned p = inst.p;
  Int factorial_p = 1;
  for (unsigned i = 2; i <= p; ++i) factorial_p *= i;

  std::vector<const IntVector*> args(p);
  std::vector<TupleClass> classes;
  std::vector<std::size_t> t(p, 0);
  for (;;) {
    TupleClass tc;
    tc.indices = t;
    tc.sigma = sigma_target_count(std::span<const std::size_t>(t), n);
    tc.orderings = factorial_p;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= t.size(); ++i) {
      if (i < t.size() && t[i] == t[i - 1]) {
        ++run;
      } else {
        Int fact = 1;
        for (std::size_t f = 2; f <= run; ++f) fact *= f;
        tc.orderings = divide_exact(tc.orderings, fact);
        run = 1;
      }
    }
    for (std::size_t i = 0; i < p; ++i)
      args[i] = t[i] < n ? &inst.basis[t[i]] : &inst.target;
    tc.mv = mvp(std::span<const IntVector* const>(args));
    classes.push_back(std::move(tc));

    std::size_t pos = p;
    while (pos > 0 && t[pos - 1] == n) --pos;
    if (pos == 0) break;
    const std::size_t v = t[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < p; ++i) t[i] = v;
  }
  return classes;
}

using ClauseMap = std::map<std::vector<std::int32_t>, Int>;

}  // namespace

WcnfFormula reduce_cvp_to_wcnf(const CvpInstance& inst,
                               std::optional<Int> base_weight_override) {
  inst.validate();
  const std::size_t n = inst.n();
  const unsigned p = inst.p;

  const auto classes = enumerate_tuple_classes(inst);

  Int max_abs_mvp = 1;
  for (const TupleClass& tc : classes) {
    Int a = abs(tc.mv);
    if (a > max_abs_mvp) max_abs_mvp = a;
  }

  WcnfFormula f;
  f.num_vars = n;
  f.num_base_vars = n;
  f.p = p;
  f.scale = 1;
  for (unsigned k = 1; k <= p; ++k) f.scale = lcm(f.scale, pow2(k) - 1);
  // Minimal uniform baseline keeping every clause weight positive: the
  // all-negated clause carries a (2^k - 2) multiple of an mvp value.
  f.base_weight = base_weight_override ? *base_weight_override
                                       : (pow2(p) - 2) * max_abs_mvp + 1;
  f.offset = 0;

  ClauseMap agg;
  std::vector<std::size_t> distinct;
  std::vector<std::int32_t> lits;
  for (const TupleClass& tc : classes) {
    distinct = tc.indices;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const std::size_t kk = distinct.size();
    const Int denom = pow2(kk) - 1;
    const Int unit = divide_exact(f.scale, denom) * tc.orderings;
    Int signed_mv = tc.mv;
    if (tc.sigma % 2 == 1) signed_mv = -signed_mv;
    // One weight for the 2^k - 1 mixed sign patterns, another for the
    // all-negated one.
    const Int w_regular = unit * (f.base_weight - signed_mv);
    const Int w_all_neg = unit * (f.base_weight + (pow2(kk) - 2) * signed_mv);

    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << kk); ++pattern) {
      const Int& w = (pattern + 1 == (std::uint64_t{1} << kk)) ? w_all_neg : w_regular;
      if (w == 0) continue;
      // Substitute the target's variable with true: a positive occurrence
      // satisfies the clause outright (weight moves to the offset), a
      // negated one is deleted from the clause.
      bool to_offset = false;
      lits.clear();
      for (std::size_t j = 0; j < kk; ++j) {
        const bool negated = (pattern >> j) & 1;
        if (distinct[j] == n) {
          if (!negated) to_offset = true;
          continue;
        }
        const auto var = static_cast<std::int32_t>(distinct[j] + 1);
        lits.push_back(negated ? -var : var);
      }
      if (to_offset)
        f.offset += w;
      else if (!lits.empty())
        agg[lits] += w;
      // an emptied clause (lone negated target literal) contributes nothing
    }
  }

  for (auto& [ls, w] : agg) {
    if (w == 0) continue;
    if (w < 0)
      throw InvalidParameter(
          "reduce_cvp_to_wcnf: base weight override yields a negative clause weight");
    f.clauses.push_back(Clause{ls, w});
  }

  f.threshold =
      f.scale * (int_pow(Int(static_cast<unsigned long>(n + 1)), p) * f.base_weight -
                 inst.threshold_pow);
  return f;
}

WcnfFormula reduce_svp_to_wcnf(const SvpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  const unsigned p = inst.p;

  CvpInstance zero_target;
  zero_target.basis = inst.basis;
  zero_target.target = IntVector(inst.m());
  zero_target.p = p;
  zero_target.threshold_pow = inst.threshold_pow;
  WcnfFormula f = reduce_cvp_to_wcnf(zero_target);

  // Any optimum prefers satisfying every chain clause to any amount of soft
  // weight, and the chain is fully satisfiable exactly when some x_i holds.
  const Int chain_weight = 1 + f.total_clause_weight();

  // Split x_1 v ... v x_n into clauses of width <= p through one auxiliary
  // variable per link. Width-2 links cannot carry payload literals, so p = 2
  // uses width-3 links; still at most n auxiliaries.
  const std::size_t first_cap = p >= 4 ? p - 1 : 1;
  const std::size_t mid_cap = p >= 4 ? p - 2 : 1;
  std::vector<std::vector<std::int32_t>> chain;
  if (n <= p) {
    std::vector<std::int32_t> wide;
    for (std::size_t i = 1; i <= n; ++i) wide.push_back(static_cast<std::int32_t>(i));
    chain.push_back(std::move(wide));
  } else {
    std::size_t next_var = 1;
    std::int32_t aux = static_cast<std::int32_t>(n);
    std::vector<std::int32_t> cl;
    for (std::size_t i = 0; i < first_cap; ++i)
      cl.push_back(static_cast<std::int32_t>(next_var++));
    ++aux;
    cl.push_back(aux);
    chain.push_back(std::move(cl));
    while (n - (next_var - 1) > first_cap) {
      cl = {static_cast<std::int32_t>(-aux)};
      for (std::size_t i = 0; i < mid_cap && next_var <= n; ++i)
        cl.push_back(static_cast<std::int32_t>(next_var++));
      ++aux;
      cl.push_back(aux);
      chain.push_back(std::move(cl));
    }
    cl = {static_cast<std::int32_t>(-aux)};
    while (next_var <= n) cl.push_back(static_cast<std::int32_t>(next_var++));
    chain.push_back(std::move(cl));
    f.num_vars = static_cast<std::size_t>(aux);
  }

  ClauseMap agg;
  for (Clause& c : f.clauses) agg[std::move(c.lits)] += c.weight;
  for (auto& cl : chain) {
    std::sort(cl.begin(), cl.end(), [](std::int32_t a, std::int32_t b) {
      return (a < 0 ? -a : a) < (b < 0 ? -b : b);
    });
    agg[cl] += chain_weight;
  }
  f.clauses.clear();
  for (auto& [ls, w] : agg) f.clauses.push_back(Clause{ls, w});

  f.threshold += Int(static_cast<unsigned long>(chain.size())) * chain_weight;
  return f;
}

Int eval_satisfied_weight(const WcnfFormula& f,
                          std::span<const std::uint8_t> assignment) {
  if (assignment.size() != f.num_vars)
    throw InvalidParameter("eval_satisfied_weight: assignment length mismatch");
  Int total = 0;
  for (const Clause& c : f.clauses) {
    for (std::int32_t lit : c.lits) {
      const std::size_t var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      const bool value = assignment[var - 1] != 0;
      if (value == (lit > 0)) {
        total += c.weight;
        break;
      }
    }
  }
  return total;
}

namespace {

struct BestAssignment {
  bool have = false;
  Int weight;
  std::vector<std::uint8_t> assignment;
};

// Counter order with x_1 as the most significant bit is lexicographic order
// over assignments, so keeping strict improvements returns the
// lexicographically smallest maximizer.
BestAssignment maxsat_scan(const WcnfFormula& f, std::uint64_t begin,
                           std::uint64_t end) {
  const std::size_t nv = f.num_vars;
  std::vector<std::uint8_t> assignment(nv, 0);
  BestAssignment best;
  for (std::uint64_t counter = begin; counter < end; ++counter) {
    for (std::size_t j = 0; j < nv; ++j)
      assignment[j] = static_cast<std::uint8_t>((counter >> (nv - 1 - j)) & 1);
    Int w = eval_satisfied_weight(f, assignment);
    if (!best.have || w > best.weight) {
      best.weight = std::move(w);
      best.assignment = assignment;
      best.have = true;
    }
  }
  return best;
}

}  // namespace

MaxSatResult brute_force_maxsat(const WcnfFormula& f, std::size_t limit) {
  if (f.num_vars > limit)
    throw ResourceLimit("brute_force_maxsat: " + std::to_string(f.num_vars) +
                        " variables exceed the limit of " + std::to_string(limit));
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  const unsigned workers = worker_count();
  BestAssignment best;
  if (workers <= 1 || f.num_vars < 10) {
    best = maxsat_scan(f, 0, total);
  } else {
    std::vector<BestAssignment> results(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
      pool.emplace_back(
          [&, w, begin, end] { results[w] = maxsat_scan(f, begin, end); });
    }
    for (auto& t : pool) t.join();
    // chunks ranked in counter order, so the first strict maximum is the
    // lexicographically smallest one
    for (BestAssignment& r : results)
      if (r.have && (!best.have || r.weight > best.weight)) best = std::move(r);
  }
  return MaxSatResult{std::move(best.assignment), best.weight + f.offset};
}

}  // namespace cvplat
