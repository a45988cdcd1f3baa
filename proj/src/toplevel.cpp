#include "cvplat/toplevel.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "cvplat/clique.hpp"
#include "cvplat/enumerate.hpp"
#include "cvplat/hyperclique.hpp"
#include "cvplat/runtime.hpp"
#include "cvplat/solvers.hpp"

namespace cvplat {

namespace {

struct BestZ {
  bool have = false;
  Int dist;
  std::vector<std::uint8_t> z;

  void offer(const Int& d, const std::vector<std::uint8_t>& cand) {
    if (!have || d < dist ||
        (d == dist && std::lexicographical_compare(cand.begin(), cand.end(),
                                                   z.begin(), z.end()))) {
      have = true;
      dist = d;
      z = cand;
    }
  }
};

// Gray-code walk over {0,1}^n: one basis column added or removed per step,
// one norm evaluation per candidate. skip_zero drops the all-zero vector.
BestZ scan_range(const std::vector<IntVector>& basis, const IntVector& start,
                 unsigned p, std::uint64_t begin, std::uint64_t end,
                 bool skip_zero) {
  const std::size_t n = basis.size();
  BestZ best;
  std::vector<std::uint8_t> z(n, 0);
  IntVector cur = start;
  const std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t b = 0; b < n; ++b) {
    if ((gray >> b) & 1) {
      z[b] = 1;
      add_in_place(cur, basis[b]);
    }
  }
  for (std::uint64_t step = begin; step < end; ++step) {
    if (step != begin) {
      const std::size_t b =
          static_cast<std::size_t>(std::countr_zero(step));
      if ((z[b] ^= 1))
        add_in_place(cur, basis[b]);
      else
        sub_in_place(cur, basis[b]);
    }
    if (skip_zero && std::all_of(z.begin(), z.end(),
                                 [](std::uint8_t v) { return v == 0; }))
      continue;
    best.offer(norm_pow(cur, p), z);
  }
  return best;
}

BestZ scan_all(const std::vector<IntVector>& basis, const IntVector& start,
               unsigned p, bool skip_zero) {
  const std::size_t n = basis.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = worker_count();
  if (workers <= 1 || n < 10)
    return scan_range(basis, start, p, 0, total, skip_zero);

  std::vector<BestZ> results(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      results[w] = scan_range(basis, start, p, begin, end, skip_zero);
    });
  }
  for (auto& t : pool) t.join();
  BestZ best;
  for (const BestZ& r : results)
    if (r.have) best.offer(r.dist, r.z);
  return best;
}

void require_within_limit(std::size_t n, std::size_t limit, const char* who) {
  if (n > limit)
    throw ResourceLimit(std::string(who) + ": rank " + std::to_string(n) +
                        " exceeds the brute-force limit of " +
                        std::to_string(limit));
}

IntVector negated(const IntVector& v) {
  IntVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.e[i] = -v.e[i];
  return out;
}

}  // namespace

SolveReport brute_force_cvp(const CvpInstance& inst, std::size_t limit) {
  inst.validate();
  require_within_limit(inst.n(), limit, "brute_force_cvp");
  BestZ best = scan_all(inst.basis, negated(inst.target), inst.p, false);
  return SolveReport{std::move(best.z), std::move(best.dist), "brute", {}, {}};
}

SolveReport brute_force_svp(const SvpInstance& inst, std::size_t limit) {
  inst.validate();
  require_within_limit(inst.n(), limit, "brute_force_svp");
  BestZ best = scan_all(inst.basis, IntVector(inst.m()), inst.p, true);
  return SolveReport{std::move(best.z), std::move(best.dist), "svp-brute", {}, {}};
}

SolveReport solve_cvp_via_clique(const CvpInstance& inst, std::size_t k,
                                 CliqueMethod method) {
  inst.validate();
  const bool triangle = method != CliqueMethod::BruteClique;
  if (triangle && k != 3)
    throw InvalidParameter("solve_cvp_via_clique: triangle methods need k = 3");

  Int min_weight;
  std::vector<std::uint64_t> picks;
  Int scale;
  const BlockLists* origin = nullptr;
  std::string name;

  KPartiteGraph g;
  PUniformHypergraph h;
  if (inst.p == 2) {
    g = reduce_cvp_to_clique(inst, k);
    switch (method) {
      case CliqueMethod::BruteClique: {
        auto [w, pk] = brute_min_clique(g);
        min_weight = std::move(w);
        picks = std::move(pk);
        name = "brute-clique";
        break;
      }
      case CliqueMethod::NaiveTriangle: {
        TriangleResult tr = min_weight_triangle_naive(g);
        min_weight = std::move(tr.weight);
        picks.assign(tr.picks.begin(), tr.picks.end());
        name = "naive-triangle";
        break;
      }
      case CliqueMethod::EncodedTriangle: {
        Int bound = 0;
        for (const IntMatrix& m : g.pair_w)
          for (const Int& w : m.a) {
            Int a = abs(w);
            if (a > bound) bound = a;
          }
        TriangleResult tr = min_weight_triangle_encoded(g, bound);
        min_weight = std::move(tr.weight);
        picks.assign(tr.picks.begin(), tr.picks.end());
        name = "encoded-triangle";
        break;
      }
    }
    scale = g.scale;
    origin = &g.origin;
  } else {
    if (triangle)
      throw InvalidParameter(
          "solve_cvp_via_clique: triangle methods are Euclidean-only; p >= 4 "
          "routes through the hypergraph");
    h = reduce_cvp_to_hyperclique(inst, k);
    auto [w, pk] = brute_min_clique(h);
    min_weight = std::move(w);
    picks = std::move(pk);
    scale = h.scale;
    origin = &h.origin;
    name = "hyperclique-brute";
  }

  SolveReport r;
  r.dist_pow = divide_exact(min_weight, scale);
  r.z = decode_solution(*origin, picks);
  r.method = std::move(name);
  r.scale = std::move(scale);
  r.witness_picks = std::move(picks);
  return r;
}

SolveReport solve_cvp_via_maxsat(const CvpInstance& inst) {
  inst.validate();
  WcnfFormula f = reduce_cvp_to_wcnf(inst);
  MaxSatResult res = brute_force_maxsat(f);
  IntVector v = negated(inst.target);
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (res.assignment[i]) add_in_place(v, inst.basis[i]);
  SolveReport r;
  r.z = std::move(res.assignment);
  r.dist_pow = norm_pow(v, inst.p);
  r.method = "maxsat-brute";
  return r;
}

SolveReport solve_svp_via_maxsat(const SvpInstance& inst) {
  inst.validate();
  WcnfFormula f = reduce_svp_to_wcnf(inst);
  MaxSatResult res = brute_force_maxsat(f);
  std::vector<std::uint8_t> z(res.assignment.begin(),
                              res.assignment.begin() + inst.n());
  if (std::all_of(z.begin(), z.end(), [](std::uint8_t v) { return v == 0; }))
    throw Error("solve_svp_via_maxsat: optimum ignored the nonzero chain");
  IntVector v(inst.m());
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (z[i]) add_in_place(v, inst.basis[i]);
  SolveReport r;
  r.z = std::move(z);
  r.dist_pow = norm_pow(v, inst.p);
  r.method = "svp-maxsat-brute";
  return r;
}

SolveReport solve_svp_via_cvp(const SvpInstance& inst, const CvpMethod& inner) {
  inst.validate();
  const std::size_t n = inst.n();
  if (n == 1) {
    // only candidate is z = (1)
    SolveReport r;
    r.z = {1};
    r.dist_pow = norm_pow(inst.basis[0], inst.p);
    r.method = "svp-via-cvp";
    return r;
  }

  BestZ best;
  for (std::size_t i = 0; i < n; ++i) {
    // fix z_i = 1: drop column i and target -b_i
    CvpInstance sub;
    sub.p = inst.p;
    sub.threshold_pow = inst.threshold_pow;
    sub.target = negated(inst.basis[i]);
    sub.basis.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sub.basis.push_back(inst.basis[j]);

    SolveReport rep;
    switch (inner.kind) {
      case CvpMethod::Kind::Brute:
        rep = brute_force_cvp(sub);
        break;
      case CvpMethod::Kind::Clique:
        rep = solve_cvp_via_clique(sub, inner.k, inner.clique_method);
        break;
      case CvpMethod::Kind::MaxSat:
        rep = solve_cvp_via_maxsat(sub);
        break;
    }
    std::vector<std::uint8_t> lifted(rep.z.begin(), rep.z.begin() + i);
    lifted.push_back(1);
    lifted.insert(lifted.end(), rep.z.begin() + i, rep.z.end());
    best.offer(rep.dist_pow, lifted);
  }

  SolveReport r;
  r.z = std::move(best.z);
  r.dist_pow = std::move(best.dist);
  r.method = "svp-via-cvp";
  return r;
}

bool decide_cvp(const CvpInstance& inst, const SolveReport& r) {
  return r.dist_pow <= inst.threshold_pow;
}

bool decide_svp(const SvpInstance& inst, const SolveReport& r) {
  return r.dist_pow <= inst.threshold_pow;
}

}  // namespace cvplat
