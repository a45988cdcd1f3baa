#pragma once

#include "cvplat/core.hpp"
#include "cvplat/maxsat.hpp"

namespace cvplat {

enum class CliqueMethod {
  BruteClique,      // any k; any even p (p >= 4 routes through the hypergraph)
  NaiveTriangle,    // k = 3, p = 2
  EncodedTriangle,  // k = 3, p = 2, bounded weights
};

// Exhaustive baselines. Exact minimum of ||B z - t||_p^p over z in {0,1}^n
// (resp. nonzero z), lexicographically smallest argmin.
SolveReport brute_force_cvp(const CvpInstance& inst, std::size_t limit = 24);
SolveReport brute_force_svp(const SvpInstance& inst, std::size_t limit = 24);

// Split-and-list pipeline: enumerate k blocks, build the (hyper)graph, find
// the min-weight clique with the requested method, divide out the scale and
// decode the picks back to z. Agrees exactly with brute_force_cvp.
SolveReport solve_cvp_via_clique(const CvpInstance& inst, std::size_t k,
                                 CliqueMethod method);

// Reduce to weighted Max-SAT, solve by brute force, read z off the
// assignment.
SolveReport solve_cvp_via_maxsat(const CvpInstance& inst);
SolveReport solve_svp_via_maxsat(const SvpInstance& inst);

// Inner method selection for the SVP wrapper.
struct CvpMethod {
  enum class Kind { Brute, Clique, MaxSat } kind = Kind::Brute;
  std::size_t k = 3;  // used by Kind::Clique
  CliqueMethod clique_method = CliqueMethod::BruteClique;
};

// n CVP calls of rank n-1: call i fixes z_i = 1 by dropping column i and
// targeting -b_i, lifts the answer by setting bit i, and the overall minimum
// is returned. Agrees exactly with brute_force_svp.
SolveReport solve_svp_via_cvp(const SvpInstance& inst, const CvpMethod& inner);

// Threshold decisions (YES = within distance d).
bool decide_cvp(const CvpInstance& inst, const SolveReport& r);
bool decide_svp(const SvpInstance& inst, const SolveReport& r);

}  // namespace cvplat
