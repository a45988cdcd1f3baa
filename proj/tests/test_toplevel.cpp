#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cvplat/clique.hpp"
#include "cvplat/hyperclique.hpp"
#include "cvplat/maxsat.hpp"
#include "cvplat/runtime.hpp"
#include "cvplat/solvers.hpp"
#include "cvplat/toplevel.hpp"
#include "helpers.hpp"

using namespace cvplat;
using namespace cvplat::testing;

namespace {

// from-scratch enumeration, no Gray-code walking, no shared state with the
// solver under test
SolveReport reference_cvp(const CvpInstance& inst) {
  SolveReport best;
  bool have = false;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << inst.n()); ++c) {
    const auto z = bits_of(c, inst.n());
    const Int d = dist_pow_of(inst, z);
    if (!have || d < best.dist_pow ||
        (d == best.dist_pow &&
         std::lexicographical_compare(z.begin(), z.end(), best.z.begin(),
                                      best.z.end()))) {
      best.z = z;
      best.dist_pow = d;
      have = true;
    }
  }
  return best;
}

std::size_t count_cvp_optima(const CvpInstance& inst, const Int& dist) {
  std::size_t count = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << inst.n()); ++c)
    if (dist_pow_of(inst, bits_of(c, inst.n())) == dist) ++count;
  return count;
}

}  // namespace

TEST_CASE("brute_force_cvp frozen examples") {
  Rng rng(71);
  const auto basis = random_cols(rng, 4, 3, 5);
  const SolveReport zero_target = brute_force_cvp(make_cvp(basis, vec({0, 0, 0})));
  CHECK(zero_target.dist_pow == 0);
  CHECK(zero_target.z == std::vector<std::uint8_t>{0, 0, 0, 0});

  const SolveReport exact =
      brute_force_cvp(make_cvp(cols({{1, 0}, {0, 1}}), vec({1, 1})));
  CHECK(exact.dist_pow == 0);
  CHECK(exact.z == std::vector<std::uint8_t>{1, 1});

  // candidates tabulate to 2, 2, 5, 5; lexicographic tie-break keeps (0,0)
  const SolveReport tie =
      brute_force_cvp(make_cvp(cols({{2, 0}, {0, 3}}), vec({1, 1})));
  CHECK(tie.dist_pow == 2);
  CHECK(tie.z == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("brute_force_cvp equals from-scratch enumeration") {
  Rng rng(72);
  for (int it = 0; it < 30; ++it) {
    const unsigned p = (rng.next() & 1) ? 2 : 4;
    const std::size_t n = 1 + rng.next() % 8;
    const std::size_t m = 1 + rng.next() % 4;
    const CvpInstance inst =
        make_cvp(random_cols(rng, n, m, 6), random_vec(rng, m, 6), p);
    const SolveReport got = brute_force_cvp(inst);
    const SolveReport want = reference_cvp(inst);
    CHECK(got.dist_pow == want.dist_pow);
    CHECK(got.z == want.z);
  }
}

TEST_CASE("brute_force_cvp is deterministic across worker counts") {
  Rng rng(73);
  const CvpInstance inst =
      make_cvp(random_cols(rng, 11, 3, 6), random_vec(rng, 3, 6));
  const SolveReport serial = brute_force_cvp(inst);
  set_worker_count(3);
  const SolveReport parallel = brute_force_cvp(inst);
  set_worker_count(1);
  CHECK(serial.dist_pow == parallel.dist_pow);
  CHECK(serial.z == parallel.z);
}

TEST_CASE("brute_force_svp frozen examples") {
  const SolveReport zero_col = brute_force_svp(make_svp(cols({{1, 2}, {0, 0}})));
  CHECK(zero_col.dist_pow == 0);
  CHECK(zero_col.z == std::vector<std::uint8_t>{0, 1});

  const SolveReport three =
      brute_force_svp(make_svp(cols({{2, 0}, {0, 3}, {1, 1}})));
  CHECK(three.dist_pow == 2);
  CHECK(three.z == std::vector<std::uint8_t>{0, 0, 1});

  const SolveReport identity = brute_force_svp(
      make_svp(cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(identity.dist_pow == 1);
  CHECK(std::count(identity.z.begin(), identity.z.end(), 1) == 1);
}

TEST_CASE("limits are enforced") {
  Rng rng(74);
  const CvpInstance inst =
      make_cvp(random_cols(rng, 6, 2, 3), random_vec(rng, 2, 3));
  CHECK_THROWS_AS(brute_force_cvp(inst, 5), ResourceLimit);
  const SvpInstance svp = make_svp(random_cols(rng, 6, 2, 3));
  CHECK_THROWS_AS(brute_force_svp(svp, 5), ResourceLimit);
}

TEST_CASE("clique pipeline equals brute force over methods and k") {
  Rng rng(75);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 4 + rng.next() % 9;  // 4..12
    const std::size_t m = 1 + rng.next() % 4;
    const CvpInstance inst =
        make_cvp(random_cols(rng, n, m, 8), random_vec(rng, m, 8));
    const SolveReport oracle = brute_force_cvp(inst);
    const bool unique = count_cvp_optima(inst, oracle.dist_pow) == 1;

    for (std::size_t k : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
      if (k > n) continue;
      const SolveReport rep =
          solve_cvp_via_clique(inst, k, CliqueMethod::BruteClique);
      CHECK(rep.dist_pow == oracle.dist_pow);
      CHECK(dist_pow_of(inst, rep.z) == oracle.dist_pow);
      if (unique) CHECK(rep.z == oracle.z);
    }
    const SolveReport tri =
        solve_cvp_via_clique(inst, 3, CliqueMethod::NaiveTriangle);
    CHECK(tri.dist_pow == oracle.dist_pow);
    if (unique) CHECK(tri.z == oracle.z);
    if (n <= 9) {  // the encoding grows linearly with the weight range
      const SolveReport enc =
          solve_cvp_via_clique(inst, 3, CliqueMethod::EncodedTriangle);
      CHECK(enc.dist_pow == oracle.dist_pow);
      CHECK(tri.z == enc.z);
    }
  }
}

TEST_CASE("p=4 pipeline routes through the hypergraph") {
  Rng rng(76);
  for (int it = 0; it < 6; ++it) {
    const std::size_t n = 5 + rng.next() % 2;
    const CvpInstance inst =
        make_cvp(random_cols(rng, n, 2, 3), random_vec(rng, 2, 3), 4);
    const SolveReport oracle = brute_force_cvp(inst);
    for (std::size_t k : {std::size_t{4}, std::size_t{5}}) {
      const SolveReport rep =
          solve_cvp_via_clique(inst, k, CliqueMethod::BruteClique);
      CHECK(rep.method == "hyperclique-brute");
      CHECK(rep.dist_pow == oracle.dist_pow);
    }
    CHECK_THROWS_AS(solve_cvp_via_clique(inst, 3, CliqueMethod::NaiveTriangle),
                    InvalidParameter);
  }
}

TEST_CASE("triangle methods demand k = 3") {
  Rng rng(77);
  const CvpInstance inst =
      make_cvp(random_cols(rng, 6, 2, 3), random_vec(rng, 2, 3));
  CHECK_THROWS_AS(solve_cvp_via_clique(inst, 2, CliqueMethod::NaiveTriangle),
                  InvalidParameter);
  CHECK_THROWS_AS(solve_cvp_via_clique(inst, 4, CliqueMethod::EncodedTriangle),
                  InvalidParameter);
}

TEST_CASE("svp wrapper frozen examples") {
  const CvpMethod brute_inner;
  const SolveReport zero_col = solve_svp_via_cvp(
      make_svp(cols({{1, 2}, {0, 0}})), brute_inner);
  CHECK(zero_col.dist_pow == 0);
  CHECK(zero_col.z == std::vector<std::uint8_t>{0, 1});

  const SolveReport three = solve_svp_via_cvp(
      make_svp(cols({{2, 0}, {0, 3}, {1, 1}})), brute_inner);
  CHECK(three.dist_pow == 2);
  CHECK(three.z == std::vector<std::uint8_t>{0, 0, 1});

  const SolveReport rank1 =
      solve_svp_via_cvp(make_svp(cols({{5, 0}})), brute_inner);
  CHECK(rank1.dist_pow == 25);
  CHECK(rank1.z == std::vector<std::uint8_t>{1});
}

TEST_CASE("svp wrapper equals the exhaustive solver") {
  Rng rng(78);
  for (int it = 0; it < 25; ++it) {
    const unsigned p = (rng.next() & 1) ? 2 : 4;
    const std::size_t n = 2 + rng.next() % 9;  // 2..10
    const SvpInstance inst =
        make_svp(random_cols(rng, n, 1 + rng.next() % 4, 6), p);
    const SolveReport oracle = brute_force_svp(inst);
    const SolveReport wrapped = solve_svp_via_cvp(inst, CvpMethod{});
    CHECK(wrapped.dist_pow == oracle.dist_pow);
    CHECK(wrapped.z == oracle.z);
  }
  // clique inner method on a p=2 instance
  Rng rng2(79);
  const SvpInstance inst = make_svp(random_cols(rng2, 7, 3, 5));
  CvpMethod inner;
  inner.kind = CvpMethod::Kind::Clique;
  inner.k = 2;
  const SolveReport viaClique = solve_svp_via_cvp(inst, inner);
  CHECK(viaClique.dist_pow == brute_force_svp(inst).dist_pow);
}

TEST_CASE("decisions agree across every route") {
  Rng rng(80);
  for (int it = 0; it < 12; ++it) {
    const std::size_t n = 4 + rng.next() % 3;
    auto gen = generate_instance(n, 2, 2, 6, GenMode::Uniform, rng.next());
    gen.inst.threshold_pow += rng.uniform(-2, 2);
    if (gen.inst.threshold_pow < 0) gen.inst.threshold_pow = 0;
    const CvpInstance& inst = gen.inst;

    const bool direct = brute_force_cvp(inst).dist_pow <= inst.threshold_pow;

    const KPartiteGraph g = reduce_cvp_to_clique(inst, 3);
    CHECK((brute_min_clique(g).first <= g.threshold_scaled) == direct);

    const PUniformHypergraph h = reduce_cvp_to_hyperclique(inst, 4);
    CHECK((brute_min_clique(h).first <= h.threshold_scaled) == direct);

    const WcnfFormula f = reduce_cvp_to_wcnf(inst);
    CHECK((brute_force_maxsat(f).satisfied_weight >= f.threshold) == direct);

    const SolveReport viaTri =
        solve_cvp_via_clique(inst, 3, CliqueMethod::NaiveTriangle);
    CHECK(decide_cvp(inst, viaTri) == direct);
  }
}
