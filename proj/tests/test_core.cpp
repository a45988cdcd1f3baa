#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"

using namespace cvplat;
using namespace cvplat::testing;

TEST_CASE("norm_pow basics") {
  CHECK(norm_pow(vec({0, 0, 0}), 2) == 0);
  CHECK(norm_pow(vec({1, 2}), 2) == 5);
  CHECK(norm_pow(vec({1, -2, 3}), 4) == 98);  // 1 + 16 + 81
  CHECK_THROWS_AS(norm_pow(vec({1}), 3), UnsupportedNorm);
  CHECK_THROWS_AS(norm_pow(vec({1}), 0), UnsupportedNorm);
  CHECK_THROWS_AS(norm_pow(vec({1}), 1), UnsupportedNorm);
}

TEST_CASE("norm_pow is nonnegative and zero only on the zero vector") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    const unsigned p = (rng.next() & 1) ? 2 : 4;
    const IntVector v = random_vec(rng, 1 + rng.next() % 6, 5);
    const Int d = norm_pow(v, p);
    CHECK(d >= 0);
    CHECK((d == 0) == v.is_zero());
  }
}

TEST_CASE("mvp basics") {
  CHECK(mvp({vec({1, 2}), vec({3, 4})}) == 11);
  CHECK(mvp({vec({1, 1}), vec({1, 1}), vec({1, 1}), vec({1, 1})}) == 2);
  CHECK(mvp({vec({2, -1}), vec({0, 3})}) == -3);
  CHECK_THROWS_AS(mvp({vec({1, 2}), vec({3})}), DimensionMismatch);
  CHECK_THROWS_AS(mvp(std::vector<IntVector>{}), InvalidParameter);
}

TEST_CASE("mvp is symmetric under argument permutation") {
  Rng rng(12);
  for (int it = 0; it < 100; ++it) {
    const std::size_t arity = 2 + rng.next() % 3;
    const std::size_t m = 1 + rng.next() % 5;
    std::vector<IntVector> vs = random_cols(rng, arity, m, 5);
    const Int reference = mvp(vs);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::vector<IntVector> perm = vs;
      for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.next() % i]);
      CHECK(mvp(perm) == reference);
    }
  }
}

TEST_CASE("norm_pow_via_mvp examples") {
  CHECK(norm_pow_via_mvp({Int(1)}, {vec({3, 4})}, 2) == 25);
  CHECK(norm_pow_via_mvp({Int(1), Int(-1)}, {vec({1, 0}), vec({1, 0})}, 2) == 0);
  CHECK(norm_pow_via_mvp({Int(1), Int(1), Int(-1)},
                         {vec({1, 0}), vec({0, 1}), vec({1, 1})}, 4) == 0);
  CHECK_THROWS_AS(norm_pow_via_mvp({Int(1)}, {vec({1}), vec({2})}, 2),
                  InvalidParameter);
  CHECK_THROWS_AS(
      norm_pow_via_mvp({Int(1), Int(1)}, {vec({1}), vec({2, 3})}, 2),
      DimensionMismatch);
}

TEST_CASE("expansion identity matches the direct norm") {
  Rng rng(13);
  for (int it = 0; it < 300; ++it) {
    const unsigned p = (rng.next() & 1) ? 2 : 4;
    const std::size_t k = 1 + rng.next() % 4;
    const std::size_t m = 1 + rng.next() % 6;
    std::vector<IntVector> vs = random_cols(rng, k, m, 5);
    std::vector<Int> coeffs;
    IntVector comb(m);
    for (std::size_t i = 0; i < k; ++i) {
      const long a = rng.uniform(-2, 2);
      coeffs.emplace_back(a);
      for (std::size_t c = 0; c < m; ++c) comb.e[c] += a * vs[i].e[c];
    }
    CHECK(norm_pow_via_mvp(coeffs, vs, p) == norm_pow(comb, p));
  }
}

// With coefficients (1,...,1,-1) the expansion collapses to a signed sum of
// mvp values, the sign counting occurrences of the negated vector.
TEST_CASE("signed-sum specialization of the expansion") {
  Rng rng(14);
  for (int it = 0; it < 150; ++it) {
    const unsigned p = (rng.next() & 1) ? 2 : 4;
    const std::size_t k = 2 + rng.next() % 3;
    const std::size_t m = 1 + rng.next() % 5;
    std::vector<IntVector> vs = random_cols(rng, k, m, 5);

    IntVector comb(m);
    for (std::size_t i = 0; i + 1 < k; ++i) add_in_place(comb, vs[i]);
    sub_in_place(comb, vs[k - 1]);

    Int sum = 0;
    std::vector<std::size_t> tuple(p, 0);
    std::vector<const IntVector*> args(p);
    for (;;) {
      for (std::size_t j = 0; j < p; ++j) args[j] = &vs[tuple[j]];
      const std::size_t sigma =
          sigma_target_count(std::span<const std::size_t>(tuple), k - 1);
      const Int term = mvp(std::span<const IntVector* const>(args));
      sum += (sigma % 2 == 0) ? term : -term;
      std::size_t pos = 0;
      while (pos < p && ++tuple[pos] == k) tuple[pos++] = 0;
      if (pos == p) break;
    }

    CHECK(sum == norm_pow(comb, p));
    std::vector<Int> coeffs(k, 1);
    coeffs.back() = -1;
    CHECK(sum == norm_pow_via_mvp(coeffs, vs, p));
  }
}

TEST_CASE("sigma_target_count") {
  const std::size_t a[] = {1, 2, 3};
  const std::size_t b[] = {4, 4};
  const std::size_t c[] = {1, 4, 4, 2};
  CHECK(sigma_target_count(a, 4) == 0);
  CHECK(sigma_target_count(b, 4) == 2);
  CHECK(sigma_target_count(c, 4) == 2);
  CHECK(sigma_target_count({}, 7) == 0);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make_cvp({}, vec({1})).validate(), InvalidParameter);
  CHECK_THROWS_AS(make_cvp(cols({{1, 0}}), vec({1})).validate(),
                  DimensionMismatch);
  CHECK_THROWS_AS(make_cvp(cols({{1}}), vec({1}), 3).validate(),
                  UnsupportedNorm);
  CHECK_THROWS_AS(make_cvp(cols({{1}}), vec({1}), 2, Int(-1)).validate(),
                  InvalidParameter);
  CHECK_NOTHROW(make_cvp(cols({{1}}), vec({1}), 4).validate());
  CHECK_THROWS_AS(make_svp({}, 2).validate(), InvalidParameter);
  CHECK_NOTHROW(make_svp(cols({{1, 2}, {3, 4}}), 2).validate());
}
