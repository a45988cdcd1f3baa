#pragma once

// Shared test utilities: small vector literals and randomized inputs.

#include <cstdint>
#include <vector>

#include "cvplat/core.hpp"
#include "cvplat/generate.hpp"

namespace cvplat::testing {

inline IntVector vec(std::initializer_list<long> entries) {
  IntVector v;
  for (long x : entries) v.e.emplace_back(x);
  return v;
}

inline std::vector<IntVector> cols(
    std::initializer_list<std::initializer_list<long>> columns) {
  std::vector<IntVector> out;
  for (const auto& c : columns) {
    IntVector v;
    for (long x : c) v.e.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

inline CvpInstance make_cvp(std::vector<IntVector> basis, IntVector target,
                            unsigned p = 2, Int threshold = 0) {
  CvpInstance inst;
  inst.basis = std::move(basis);
  inst.target = std::move(target);
  inst.p = p;
  inst.threshold_pow = std::move(threshold);
  return inst;
}

inline SvpInstance make_svp(std::vector<IntVector> basis, unsigned p = 2,
                            Int threshold = 0) {
  SvpInstance inst;
  inst.basis = std::move(basis);
  inst.p = p;
  inst.threshold_pow = std::move(threshold);
  return inst;
}

inline IntVector random_vec(Rng& rng, std::size_t m, long bound) {
  IntVector v(m);
  for (std::size_t i = 0; i < m; ++i)
    v.e[i] = static_cast<long>(rng.uniform(-bound, bound));
  return v;
}

inline std::vector<IntVector> random_cols(Rng& rng, std::size_t n,
                                          std::size_t m, long bound) {
  std::vector<IntVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_vec(rng, m, bound));
  return out;
}

// B z - t recomputed from scratch, independent of any solver internals.
inline Int dist_pow_of(const CvpInstance& inst,
                       const std::vector<std::uint8_t>& z) {
  IntVector v(inst.m());
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (z[i]) add_in_place(v, inst.basis[i]);
  sub_in_place(v, inst.target);
  return norm_pow(v, inst.p);
}

inline Int svp_dist_pow_of(const SvpInstance& inst,
                           const std::vector<std::uint8_t>& z) {
  IntVector v(inst.m());
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (z[i]) add_in_place(v, inst.basis[i]);
  return norm_pow(v, inst.p);
}

inline std::vector<std::uint8_t> bits_of(std::uint64_t counter, std::size_t n) {
  std::vector<std::uint8_t> z(n);
  for (std::size_t j = 0; j < n; ++j)
    z[j] = static_cast<std::uint8_t>((counter >> (n - 1 - j)) & 1);
  return z;
}

}  // namespace cvplat::testing
