#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvplat/bigint.hpp"
#include "cvplat/errors.hpp"

namespace cvplat {

// Column vector with arbitrary-precision entries. The length is the ambient
// dimension m and is fixed at construction.
struct IntVector {
  std::vector<Int> e;

  IntVector() = default;
  explicit IntVector(std::size_t m) : e(m) {}
  explicit IntVector(std::vector<Int> entries) : e(std::move(entries)) {}

  std::size_t dim() const { return e.size(); }
  Int& operator[](std::size_t i) { return e[i]; }
  const Int& operator[](std::size_t i) const { return e[i]; }
  bool is_zero() const;
  bool operator==(const IntVector&) const = default;
};

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
void add_in_place(IntVector& a, const IntVector& b);
void sub_in_place(IntVector& a, const IntVector& b);

// Decision instance: basis columns b_1..b_n, target t, even norm index p and
// the distance threshold carried as the integer d^p. Linear independence of
// the basis is deliberately not checked; every reduction here is valid for an
// arbitrary integer generating set under {0,1} coefficients.
struct CvpInstance {
  std::vector<IntVector> basis;
  IntVector target;
  unsigned p = 2;
  Int threshold_pow;  // d^p

  std::size_t n() const { return basis.size(); }
  std::size_t m() const { return target.dim(); }
  void validate() const;
};

struct SvpInstance {
  std::vector<IntVector> basis;
  unsigned p = 2;
  Int threshold_pow;  // d^p

  std::size_t n() const { return basis.size(); }
  std::size_t m() const { return basis.empty() ? 0 : basis.front().dim(); }
  void validate() const;
};

// Result of any solver path. dist_pow is ||B z - t||_p^p exactly; recomputing
// it from z must reproduce the stored value (the verify command does).
struct SolveReport {
  std::vector<std::uint8_t> z;
  Int dist_pow;
  std::string method;
  std::optional<Int> scale;                             // reduction scale factor, if any
  std::optional<std::vector<std::uint64_t>> witness_picks;  // per-part vertex indices
};

// p-th power of the l_p norm for even p: sum of v[i]^p. Throws
// UnsupportedNorm for odd or zero p.
Int norm_pow(const IntVector& v, unsigned p);

// Multi-vector product: sum over coordinates of the product of the
// corresponding entries, the p-ary generalization of the inner product.
Int mvp(std::span<const IntVector* const> vs);
Int mvp(const std::vector<IntVector>& vs);

// Evaluates ||sum_i coeffs[i]*vs[i]||_p^p using only mvp values of p-tuples
// of the vs, i.e. sum over tuples (i_1..i_p) of (a_{i_1}...a_{i_p}) *
// mvp(vs_{i_1},...,vs_{i_p}). Agrees exactly with norm_pow of the
// combination; the expansion is what lets distances split into few-wise
// contributions in every reduction below.
Int norm_pow_via_mvp(const std::vector<Int>& coeffs,
                     const std::vector<IntVector>& vs, unsigned p);

// Number of positions in the tuple equal to the sentinel index.
std::size_t sigma_target_count(std::span<const std::size_t> tuple,
                               std::size_t sentinel);

}  // namespace cvplat
