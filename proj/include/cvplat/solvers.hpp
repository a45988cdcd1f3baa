#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cvplat/clique.hpp"
#include "cvplat/hyperclique.hpp"
#include "cvplat/matrix.hpp"

namespace cvplat {

// Weight matrix over the (min,+) semiring; an empty optional is the
// absent-edge sentinel (+infinity). Complete k-partite graphs never produce
// it, but the product must absorb it correctly.
struct MinPlusMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::optional<Int>> w;

  MinPlusMatrix() = default;
  MinPlusMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), w(r * c) {}

  std::optional<Int>& at(std::size_t r, std::size_t c) { return w[r * cols + c]; }
  const std::optional<Int>& at(std::size_t r, std::size_t c) const {
    return w[r * cols + c];
  }
};

// C[i][j] = min_l A[i][l] + B[l][j], exact.
MinPlusMatrix min_plus_product(const MinPlusMatrix& a, const MinPlusMatrix& b);

struct TriangleResult {
  Int weight;
  std::array<std::uint64_t, 3> picks;  // one vertex per part
};

// Exact minimum over all one-per-part choices; ties resolved to the
// lexicographically smallest pick vector.
std::pair<Int, std::vector<std::uint64_t>> brute_min_clique(const KPartiteGraph& g);
std::pair<Int, std::vector<std::uint64_t>> brute_min_clique(const PUniformHypergraph& h);

// Min-weight triangle of a 3-partite graph via one min-plus product
// (parts 0->1, 1->2) closed with the 0->2 edges; witness recovered by
// re-scan, lexicographically smallest.
TriangleResult min_weight_triangle_naive(const KPartiteGraph& g);

// Same contract, but the min-plus product is realized as an ordinary integer
// matrix product over positionally encoded weights: weight w in [-W,W] maps
// to the number 2^{digit_bits * (w+W)}, the dense product accumulates per-
// exponent counts (one digit group per exponent, no carries while every
// count stays below 2^digit_bits), and the minimum is read back as the
// lowest nonzero digit group. Requires all |w| <= weight_bound; refuses with
// ResourceLimit when the encoding would exceed the element budget (the naive
// path has no such limit).
TriangleResult min_weight_triangle_encoded(const KPartiteGraph& g,
                                           const Int& weight_bound);

// Positional encoding of a weight matrix, exposed for tests: entry (r,c)
// is a vector of counts indexed by exponent, stored as one big integer in
// base 2^digit_bits.
struct DigitMatrix {
  std::size_t rows = 0, cols = 0;
  unsigned digit_bits = 0;
  unsigned long max_exponent = 0;
  std::vector<Int> enc;

  const Int& at(std::size_t r, std::size_t c) const { return enc[r * cols + c]; }
  std::uint64_t digit(std::size_t r, std::size_t c, unsigned long exponent) const;
};

// exponent(w) = w + shift; every |w| must be <= shift.
DigitMatrix encode_shifted_weights(const IntMatrix& m, const Int& shift);

// Dense product of two digit matrices (inner dimensions must agree, and both
// operands must use the same digit_bits).
DigitMatrix digit_matmul(const DigitMatrix& a, const DigitMatrix& b);

// Reads the minimal exponent per entry and undoes the given total shift.
MinPlusMatrix decode_min_plus(const DigitMatrix& m, const Int& total_shift);

}  // namespace cvplat
