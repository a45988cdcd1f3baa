#include "cvplat/solvers.hpp"

#include <thread>

#include "cvplat/runtime.hpp"

namespace cvplat {

namespace {

void min_plus_rows(const MinPlusMatrix& a, const MinPlusMatrix& b,
                   MinPlusMatrix& out, std::size_t row_begin,
                   std::size_t row_end) {
  Int cand;
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      std::optional<Int>& best = out.at(i, j);
      for (std::size_t l = 0; l < a.cols; ++l) {
        const auto& x = a.at(i, l);
        const auto& y = b.at(l, j);
        if (!x || !y) continue;  // +infinity absorbs
        cand = *x + *y;
        if (!best || cand < *best) best = cand;
      }
    }
  }
}

}  // namespace

MinPlusMatrix min_plus_product(const MinPlusMatrix& a, const MinPlusMatrix& b) {
  if (a.cols != b.rows)
    throw DimensionMismatch("min_plus_product: inner dimensions differ");
  MinPlusMatrix out(a.rows, b.cols);
  const unsigned workers = worker_count();
  if (workers <= 1 || a.rows < 2) {
    min_plus_rows(a, b, out, 0, a.rows);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (a.rows + workers - 1) / workers;
  for (std::size_t begin = 0; begin < a.rows; begin += chunk) {
    const std::size_t end = std::min(a.rows, begin + chunk);
    pool.emplace_back(min_plus_rows, std::cref(a), std::cref(b), std::ref(out),
                      begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

namespace {

template <typename Graph, typename WeightFn>
std::pair<Int, std::vector<std::uint64_t>> brute_min_clique_impl(
    const Graph& g, WeightFn&& weight_of) {
  if (g.parts.empty()) throw InvalidParameter("brute_min_clique: no parts");
  for (std::size_t s : g.parts)
    if (s == 0) throw InvalidParameter("brute_min_clique: empty part");

  std::vector<std::uint64_t> picks(g.parts.size(), 0);
  std::vector<std::uint64_t> best_picks;
  Int best;
  bool have = false;
  for (;;) {
    Int w = weight_of(picks);
    // strict improvement keeps the first (lexicographically smallest) optimum
    if (!have || w < best) {
      best = std::move(w);
      best_picks = picks;
      have = true;
    }
    std::size_t pos = picks.size();
    while (pos > 0 && ++picks[pos - 1] == g.parts[pos - 1]) picks[--pos] = 0;
    if (pos == 0) break;
  }
  return {best, best_picks};
}

}  // namespace

std::pair<Int, std::vector<std::uint64_t>> brute_min_clique(
    const KPartiteGraph& g) {
  return brute_min_clique_impl(g, [&](const std::vector<std::uint64_t>& picks) {
    return clique_weight(g, picks);
  });
}

std::pair<Int, std::vector<std::uint64_t>> brute_min_clique(
    const PUniformHypergraph& h) {
  return brute_min_clique_impl(h, [&](const std::vector<std::uint64_t>& picks) {
    return hyperclique_weight(h, picks);
  });
}

namespace {

MinPlusMatrix to_min_plus(const IntMatrix& m) {
  MinPlusMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.w[i] = m.a[i];
  return out;
}

// Closes the 0->1->2 path matrix with the 0->2 edges and recovers the
// lexicographically smallest witness with three quadratic scans: the first
// part index that attains the optimum, then the smallest middle vertex that
// completes it, then the smallest closing vertex.
TriangleResult close_triangle(const KPartiteGraph& g, const MinPlusMatrix& path) {
  const IntMatrix& w01 = g.pair_w[g.pair_index(0, 1)];
  const IntMatrix& w12 = g.pair_w[g.pair_index(1, 2)];
  const IntMatrix& w02 = g.pair_w[g.pair_index(0, 2)];

  std::optional<Int> best;
  Int cand;
  for (std::size_t u = 0; u < path.rows; ++u) {
    for (std::size_t x = 0; x < path.cols; ++x) {
      const auto& via = path.at(u, x);
      if (!via) continue;
      cand = *via + w02.at(u, x);
      if (!best || cand < *best) best = cand;
    }
  }
  if (!best) throw InvalidParameter("min_weight_triangle: graph has no triangle");

  std::size_t best_u = path.rows;
  for (std::size_t u = 0; u < path.rows && best_u == path.rows; ++u) {
    for (std::size_t x = 0; x < path.cols; ++x) {
      const auto& via = path.at(u, x);
      if (!via) continue;
      cand = *via + w02.at(u, x);
      if (cand == *best) {
        best_u = u;
        break;
      }
    }
  }

  Int partial;
  for (std::size_t v = 0; v < g.parts[1]; ++v) {
    partial = *best - w01.at(best_u, v);
    for (std::size_t x = 0; x < g.parts[2]; ++x) {
      if (w12.at(v, x) + w02.at(best_u, x) == partial)
        return {*best, {best_u, v, x}};
    }
  }
  throw Error("min_weight_triangle: witness recovery failed");  // unreachable
}

void require_triangle_graph(const KPartiteGraph& g) {
  if (g.k != 3 || g.pair_w.size() != 3)
    throw InvalidParameter("min_weight_triangle: need a 3-partite graph");
  for (std::size_t s : g.parts)
    if (s == 0) throw InvalidParameter("min_weight_triangle: empty part");
}

}  // namespace

TriangleResult min_weight_triangle_naive(const KPartiteGraph& g) {
  require_triangle_graph(g);
  MinPlusMatrix path = min_plus_product(to_min_plus(g.pair_w[g.pair_index(0, 1)]),
                                        to_min_plus(g.pair_w[g.pair_index(1, 2)]));
  return close_triangle(g, path);
}

std::uint64_t DigitMatrix::digit(std::size_t r, std::size_t c,
                                 unsigned long exponent) const {
  if (exponent > max_exponent)
    throw InvalidParameter("DigitMatrix::digit: exponent out of range");
  const Int& v = at(r, c);
  Int shifted = v >> (exponent * digit_bits);
  Int mask = pow2(digit_bits) - 1;
  Int dig = shifted & mask;
  return dig.get_ui();
}

DigitMatrix encode_shifted_weights(const IntMatrix& m, const Int& shift) {
  if (shift < 0 || !shift.fits_ulong_p())
    throw InvalidParameter("encode_shifted_weights: bad weight bound");
  DigitMatrix out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.digit_bits = 32;
  out.max_exponent = 2 * shift.get_ui();
  out.enc.resize(m.rows * m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i] > shift || m.a[i] < -shift)
      throw InvalidParameter("encode_shifted_weights: |weight| exceeds the bound");
    const Int exp = m.a[i] + shift;
    mpz_setbit(out.enc[i].get_mpz_t(),
               exp.get_ui() * static_cast<unsigned long>(out.digit_bits));
  }
  return out;
}

DigitMatrix digit_matmul(const DigitMatrix& a, const DigitMatrix& b) {
  if (a.cols != b.rows)
    throw DimensionMismatch("digit_matmul: inner dimensions differ");
  if (a.digit_bits != b.digit_bits)
    throw InvalidParameter("digit_matmul: digit widths differ");
  // Counts per exponent stay below the inner dimension, so digit groups
  // cannot carry into each other and the ordinary product is exact.
  if (b.rows >= (std::uint64_t{1} << a.digit_bits))
    throw ResourceLimit("digit_matmul: inner dimension overflows a digit group");

  IntMatrix am, bm;
  am.rows = a.rows;
  am.cols = a.cols;
  am.a = a.enc;
  bm.rows = b.rows;
  bm.cols = b.cols;
  bm.a = b.enc;
  IntMatrix prod = dense_matmul(am, bm);

  DigitMatrix out;
  out.rows = prod.rows;
  out.cols = prod.cols;
  out.digit_bits = a.digit_bits;
  out.max_exponent = a.max_exponent + b.max_exponent;
  out.enc = std::move(prod.a);
  return out;
}

MinPlusMatrix decode_min_plus(const DigitMatrix& m, const Int& total_shift) {
  MinPlusMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.enc.size(); ++i) {
    if (m.enc[i] == 0) continue;  // stays +infinity
    const unsigned long bit = mpz_scan1(m.enc[i].get_mpz_t(), 0);
    out.w[i] = Int(bit / m.digit_bits) - total_shift;
  }
  return out;
}

TriangleResult min_weight_triangle_encoded(const KPartiteGraph& g,
                                           const Int& weight_bound) {
  require_triangle_graph(g);
  if (weight_bound < 0)
    throw InvalidParameter("min_weight_triangle_encoded: negative weight bound");

  // (4W+1) digit groups of digit_bits bits per product entry; refuse before
  // allocating when that exceeds the element budget (8 bytes per element).
  const Int groups = 4 * weight_bound + 1;
  const Int bytes = groups * 4 *
                    Int(static_cast<unsigned long>(
                        g.parts[0] * g.parts[1] + g.parts[1] * g.parts[2] +
                        g.parts[0] * g.parts[2]));
  if (bytes > 8 * Int(static_cast<unsigned long>(element_budget())))
    throw ResourceLimit(
        "min_weight_triangle_encoded: encoding exceeds the element budget; "
        "use the naive triangle path for weights this large");

  DigitMatrix a = encode_shifted_weights(g.pair_w[g.pair_index(0, 1)], weight_bound);
  DigitMatrix b = encode_shifted_weights(g.pair_w[g.pair_index(1, 2)], weight_bound);
  MinPlusMatrix path = decode_min_plus(digit_matmul(a, b), 2 * weight_bound);
  return close_triangle(g, path);
}

}  // namespace cvplat
