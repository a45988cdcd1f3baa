#include "cvplat/matrix.hpp"

#include <thread>

#include "cvplat/runtime.hpp"

namespace cvplat {

namespace {

void matmul_rows(const IntMatrix& a, const IntMatrix& b, IntMatrix& out,
                 std::size_t row_begin, std::size_t row_end) {
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      Int& acc = out.at(i, j);
      for (std::size_t l = 0; l < a.cols; ++l)
        mpz_addmul(acc.get_mpz_t(), a.at(i, l).get_mpz_t(),
                   b.at(l, j).get_mpz_t());
    }
  }
}

}  // namespace

IntMatrix dense_matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows)
    throw DimensionMismatch("dense_matmul: inner dimensions differ");
  IntMatrix out(a.rows, b.cols);
  const unsigned workers = worker_count();
  if (workers <= 1 || a.rows < 2) {
    matmul_rows(a, b, out, 0, a.rows);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (a.rows + workers - 1) / workers;
  for (std::size_t begin = 0; begin < a.rows; begin += chunk) {
    const std::size_t end = std::min(a.rows, begin + chunk);
    pool.emplace_back(matmul_rows, std::cref(a), std::cref(b), std::ref(out),
                      begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace cvplat
