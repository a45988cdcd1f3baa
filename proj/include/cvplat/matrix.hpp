#pragma once

#include <cstddef>
#include <vector>

#include "cvplat/bigint.hpp"
#include "cvplat/errors.hpp"

namespace cvplat {

// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  bool operator==(const IntMatrix&) const = default;
};

// Plain dense product over (+,*). The encoded triangle solver funnels its
// digit-encoded entries through this kernel, so swapping in a faster dense
// multiply speeds that path up without touching the encoding.
IntMatrix dense_matmul(const IntMatrix& a, const IntMatrix& b);

}  // namespace cvplat
