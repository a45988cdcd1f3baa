#pragma once

#include <cstddef>

namespace cvplat {

// Element budget shared by the enumeration stage and the encoded matrix
// product: both refuse up front (ResourceLimit) instead of exhausting memory.
// One element is one vector entry or one 8-byte digit group.
std::size_t element_budget();
void set_element_budget(std::size_t budget);

// Worker cap for the parallel kernels (min-plus rows, brute-force chunks).
// Results are deterministic regardless of the count.
unsigned worker_count();
void set_worker_count(unsigned n);

}  // namespace cvplat
