#include "cvplat/runtime.hpp"

#include <atomic>

namespace cvplat {

namespace {
std::atomic<std::size_t> g_element_budget{std::size_t{1} << 28};
std::atomic<unsigned> g_workers{1};
}  // namespace

std::size_t element_budget() { return g_element_budget.load(); }

void set_element_budget(std::size_t budget) {
  g_element_budget.store(budget == 0 ? 1 : budget);
}

unsigned worker_count() { return g_workers.load(); }

void set_worker_count(unsigned n) { g_workers.store(n == 0 ? 1 : n); }

}  // namespace cvplat
