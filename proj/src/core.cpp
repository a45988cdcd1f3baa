#include "cvplat/core.hpp"

#include <algorithm>
#include <map>

namespace cvplat {

bool IntVector::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
}

namespace {

void require_same_dim(const IntVector& a, const IntVector& b,
                      const char* where) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(where) + ": dimensions " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()) + " differ");
}

void require_even_p(unsigned p, const char* where) {
  if (p == 0 || p % 2 != 0)
    throw UnsupportedNorm(std::string(where) + ": p must be a positive even integer, got " +
                          std::to_string(p));
}

}  // namespace

IntVector add(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "add");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "sub");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

void add_in_place(IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "add_in_place");
  for (std::size_t i = 0; i < a.dim(); ++i) a.e[i] += b.e[i];
}

void sub_in_place(IntVector& a, const IntVector& b) {
  require_same_dim(a, b, "sub_in_place");
  for (std::size_t i = 0; i < a.dim(); ++i) a.e[i] -= b.e[i];
}

void CvpInstance::validate() const {
  if (basis.empty()) throw InvalidParameter("instance: rank n must be >= 1");
  if (target.dim() == 0) throw InvalidParameter("instance: dimension m must be >= 1");
  require_even_p(p, "instance");
  if (threshold_pow < 0) throw InvalidParameter("instance: threshold_pow must be >= 0");
  for (const IntVector& b : basis) require_same_dim(b, target, "instance basis");
}

void SvpInstance::validate() const {
  if (basis.empty()) throw InvalidParameter("instance: rank n must be >= 1");
  if (basis.front().dim() == 0)
    throw InvalidParameter("instance: dimension m must be >= 1");
  require_even_p(p, "instance");
  if (threshold_pow < 0) throw InvalidParameter("instance: threshold_pow must be >= 0");
  for (const IntVector& b : basis) require_same_dim(b, basis.front(), "instance basis");
}

Int norm_pow(const IntVector& v, unsigned p) {
  require_even_p(p, "norm_pow");
  Int sum = 0;
  Int term;
  for (const Int& x : v.e) {
    mpz_pow_ui(term.get_mpz_t(), x.get_mpz_t(), p);
    sum += term;  // x^p >= 0 since p is even
  }
  return sum;
}

Int mvp(std::span<const IntVector* const> vs) {
  if (vs.empty()) throw InvalidParameter("mvp: empty vector sequence");
  const std::size_t m = vs.front()->dim();
  for (const IntVector* v : vs)
    if (v->dim() != m) throw DimensionMismatch("mvp: dimensions differ");
  Int sum = 0;
  Int prod;
  for (std::size_t i = 0; i < m; ++i) {
    prod = (*vs.front())[i];
    for (std::size_t j = 1; j < vs.size() && prod != 0; ++j) prod *= (*vs[j])[i];
    sum += prod;
  }
  return sum;
}

Int mvp(const std::vector<IntVector>& vs) {
  std::vector<const IntVector*> ptrs;
  ptrs.reserve(vs.size());
  for (const IntVector& v : vs) ptrs.push_back(&v);
  return mvp(std::span<const IntVector* const>(ptrs));
}

Int norm_pow_via_mvp(const std::vector<Int>& coeffs,
                     const std::vector<IntVector>& vs, unsigned p) {
  require_even_p(p, "norm_pow_via_mvp");
  if (coeffs.size() != vs.size() || vs.empty())
    throw InvalidParameter("norm_pow_via_mvp: need k >= 1 coefficients matching the vectors");
  const std::size_t k = vs.size();
  const std::size_t m = vs.front().dim();
  for (const IntVector& v : vs)
    if (v.dim() != m) throw DimensionMismatch("norm_pow_via_mvp: dimensions differ");

  // mvp is symmetric, so cache by sorted index tuple; the full ordered sum
  // over [k]^p then only evaluates each multiset once.
  std::map<std::vector<std::size_t>, Int> memo;
  std::vector<std::size_t> tuple(p, 0);
  std::vector<std::size_t> key(p);
  std::vector<const IntVector*> args(p);
  Int sum = 0;
  Int coeff_prod;
  for (;;) {
    coeff_prod = 1;
    for (std::size_t j = 0; j < p && coeff_prod != 0; ++j)
      coeff_prod *= coeffs[tuple[j]];
    if (coeff_prod != 0) {
      key.assign(tuple.begin(), tuple.end());
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      if (it == memo.end()) {
        for (std::size_t j = 0; j < p; ++j) args[j] = &vs[key[j]];
        it = memo.emplace(key, mvp(std::span<const IntVector* const>(args))).first;
      }
      sum += coeff_prod * it->second;
    }
    // odometer over [k]^p
    std::size_t pos = 0;
    while (pos < p && ++tuple[pos] == k) tuple[pos++] = 0;
    if (pos == p) break;
  }
  return sum;
}

std::size_t sigma_target_count(std::span<const std::size_t> tuple,
                               std::size_t sentinel) {
  return static_cast<std::size_t>(
      std::count(tuple.begin(), tuple.end(), sentinel));
}

}  // namespace cvplat
