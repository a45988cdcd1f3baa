#include "cvplat/generate.hpp"

#include <algorithm>

namespace cvplat {

std::uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidParameter("Rng::uniform: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi - lo) + 1;  // span 0 means the full 2^64
  const std::uint64_t r = span == 0 ? next() : next() % span;
  return lo + static_cast<std::int64_t>(r);
}

std::string gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Uniform: return "uniform";
    case GenMode::PlantedZero: return "planted-zero";
    case GenMode::PlantedNear: return "planted-near";
  }
  throw InvalidParameter("gen_mode_name: bad mode");
}

GenMode parse_gen_mode(const std::string& name) {
  if (name == "uniform") return GenMode::Uniform;
  if (name == "planted-zero") return GenMode::PlantedZero;
  if (name == "planted-near") return GenMode::PlantedNear;
  throw InvalidParameter("unknown generator mode: '" + name + "'");
}

namespace {

IntVector random_vector(Rng& rng, std::size_t m, std::int64_t bound) {
  IntVector v(m);
  for (std::size_t i = 0; i < m; ++i)
    v.e[i] = static_cast<long>(rng.uniform(-bound, bound));
  return v;
}

std::vector<std::uint8_t> random_bits(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = static_cast<std::uint8_t>(rng.next() & 1);
  return z;
}

IntVector combine(const std::vector<IntVector>& basis,
                  const std::vector<std::uint8_t>& z, std::size_t m) {
  IntVector v(m);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (z[i]) add_in_place(v, basis[i]);
  return v;
}

void check_gen_params(std::size_t n, std::size_t m, std::uint64_t coord_bound) {
  if (n == 0 || m == 0)
    throw InvalidParameter("generate: need n >= 1 and m >= 1");
  if (coord_bound == 0 || coord_bound > (std::uint64_t{1} << 62))
    throw InvalidParameter("generate: coordinate bound out of range");
}

}  // namespace

GeneratedCvp generate_instance(std::size_t n, std::size_t m, unsigned p,
                               std::uint64_t coord_bound, GenMode mode,
                               std::uint64_t seed, std::uint64_t perturb_bound) {
  check_gen_params(n, m, coord_bound);
  Rng rng(seed);
  const auto bound = static_cast<std::int64_t>(coord_bound);

  GeneratedCvp out;
  out.seed = seed;
  out.coord_bound = coord_bound;
  out.mode = mode;
  out.inst.p = p;
  out.inst.basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.inst.basis.push_back(random_vector(rng, m, bound));

  switch (mode) {
    case GenMode::Uniform: {
      out.inst.target = random_vector(rng, m, bound);
      // threshold taken from a random witness, so the instance is YES
      const auto z = random_bits(rng, n);
      out.inst.threshold_pow =
          norm_pow(sub(combine(out.inst.basis, z, m), out.inst.target), p);
      break;
    }
    case GenMode::PlantedZero: {
      out.planted = random_bits(rng, n);
      out.inst.target = combine(out.inst.basis, *out.planted, m);
      out.inst.threshold_pow = 0;
      break;
    }
    case GenMode::PlantedNear: {
      out.planted = random_bits(rng, n);
      const IntVector error =
          random_vector(rng, m, static_cast<std::int64_t>(perturb_bound));
      out.inst.target = add(combine(out.inst.basis, *out.planted, m), error);
      out.inst.threshold_pow = norm_pow(error, p);
      break;
    }
  }
  out.inst.validate();
  return out;
}

GeneratedSvp generate_svp_instance(std::size_t n, std::size_t m, unsigned p,
                                   std::uint64_t coord_bound, GenMode mode,
                                   std::uint64_t seed) {
  check_gen_params(n, m, coord_bound);
  Rng rng(seed);
  const auto bound = static_cast<std::int64_t>(coord_bound);

  GeneratedSvp out;
  out.seed = seed;
  out.coord_bound = coord_bound;
  out.mode = mode;
  out.inst.p = p;
  out.inst.basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.inst.basis.push_back(random_vector(rng, m, bound));

  switch (mode) {
    case GenMode::Uniform: {
      auto z = random_bits(rng, n);
      while (std::all_of(z.begin(), z.end(),
                         [](std::uint8_t v) { return v == 0; }))
        z = random_bits(rng, n);
      out.inst.threshold_pow = norm_pow(combine(out.inst.basis, z, m), p);
      break;
    }
    case GenMode::PlantedZero: {
      // overwrite one selected column so the planted z sums to zero
      auto z = random_bits(rng, n);
      z[rng.next() % n] = 1;
      std::size_t fix = n;
      for (std::size_t i = 0; i < n; ++i)
        if (z[i]) {
          fix = i;
          break;
        }
      IntVector rest(m);
      for (std::size_t i = 0; i < n; ++i)
        if (z[i] && i != fix) add_in_place(rest, out.inst.basis[i]);
      for (std::size_t c = 0; c < m; ++c) out.inst.basis[fix].e[c] = -rest.e[c];
      out.planted = std::move(z);
      out.inst.threshold_pow = 0;
      break;
    }
    case GenMode::PlantedNear:
      throw InvalidParameter("generate_svp_instance: planted-near applies to CVP only");
  }
  out.inst.validate();
  return out;
}

}  // namespace cvplat
