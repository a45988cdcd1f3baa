#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvplat/core.hpp"

namespace cvplat {

// Deterministic generator state (splitmix64): identical seeds give identical
// instances on every platform, which keeps generated files byte-stable.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
};

enum class GenMode { Uniform, PlantedZero, PlantedNear };

std::string gen_mode_name(GenMode mode);
GenMode parse_gen_mode(const std::string& name);

struct GeneratedCvp {
  CvpInstance inst;
  std::optional<std::vector<std::uint8_t>> planted;
  std::uint64_t seed = 0;
  std::uint64_t coord_bound = 0;
  GenMode mode = GenMode::Uniform;
};

struct GeneratedSvp {
  SvpInstance inst;
  std::optional<std::vector<std::uint8_t>> planted;
  std::uint64_t seed = 0;
  std::uint64_t coord_bound = 0;
  GenMode mode = GenMode::Uniform;
};

// Basis and target coordinates drawn uniformly from [-coord_bound,
// coord_bound]. PlantedZero sets t = B z* for a random z* (threshold 0);
// PlantedNear perturbs that by e with |e_i| <= perturb_bound and sets the
// threshold to ||e||_p^p; Uniform draws t independently and takes the
// threshold from a random z, so the instance is a YES instance with a known
// witness in every mode.
GeneratedCvp generate_instance(std::size_t n, std::size_t m, unsigned p,
                               std::uint64_t coord_bound, GenMode mode,
                               std::uint64_t seed,
                               std::uint64_t perturb_bound = 1);

// For PlantedZero one selected column is overwritten so the planted nonzero
// z* sums to the zero vector exactly.
GeneratedSvp generate_svp_instance(std::size_t n, std::size_t m, unsigned p,
                                   std::uint64_t coord_bound, GenMode mode,
                                   std::uint64_t seed);

}  // namespace cvplat
