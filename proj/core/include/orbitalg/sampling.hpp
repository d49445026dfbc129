#pragma once

#include "orbitalg/polynomial.hpp"

#include <cstdint>
#include <random>

namespace orbitalg {

// Seeded random polynomials with small rational coefficients. Draws only raw
// mt19937_64 output, so a seed gives the same polynomials on every platform.
class PolynomialSampler {
 public:
  explicit PolynomialSampler(std::uint64_t seed) : rng_(seed) {}

  // Up to max_terms terms of degree <= max_degree; may be zero.
  Polynomial sample(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms = 4);
  // Like sample() but never constant.
  Polynomial sample_nonconstant(std::size_t num_vars, std::uint32_t max_degree,
                                std::size_t max_terms = 4);

  std::uint64_t uniform(std::uint64_t bound) { return rng_() % bound; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace orbitalg
