#pragma once

#include <random>

#include "acx/deformation.hpp"

namespace acx {

/// Seeded deterministic source for the identity sweeps.  Raw draws only, so
/// the stream is reproducible across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t k) { return eng_() % k; }

 private:
  std::mt19937_64 eng_;
};

/// Draws from {0, ±1, ±1/2, ±2, ±i, ±i/2}; small numerators keep the exact
/// arithmetic cheap.
Scalar random_small_scalar(Rng& rng);
Scalar random_small_nonzero(Rng& rng);

/// Random (p,q)-form with roughly half the basis words present.
Form random_form(Rng& rng, uint32_t n, int p, int q);

/// Random homogeneous vector-valued form.
VectorForm random_vector_form(Rng& rng, uint32_t n, int p, int q, bool value_anti);

/// Beltrami matrix with entries from the small-scalar set, rejecting draws
/// with singular transition.
Beltrami random_beltrami(Rng& rng, uint32_t n);

}  // namespace acx
