#pragma once

#include "symvar/exact_field.hpp"

#include <cstdint>
#include <random>

namespace symvar {

// Small random rationals p/q with |p| <= num_bound, 1 <= q <= den_bound.
// Draws are taken directly from mt19937_64 so sequences are identical across
// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int num_bound = 5, int den_bound = 3)
      : gen_(seed), num_bound_(num_bound), den_bound_(den_bound) {}

  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero_rational();
  // random element with all four components drawn
  Scalar scalar();
  // rational with probability 1/2, full field element otherwise
  Scalar mixed();

 private:
  std::mt19937_64 gen_;
  int num_bound_, den_bound_;
};

}  // namespace symvar
