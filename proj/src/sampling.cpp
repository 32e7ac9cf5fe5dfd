#include "symvar/sampling.hpp"

namespace symvar {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(gen_() % span);
}

Rational Sampler::rational() {
  return Rational(integer(-num_bound_, num_bound_), integer(1, den_bound_));
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

Scalar Sampler::scalar() { return {rational(), rational(), rational(), rational()}; }

Scalar Sampler::mixed() {
  if (integer(0, 1) == 0) return Scalar(rational());
  return scalar();
}

}  // namespace symvar
