#pragma once

#include "symvar/jordan.hpp"
#include "symvar/sampling.hpp"

namespace testing_helpers {

inline symvar::VecS random_vec(symvar::Sampler& s, int n) {
  symvar::VecS v(n);
  for (int i = 0; i < n; ++i) v(i) = s.mixed();
  return v;
}

inline symvar::Herm3 random_herm(symvar::Sampler& s, const symvar::AlgebraPtr& alg) {
  const int d = alg->dim();
  return symvar::Herm3(alg, {s.mixed(), s.mixed(), s.mixed()},
                       {random_vec(s, d), random_vec(s, d), random_vec(s, d)});
}

}  // namespace testing_helpers
