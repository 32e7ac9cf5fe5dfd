#pragma once
// Reference routines used only by the tests. They share no code with the
// library's elimination-based implementations.

#include "symvar/exact_field.hpp"

#include <vector>

namespace oracle {

// cofactor expansion along the first row
template <class T>
T laplace_det(const symvar::Mat<T>& M) {
  const Eigen::Index n = M.rows();
  if (n == 0) return T(1);
  if (n == 1) return M(0, 0);
  T acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (M(0, j) == T(0)) continue;
    symvar::Mat<T> m(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) m(r - 1, cc++) = M(r, c);
    T t = M(0, j) * laplace_det(m);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

// sum over perfect matchings: pair the first index with each other one
template <class T>
T matching_pf(const symvar::Mat<T>& M, std::vector<int> idx) {
  if (idx.empty()) return T(1);
  const int first = idx[0];
  T acc(0);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    T t = M(first, idx[k]) * matching_pf(M, rest);
    acc = (k % 2 == 1) ? acc + t : acc - t;
  }
  return acc;
}

}  // namespace oracle
