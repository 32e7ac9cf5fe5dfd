#pragma once

#include "symvar/comp_alg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace symvar {

// 7-space with basis e_{-3}..e_3 at indices 0..6, a quadratic form q and an
// alternating 3-form phi = e0*(e1 e-1 + e2 e-2 + e3 e-3) + beta (e1 e2 e3 + e-1 e-2 e-3)
struct SevenSpace {
  MatQ gram;  // B, polarization of q
  Rational beta;

  static int index(int label) { return label + 3; }
  // q = (e0*)^2 + sum e_i* e_-i*, beta = 2, as stated
  static SevenSpace stated();
  // B(e0, e0) = 1, B(e_i, e_-i) = pair
  static SevenSpace with(const Rational& pair, const Rational& beta);

  Rational phi(const VecQ& a, const VecQ& b, const VecQ& c) const;
  Rational q(const VecQ& v) const { return v.dot(gram * v); }
  // B^{-1} phi(a, b, .)
  VecQ cross(const VecQ& a, const VecQ& b) const;
};

// The algebra C1 + V with a.b = -B(a,b) 1 + kappa (a x b). Index 0 is the unit,
// index 1 + k is basis vector k of V. kappa is fixed by the composition identity
// on one pair; throws std::domain_error when no kappa in Q(i,sqrt2) works.
struct QPhiOctonions {
  AlgebraPtr algebra;
  Scalar kappa;
};
QPhiOctonions octonion_from_q_phi(const SevenSpace& V);

// Lambda^3 coordinates: lexicographic increasing triples of {0..6}
int triple_index(int i, int j, int k);
std::array<int, 3> triple(int t);
// e_i ^ e_j ^ e_k for arbitrary distinct indices (sign-normalized)
VecS wedge(int i, int j, int k);

// 35 x 8, row t = [e_i, e_j, e_k] for triple t of imaginary units
MatS associator_map(const CompositionAlgebra& A);
// [e_p(i), e_p(j), e_p(k)] = sign(p) [e_i, e_j, e_k] on all ordered triples
bool associator_alternating(const CompositionAlgebra& A);

// the seven vectors of the V-summand of Lambda^3 V as stated; with
// corrected = true the term -e1^e-1^e-2 of the last one reads -e2^e-1^e-2
std::vector<VecS> listed_weight_vectors(bool corrected = false);
// e1 ^ e-2 ^ e-3
VecS highest_weight_vector();

// induced action of a derivation (8 x 8, unit at 0) on Lambda^3 Im
MatS wedge3_action(const MatS& derivation);
// phi with both indices raised by B, as a vector of Lambda^3 V
VecS invariant_trivector(const SevenSpace& V);

// rows j = 1, -2, -3; columns i = 2, 3, 0, -1
struct ChartPoint {
  std::array<std::array<Scalar, 4>, 3> a;
  Scalar& at(int row, int col);
  const Scalar& at(int row, int col) const;
};
// free coordinates a12, a13, a22, a23, a20, a32, a33, a30
ChartPoint chart_point(const std::array<Scalar, 8>& free);
// T_{rows, cols}: minor of (a_ij) on row labels {1,2,3} and column labels {2,3,0,-1}
Scalar chart_minor(const ChartPoint& p, const std::vector<int>& rows, const std::vector<int>& cols);
std::array<Scalar, 3> chart_residuals(const ChartPoint& p);
// third residual replaced by -T_{123,230} - T_{12,3-1} + T_{13,2-1}
std::array<Scalar, 3> chart_residuals_corrected(const ChartPoint& p);
// 7 x 3, column r spans e_j + sum_i a_ij e_i
MatS chart_plane(const ChartPoint& p);

// columns of W embedded as imaginary elements
VecS plane_associator(const CompositionAlgebra& A, const MatS& W);
bool quaternion_characterization(const CompositionAlgebra& A, const MatS& W);

}  // namespace symvar
