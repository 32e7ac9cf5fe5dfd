#pragma once

#include "symvar/exact_field.hpp"

#include <Eigen/SparseCore>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace symvar {

// Lambda W for W = <e1, e2, e3, u, f1, f2, f3>, u = e0 + f0. Subsets of the
// labels 1..7 are ordered by size, then lexicographically.
const std::vector<std::vector<int>>& all_subsets();   // 128
const std::vector<std::vector<int>>& even_subsets();  // 64
// position of an increasing label list in even_subsets(); -1 if absent
int even_index(const std::vector<int>& labels);

using EvenForms = VecS;  // 64 coordinates
using SkewParam = MatS;  // 7 x 7, entry (i-1, j-1) is x_{i,j}

// coordinate at S is the Pfaffian of p on S, 1 at the empty set
EvenForms pfaffian_chart(const SkewParam& p);

// x12 - [1,2,4,5,6,7], x13 - [1,3,4,5,6,7], x23 - [2,3,4,5,6,7], x47 - [1,2,3,4]
std::array<Scalar, 4> v1_equations(const SkewParam& p);

// the 21 pairs (i, j), i < j, lexicographic
const std::vector<std::pair<int, int>>& chart_pairs();
// the 17 pairs that stay free in solve_graph: all but (1,2), (1,3), (2,3), (3,4)
const std::vector<std::pair<int, int>>& graph_free_pairs();

// Point of the graph of the four equations. x12, x13, x23 are solved over
// D = 1 - [4,5,6,7]; x34 is solved from the fourth relation, which is affine in
// x34 after the substitution (x34 = 0 when the relation vanishes identically).
// Throws std::domain_error when D vanishes or the relation is a nonzero
// constant (re-sample).
SkewParam solve_graph(const std::array<Scalar, 17>& free);

// second difference in x47 of x47 * D - (x34 R12 - x24 R13 + x14 R23), where
// R_ij = [i,j,4,5,6,7] at x_ij = 0; nonzero means the substituted fourth
// relation is quadratic in x47
Scalar x47_second_difference(const SkewParam& p);

// d/dx_{ij} of equations * pfaffian_chart at p (each Pfaffian is affine in a
// single entry, so the difference quotient at 0 and 1 is exact)
MatS chart_jacobian(const MatS& equations, const SkewParam& p);

// g2 x g2 acting on Lambda W through the Clifford module of V1 + V2.
// V1 and V2 carry B(e0, e0) = 1, B(e_i, e_-i) = -2 and its negative; g2 is the
// stabilizer of phi with beta = 2.
class SpinorModel {
 public:
  using Op = Eigen::SparseMatrix<Rational>;

  SpinorModel();

  // 14 x 14 Gram matrix on e_{-3..3} (0..6), f_{-3..3} (7..13)
  const MatQ& form() const { return form_; }
  // 7 x 7 basis of g2 on e_{-3}..e_3
  const std::vector<MatQ>& g2() const { return g2_; }
  // 12 root vectors for H = diag(3, -2, -1, 0, 1, 2, -3)
  const std::vector<MatQ>& root_vectors() const { return roots_; }
  const MatQ& cartan_element() const { return h_; }

  // Clifford action of basis vector a of V1 + V2 on the 128-space
  const Op& clifford(int a) const { return cl_.at(a); }
  Op clifford(const VecQ& v) const;
  // spin action of X in so(V1 + V2)
  Op rho(const MatQ& x14) const;
  // g2 element acting on factor 1 or 2, restricted to the even part
  MatQ rho_even(const MatQ& x7, int factor) const;

  struct Decomposition {
    MatQ trivial, v1, v2, v1v2;  // column bases
    MatQ equations;              // rows annihilate v1v2 + trivial
    bool direct_sum = false;
  };
  const Decomposition& decomposition() const;

  // the pure spinor annihilated by e_k + f_k, normalized at the empty set
  VecQ base_point() const;
  // exp(c rho(E)) applied across random root vectors E on both factors
  VecQ orbit_sample(std::uint64_t seed, int rounds = 6) const;
  // projective dimension of the span of s and all g2 x g2 translates of s
  long orbit_tangent_dim(const VecQ& s) const;

 private:
  MatQ form_, h_;
  std::vector<MatQ> g2_, roots_;
  std::vector<Op> cl_;
  MatQ w_basis_inv_;  // coordinates in (W, W~)
  std::vector<MatQ> rho1_, rho2_, root_rho1_, root_rho2_;
  mutable std::vector<Decomposition> dec_;
};

MatQ embed_factor(const MatQ& x7, int factor);

struct SpinorSample {
  SkewParam x;
  bool chart_matches = false;  // pfaffian_chart(x) equals the sample
  bool on_section = false;     // all equations vanish
  long jacobian_rank = 0;
  long local_dim = 0;          // 21 - rank
  long orbit_dim = 0;
};
SpinorSample analyze_sample(const SpinorModel& m, const VecQ& s);

struct DecompositionAudit {
  int total = 0, v1v2 = 0, v1 = 0, v2 = 0, trivial = 0;
  bool direct_sum = false;
  int explicit_rank = 0;  // rank of the V1, V2 and trivial bases together
  // g2-invariants in the spin module Lambda W1 of so(V1), on the subsets
  // {}, 1, 2, 3, 12, 13, 23, 123
  int w1_invariant_dim = 0;
  std::vector<Rational> w1_invariant;  // scaled so the e1^e2^e3 coefficient is 1
  // dimension of the g2-module generated by W1 + Lambda^2 W1 in Lambda W1
  int w1_module_dim = 0;
  // stated vectors 2 sqrt(-2) e_i^e_j + e_i^e_j^u^f1^f2^f3
  int stated_v1_rank = 0;
  int stated_v1_in_v1 = 0;
  // c with c e_i^e_j + e_i^e_j^u^f1^f2^f3 in V1, one per pair (12, 13, 23)
  std::vector<Rational> v1_coefficients;
  bool base_point_on_section = false;  // the chart origin satisfies all equations
};
DecompositionAudit decomposition_audit(const SpinorModel& m);

}  // namespace symvar
