#pragma once

#include "symvar/root_data.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symvar {

class InvolutionData {
 public:
  // theta: column j is theta(alpha_j) in simple-root coordinates
  InvolutionData(RootSystem R, MatQ theta);

  const RootSystem& root_system() const { return R_; }
  const MatQ& theta() const { return theta_; }
  VecQ apply(const VecQ& x) const { return theta_ * x; }
  // roots fixed by theta
  const std::vector<VecQ>& fixed_roots() const { return fixed_; }
  // dimension of the (-1)-eigenspace of theta on the weight space
  int minus_eigenspace_dim() const;

 private:
  RootSystem R_;
  MatQ theta_;
  std::vector<VecQ> fixed_;
};

// Checks that do not throw: theta^2 = 1, theta(R) = R, theta preserves the form.
struct InvolutionCheck {
  bool involutive = false;
  bool permutes_roots = false;
  bool orthogonal = false;
  bool ok() const { return involutive && permutes_roots && orthogonal; }
};
InvolutionCheck check_involution(const RootSystem& R, const MatQ& theta);

struct RestrictedComponent {
  std::string label;  // "A2", "B2", "BC2", "G2", ...
  char family;        // base family of the basis Cartan matrix
  int rank;
  bool nonreduced;
};

// Restricted root system. All vectors live in the ambient weight space in the
// simple-root coordinates of R_G; coweights are identified with weights by the form.
class RestrictedRootSystem {
 public:
  const InvolutionData& involution() const { return *inv_; }
  const RootSystem& ambient() const { return inv_->root_system(); }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::string& type() const { return type_; }
  const std::vector<RestrictedComponent>& components() const { return comps_; }

  const std::vector<VecQ>& roots() const { return roots_; }
  // alpha_1..alpha_s in canonical order
  const std::vector<VecQ>& basis() const { return basis_; }
  const std::vector<Rational>& b_factors() const { return b_; }
  const std::vector<VecQ>& coroots() const { return coroots_; }
  const std::vector<VecQ>& weights() const { return weights_; }
  const std::vector<VecQ>& coweights() const { return coweights_; }
  // number of ambient roots beta with beta - theta(beta) = alpha
  int multiplicity(const VecQ& alpha) const;
  // exceptional simple restricted roots (1-based labels)
  const std::vector<int>& exceptional() const { return exceptional_; }

  Rational b_factor(int i) const { return b_.at(i - 1); }
  const VecQ& restricted_coroot(int i) const { return coroots_.at(i - 1); }

  Rational pairing(const VecQ& x, const VecQ& y) const { return ambient().pairing(x, y); }
  // coordinates of a weight in the fundamental weights: (x, alpha_i^v)
  VecQ weight_coords(const VecQ& x) const;
  // coordinates of a coweight in the fundamental coweights: (alpha_i, x)
  VecQ coweight_coords(const VecQ& x) const;
  VecQ from_weight_coords(const VecQ& c) const;
  VecQ from_coweight_coords(const VecQ& c) const;
  bool is_dominant(const VecQ& w) const;
  // x in -C+, i.e. (alpha_i, x) <= 0 for all i
  bool in_valuation_cone(const VecQ& x) const;
  // s_i on the coweight side: x - (alpha_i, x) alpha_i^v
  VecQ reflect_coweight(const VecQ& x, int i) const;

  friend RestrictedRootSystem restrict(const InvolutionData& inv);

 private:
  std::shared_ptr<const InvolutionData> inv_;
  std::string type_;
  std::vector<RestrictedComponent> comps_;
  std::vector<VecQ> roots_, basis_, coroots_, weights_, coweights_;
  std::vector<Rational> b_;
  std::vector<int> exceptional_;
};

// throws std::domain_error when theta does not permute roots or is not an
// involution, and std::logic_error when the simple-root images do not form a
// basis of the restricted system (positive system not theta-compatible)
RestrictedRootSystem restrict(const InvolutionData& inv);

struct ValuationCone {
  std::vector<VecQ> generators;    // -omega_i^v
  std::vector<VecQ> inequalities;  // alpha_i, meaning (alpha_i, x) <= 0
  bool presentations_agree = false;
};
ValuationCone valuation_cone(const RestrictedRootSystem& rrs);

// lattice chi(S) and its dual chi_*(S), as bases in ambient coordinates
struct CharacterLattice {
  std::vector<VecQ> chi;
  std::vector<VecQ> chi_star;
};
CharacterLattice lattice_from_chi(const RestrictedRootSystem& rrs, const std::vector<VecQ>& chi);
CharacterLattice lattice_from_chi_star(const RestrictedRootSystem& rrs,
                                       const std::vector<VecQ>& chi_star);
CharacterLattice weight_lattice(const RestrictedRootSystem& rrs);
CharacterLattice root_lattice(const RestrictedRootSystem& rrs);

struct LatticeCheck {
  bool contains_root_lattice = false;
  bool inside_weight_lattice = false;
  Integer index_over_root_lattice = 0;  // [chi : root lattice]
};
LatticeCheck check_lattice(const RestrictedRootSystem& rrs, const CharacterLattice& L);

// dim G/G^theta: (-1)-eigenspace dimension plus half the number of roots not
// fixed by theta (fixed roots are taken compact)
long symmetric_space_dim(const InvolutionData& inv);

}  // namespace symvar
