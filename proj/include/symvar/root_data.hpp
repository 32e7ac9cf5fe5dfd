#pragma once

#include "symvar/exact_field.hpp"

#include <string>
#include <vector>

namespace symvar {

using Weight = VecQ;

struct RootComponent {
  char family;  // 'A'..'G'
  int rank;
  int offset;   // first simple root index in the product
};

// Root system in simple-root coordinates. Labels follow Bourbaki except G2,
// where alpha_1 is the long simple root.
class RootSystem {
 public:
  // "G2", "A2xA2", "B3", "E6", ...
  explicit RootSystem(const std::string& type);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  const MatQ& gram() const { return gram_; }
  const Mat<long>& cartan() const { return cartan_; }
  const std::vector<RootComponent>& components() const { return comps_; }
  const std::vector<VecQ>& roots() const { return roots_; }
  std::vector<VecQ> positive_roots() const;
  VecQ simple_root(int i) const;

  Rational pairing(const VecQ& x, const VecQ& y) const { return x.dot(gram_ * y); }
  VecQ coroot(const VecQ& alpha) const;
  VecQ simple_coroot(int i) const { return coroot(simple_root(i)); }
  VecQ reflect(const VecQ& x, const VecQ& alpha) const;
  bool is_root(const VecQ& v) const;
  int root_index(const VecQ& v) const;  // -1 when absent

 private:
  std::string type_;
  int rank_ = 0;
  std::vector<RootComponent> comps_;
  Mat<long> cartan_;
  MatQ gram_;
  std::vector<VecQ> roots_;
};

// Cartan matrix A(i,j) = 2(a_i,a_j)/(a_j,a_j) of an irreducible type, in the labeling above
Mat<long> cartan_matrix(char family, int rank);
// squared lengths of the simple roots in the normalization used here
std::vector<long> root_lengths(char family, int rank);

std::vector<Weight> fundamental_weights(const RootSystem& R);
std::vector<VecQ> fundamental_coweights(const RootSystem& R);
bool is_dominant(const Weight& w, const RootSystem& R);

long dim_group(const RootSystem& R);
// dimension of G/P where P omits the marked simple roots (1-based) from its Levi
long dim_flag(const RootSystem& R, const std::vector<int>& marked);

}  // namespace symvar
