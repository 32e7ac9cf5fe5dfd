#pragma once

#include "symvar/exact_field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symvar {

// Finite-dimensional unital algebra over Q(i,sqrt2) given by structure constants.
// The unit basis vector is orthogonal to all others for the norm form, so the
// conjugate negates every non-unit coordinate.
class CompositionAlgebra {
 public:
  struct Term {
    int k;
    Scalar coef;
  };

  CompositionAlgebra(std::string name, int dim, int unit, std::vector<std::vector<Term>> table);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int unit() const { return unit_; }
  // e_i e_j as sparse terms
  const std::vector<Term>& product(int i, int j) const { return table_[i * dim_ + j]; }

  VecS mul(const VecS& x, const VecS& y) const;
  VecS conj(const VecS& x) const;
  Scalar norm(const VecS& x) const;
  Scalar polar(const VecS& x, const VecS& y) const;
  VecS one() const;
  VecS basis(int i) const;

 private:
  std::string name_;
  int dim_, unit_;
  std::vector<std::vector<Term>> table_;
};

using AlgebraPtr = std::shared_ptr<const CompositionAlgebra>;

class AlgElement {
 public:
  AlgElement(AlgebraPtr alg, VecS c);
  static AlgElement basis(const AlgebraPtr& alg, int i);
  static AlgElement one(const AlgebraPtr& alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const VecS& coeffs() const { return c_; }

  AlgElement conj() const { return {alg_, alg_->conj(c_)}; }
  Scalar norm() const { return alg_->norm(c_); }
  VecS imaginary_part() const;

  friend AlgElement operator*(const AlgElement& x, const AlgElement& y);
  friend AlgElement operator+(const AlgElement& x, const AlgElement& y);
  friend AlgElement operator-(const AlgElement& x, const AlgElement& y);
  friend AlgElement operator*(const Scalar& s, const AlgElement& x);
  friend bool operator==(const AlgElement& x, const AlgElement& y);

 private:
  AlgebraPtr alg_;
  VecS c_;
};

// the one-dimensional algebra (the scalars themselves)
AlgebraPtr scalar_algebra();
// doubling with parameter -1: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
AlgebraPtr cayley_dickson(const AlgebraPtr& base);
// dim in {1,2,4,8} by repeated doubling
AlgebraPtr standard_algebra(int dim);

AlgElement associator(const AlgElement& a, const AlgElement& b, const AlgElement& c);
VecS associator(const CompositionAlgebra& A, const VecS& a, const VecS& b, const VecS& c);

// basis of the derivation algebra, each a dim x dim matrix acting on coordinates
std::vector<MatS> derivations(const CompositionAlgebra& A);

// columns: basis of the unital subalgebra generated by gens
MatS subalgebra_closure(const CompositionAlgebra& A, const std::vector<VecS>& gens);
MatS subalgebra_closure(const std::vector<AlgElement>& gens);

bool is_quaternion_subalgebra(const CompositionAlgebra& A, const MatS& basis);
bool is_quaternion_subalgebra(const std::vector<AlgElement>& basis);

// composition identity N(xy) = N(x)N(y), checked on all pairs from
// {e_i} u {e_i + e_j}; a biquadratic form vanishing there vanishes identically
bool composition_identity_holds(const CompositionAlgebra& A);

}  // namespace symvar
