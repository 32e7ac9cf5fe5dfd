#pragma once

#include "symvar/comp_alg.hpp"

#include <array>
#include <optional>

namespace symvar {

// 3x3 matrix with entries in a composition algebra
struct AlgMatrix3 {
  AlgebraPtr alg;
  std::array<VecS, 9> e;  // row-major
  VecS& operator()(int i, int j) { return e[3 * i + j]; }
  const VecS& operator()(int i, int j) const { return e[3 * i + j]; }
};

AlgMatrix3 operator*(const AlgMatrix3& A, const AlgMatrix3& B);
AlgMatrix3 operator+(const AlgMatrix3& A, const AlgMatrix3& B);
bool is_hermitian(const AlgMatrix3& A);

//   [ r1      conj(x3)  conj(x2) ]
//   [ x3      r2        conj(x1) ]
//   [ x2      x1        r3       ]
class Herm3 {
 public:
  Herm3(AlgebraPtr alg, std::array<Scalar, 3> r, std::array<VecS, 3> x);
  static Herm3 identity(const AlgebraPtr& alg);
  static Herm3 diag(const AlgebraPtr& alg, const Scalar& r1, const Scalar& r2, const Scalar& r3);
  static Herm3 zero(const AlgebraPtr& alg);
  // throws if A is not Hermitian
  static Herm3 from_matrix(const AlgMatrix3& A);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::array<Scalar, 3>& r() const { return r_; }
  const std::array<VecS, 3>& x() const { return x_; }

  AlgMatrix3 matrix() const;
  Scalar trace() const { return r_[0] + r_[1] + r_[2]; }
  // coordinates (r1, r2, r3, x1, x2, x3) of length 3 + 3 dim A
  VecS coords() const;

  friend Herm3 operator+(const Herm3& A, const Herm3& B);
  friend Herm3 operator-(const Herm3& A, const Herm3& B);
  friend Herm3 operator*(const Scalar& s, const Herm3& A);
  friend bool operator==(const Herm3& A, const Herm3& B);

 private:
  AlgebraPtr alg_;
  std::array<Scalar, 3> r_;
  std::array<VecS, 3> x_;
};

Herm3 jordan_product(const Herm3& A, const Herm3& B);
Herm3 comatrix(const Herm3& P);
Scalar det3(const Herm3& P);
// trace(A o B), the symmetric trace form
Scalar trace_form(const Herm3& A, const Herm3& B);

struct CofactorCheck {
  bool product_hermitian = false;
  bool identity_holds = false;         // com(P) P == det(P) I, ordinary product
  bool jordan_identity_holds = false;  // com(P) o P == det(P) I
  // when com(P) P - det(P) I = c I with c purely imaginary, c is recorded here
  std::optional<VecS> scalar_defect;
};
CofactorCheck check_cofactor_identity(const Herm3& P);

struct Zorn2 {
  Scalar z1;
  Herm3 z2;
  Herm3 z3;
  Scalar z4;
};

Zorn2 freudenthal_phi(const Scalar& x, const Herm3& P);
bool in_section(const Zorn2& z);

int jordan_dim(int alg_dim);
int zorn_dim(int alg_dim);

}  // namespace symvar
