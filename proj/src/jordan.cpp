#include "symvar/jordan.hpp"

#include <stdexcept>

namespace symvar {

namespace {
VecS scalar_elt(const CompositionAlgebra& A, const Scalar& s) { return A.one() * s; }
bool is_scalar_elt(const CompositionAlgebra& A, const VecS& v) {
  for (int i = 0; i < A.dim(); ++i)
    if (i != A.unit() && !v(i).is_zero()) return false;
  return true;
}
}  // namespace

AlgMatrix3 operator*(const AlgMatrix3& A, const AlgMatrix3& B) {
  if (A.alg != B.alg) throw std::invalid_argument("matrices over different algebras");
  AlgMatrix3 C{A.alg, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      VecS s = zero_vec<Scalar>(A.alg->dim());
      for (int k = 0; k < 3; ++k) s += A.alg->mul(A(i, k), B(k, j));
      C(i, j) = s;
    }
  return C;
}

AlgMatrix3 operator+(const AlgMatrix3& A, const AlgMatrix3& B) {
  AlgMatrix3 C{A.alg, {}};
  for (int k = 0; k < 9; ++k) C.e[k] = A.e[k] + B.e[k];
  return C;
}

bool is_hermitian(const AlgMatrix3& M) {
  const auto& A = *M.alg;
  for (int i = 0; i < 3; ++i) {
    if (!is_scalar_elt(A, M(i, i))) return false;
    for (int j = i + 1; j < 3; ++j)
      if (M(j, i) != A.conj(M(i, j))) return false;
  }
  return true;
}

Herm3::Herm3(AlgebraPtr alg, std::array<Scalar, 3> r, std::array<VecS, 3> x)
    : alg_(std::move(alg)), r_(std::move(r)), x_(std::move(x)) {
  for (const auto& v : x_)
    if (v.size() != alg_->dim()) throw std::invalid_argument("Herm3: entry dimension");
}

Herm3 Herm3::diag(const AlgebraPtr& alg, const Scalar& r1, const Scalar& r2, const Scalar& r3) {
  VecS z = zero_vec<Scalar>(alg->dim());
  return Herm3(alg, {r1, r2, r3}, {z, z, z});
}
Herm3 Herm3::identity(const AlgebraPtr& alg) { return diag(alg, 1, 1, 1); }
Herm3 Herm3::zero(const AlgebraPtr& alg) { return diag(alg, 0, 0, 0); }

Herm3 Herm3::from_matrix(const AlgMatrix3& M) {
  if (!is_hermitian(M)) throw std::domain_error("Herm3: matrix is not Hermitian");
  const int u = M.alg->unit();
  return Herm3(M.alg, {M(0, 0)(u), M(1, 1)(u), M(2, 2)(u)}, {M(2, 1), M(2, 0), M(1, 0)});
}

AlgMatrix3 Herm3::matrix() const {
  const auto& A = *alg_;
  AlgMatrix3 M{alg_, {}};
  M(0, 0) = scalar_elt(A, r_[0]);
  M(1, 1) = scalar_elt(A, r_[1]);
  M(2, 2) = scalar_elt(A, r_[2]);
  M(1, 0) = x_[2];
  M(0, 1) = A.conj(x_[2]);
  M(2, 0) = x_[1];
  M(0, 2) = A.conj(x_[1]);
  M(2, 1) = x_[0];
  M(1, 2) = A.conj(x_[0]);
  return M;
}

VecS Herm3::coords() const {
  const int d = alg_->dim();
  VecS v(3 + 3 * d);
  for (int i = 0; i < 3; ++i) v(i) = r_[i];
  for (int i = 0; i < 3; ++i) v.segment(3 + i * d, d) = x_[i];
  return v;
}

Herm3 operator+(const Herm3& A, const Herm3& B) {
  return Herm3(A.alg_, {A.r_[0] + B.r_[0], A.r_[1] + B.r_[1], A.r_[2] + B.r_[2]},
               {A.x_[0] + B.x_[0], A.x_[1] + B.x_[1], A.x_[2] + B.x_[2]});
}
Herm3 operator-(const Herm3& A, const Herm3& B) { return A + Scalar(-1) * B; }
Herm3 operator*(const Scalar& s, const Herm3& A) {
  return Herm3(A.alg_, {s * A.r_[0], s * A.r_[1], s * A.r_[2]},
               {A.x_[0] * s, A.x_[1] * s, A.x_[2] * s});
}
bool operator==(const Herm3& A, const Herm3& B) {
  return A.alg_ == B.alg_ && A.r_ == B.r_ && A.x_ == B.x_;
}

Herm3 jordan_product(const Herm3& A, const Herm3& B) {
  if (A.algebra() != B.algebra()) throw std::invalid_argument("jordan_product: mixed algebras");
  AlgMatrix3 S = A.matrix() * B.matrix() + B.matrix() * A.matrix();
  for (auto& v : S.e) v /= Scalar(2);
  return Herm3::from_matrix(S);
}

Herm3 comatrix(const Herm3& P) {
  const auto& alg = P.algebra();
  Herm3 P2 = Herm3::from_matrix(P.matrix() * P.matrix());
  Scalar t = P.trace();
  Scalar s = (t * t - P2.trace()) / Scalar(2);
  return P2 - t * P + s * Herm3::identity(alg);
}

Scalar trace_form(const Herm3& A, const Herm3& B) { return jordan_product(A, B).trace(); }

Scalar det3(const Herm3& P) { return trace_form(comatrix(P), P) / Scalar(3); }

CofactorCheck check_cofactor_identity(const Herm3& P) {
  CofactorCheck c;
  const auto& alg = P.algebra();
  Herm3 C = comatrix(P);
  Scalar d = det3(P);
  Herm3 dI = Herm3::diag(alg, d, d, d);
  c.jordan_identity_holds = jordan_product(C, P) == dI;
  AlgMatrix3 M = C.matrix() * P.matrix();
  c.product_hermitian = is_hermitian(M);
  if (c.product_hermitian) {
    c.identity_holds = Herm3::from_matrix(M) == dI;
    return c;
  }
  // not Hermitian: test whether the defect is a constant imaginary diagonal
  VecS z = zero_vec<Scalar>(alg->dim());
  VecS defect = M(0, 0) - scalar_elt(*alg, d);
  bool constant = !is_zero(defect) && is_zero(VecS(defect - alg->conj(defect) * Scalar(-1)));
  for (int i = 0; i < 3 && constant; ++i)
    for (int j = 0; j < 3 && constant; ++j)
      constant = i == j ? M(i, i) - scalar_elt(*alg, d) == defect : M(i, j) == z;
  if (constant) c.scalar_defect = defect;
  return c;
}

Zorn2 freudenthal_phi(const Scalar& x, const Herm3& P) {
  return {x * x * x, (x * x) * P, x * comatrix(P), det3(P)};
}

bool in_section(const Zorn2& z) { return z.z1 == z.z4; }

int jordan_dim(int alg_dim) { return 3 + 3 * alg_dim; }
int zorn_dim(int alg_dim) { return 2 + 2 * jordan_dim(alg_dim); }

}  // namespace symvar
