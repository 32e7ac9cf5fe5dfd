#include "symvar/comp_alg.hpp"

#include <stdexcept>

namespace symvar {

CompositionAlgebra::CompositionAlgebra(std::string name, int dim, int unit,
                                       std::vector<std::vector<Term>> table)
    : name_(std::move(name)), dim_(dim), unit_(unit), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != dim_ * dim_)
    throw std::invalid_argument("CompositionAlgebra: table size mismatch");
}

VecS CompositionAlgebra::mul(const VecS& x, const VecS& y) const {
  VecS z = zero_vec<Scalar>(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j).is_zero()) continue;
      Scalar xy = x(i) * y(j);
      for (const Term& t : product(i, j)) z(t.k) += xy * t.coef;
    }
  }
  return z;
}

VecS CompositionAlgebra::conj(const VecS& x) const {
  VecS y = -x;
  y(unit_) = x(unit_);
  return y;
}

Scalar CompositionAlgebra::norm(const VecS& x) const { return mul(x, conj(x))(unit_); }

Scalar CompositionAlgebra::polar(const VecS& x, const VecS& y) const {
  return (norm(x + y) - norm(x) - norm(y)) / Scalar(2);
}

VecS CompositionAlgebra::one() const { return basis(unit_); }

VecS CompositionAlgebra::basis(int i) const {
  VecS v = zero_vec<Scalar>(dim_);
  v(i) = Scalar(1);
  return v;
}

AlgElement::AlgElement(AlgebraPtr alg, VecS c) : alg_(std::move(alg)), c_(std::move(c)) {
  if (c_.size() != alg_->dim()) throw std::invalid_argument("AlgElement: coefficient length");
}

AlgElement AlgElement::basis(const AlgebraPtr& alg, int i) { return {alg, alg->basis(i)}; }
AlgElement AlgElement::one(const AlgebraPtr& alg) { return {alg, alg->one()}; }

VecS AlgElement::imaginary_part() const {
  VecS v = c_;
  v(alg_->unit()) = Scalar(0);
  return v;
}

namespace {
void same_algebra(const AlgElement& x, const AlgElement& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("elements of different algebras");
}
}  // namespace

AlgElement operator*(const AlgElement& x, const AlgElement& y) {
  same_algebra(x, y);
  return {x.alg_, x.alg_->mul(x.c_, y.c_)};
}
AlgElement operator+(const AlgElement& x, const AlgElement& y) {
  same_algebra(x, y);
  return {x.alg_, x.c_ + y.c_};
}
AlgElement operator-(const AlgElement& x, const AlgElement& y) {
  same_algebra(x, y);
  return {x.alg_, x.c_ - y.c_};
}
AlgElement operator*(const Scalar& s, const AlgElement& x) { return {x.alg_, x.c_ * s}; }
bool operator==(const AlgElement& x, const AlgElement& y) {
  return x.alg_ == y.alg_ && x.c_ == y.c_;
}

AlgebraPtr scalar_algebra() {
  std::vector<std::vector<CompositionAlgebra::Term>> t(1);
  t[0].push_back({0, Scalar(1)});
  return std::make_shared<CompositionAlgebra>("R", 1, 0, std::move(t));
}

AlgebraPtr cayley_dickson(const AlgebraPtr& base) {
  const int n = base->dim();
  if (n == 8) throw std::invalid_argument("cayley_dickson: dimension 16 is not a composition algebra");
  if (n != 1 && n != 2 && n != 4) throw std::invalid_argument("cayley_dickson: base dimension");
  const int m = 2 * n;
  auto split = [n](const VecS& v) { return std::make_pair(VecS(v.head(n)), VecS(v.tail(n))); };
  std::vector<std::vector<CompositionAlgebra::Term>> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      VecS x = zero_vec<Scalar>(m), y = zero_vec<Scalar>(m);
      x(i) = Scalar(1);
      y(j) = Scalar(1);
      auto [a, b] = split(x);
      auto [c, d] = split(y);
      VecS lo = base->mul(a, c) - base->mul(base->conj(d), b);
      VecS hi = base->mul(d, a) + base->mul(b, base->conj(c));
      for (int k = 0; k < n; ++k) {
        if (!lo(k).is_zero()) table[i * m + j].push_back({k, lo(k)});
        if (!hi(k).is_zero()) table[i * m + j].push_back({n + k, hi(k)});
      }
    }
  static const char* names[] = {"", "", "C", "", "H", "", "", "", "O"};
  return std::make_shared<CompositionAlgebra>(names[m], m, 0, std::move(table));
}

AlgebraPtr standard_algebra(int dim) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("standard_algebra: dim must be 1, 2, 4 or 8");
  AlgebraPtr a = scalar_algebra();
  while (a->dim() < dim) a = cayley_dickson(a);
  return a;
}

VecS associator(const CompositionAlgebra& A, const VecS& a, const VecS& b, const VecS& c) {
  return A.mul(A.mul(a, b), c) - A.mul(a, A.mul(b, c));
}

AlgElement associator(const AlgElement& a, const AlgElement& b, const AlgElement& c) {
  return (a * b) * c - a * (b * c);
}

std::vector<MatS> derivations(const CompositionAlgebra& A) {
  const int n = A.dim();
  // unknown D(k,m) stored at index m*n + k
  auto col = [n](int k, int m) { return m * n + k; };
  MatS S = zeros<Scalar>(n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int r0 = (i * n + j) * n;
      for (const auto& t : A.product(i, j))
        for (int k = 0; k < n; ++k) S(r0 + k, col(k, t.k)) += t.coef;
      for (int a = 0; a < n; ++a) {
        for (const auto& t : A.product(a, j)) S(r0 + t.k, col(a, i)) -= t.coef;
        for (const auto& t : A.product(i, a)) S(r0 + t.k, col(a, j)) -= t.coef;
      }
    }
  MatS K = kernel<Scalar>(S);
  std::vector<MatS> out;
  for (Eigen::Index c = 0; c < K.cols(); ++c) {
    MatS D(n, n);
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) D(k, m) = K(col(k, m), c);
    out.push_back(D);
  }
  return out;
}

MatS subalgebra_closure(const CompositionAlgebra& A, const std::vector<VecS>& gens) {
  MatS B(A.dim(), 1);
  B.col(0) = A.one();
  for (const auto& g : gens) {
    MatS G(A.dim(), 1);
    G.col(0) = g;
    B = hstack<Scalar>(B, G);
  }
  B = column_basis<Scalar>(B);
  for (;;) {
    MatS P(A.dim(), B.cols() * B.cols());
    for (Eigen::Index i = 0; i < B.cols(); ++i)
      for (Eigen::Index j = 0; j < B.cols(); ++j)
        P.col(i * B.cols() + j) = A.mul(B.col(i), B.col(j));
    MatS next = column_basis<Scalar>(hstack<Scalar>(B, P));
    if (next.cols() == B.cols()) return B;
    B = next;
  }
}

MatS subalgebra_closure(const std::vector<AlgElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("subalgebra_closure: no algebra given");
  std::vector<VecS> v;
  for (const auto& g : gens) {
    if (g.algebra() != gens[0].algebra()) throw std::invalid_argument("elements of different algebras");
    v.push_back(g.coeffs());
  }
  return subalgebra_closure(*gens[0].algebra(), v);
}

namespace {
bool in_span(const MatS& B, const VecS& v) {
  MatS t(B.rows(), 1);
  t.col(0) = v;
  return rank<Scalar>(hstack<Scalar>(B, t)) == rank<Scalar>(B);
}
}  // namespace

bool is_quaternion_subalgebra(const CompositionAlgebra& A, const MatS& basis) {
  if (basis.cols() != 4 || rank<Scalar>(basis) != 4) return false;
  if (!in_span(basis, A.one())) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!in_span(basis, A.mul(basis.col(i), basis.col(j)))) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (!is_zero(associator(A, basis.col(i), basis.col(j), basis.col(k)))) return false;
  MatS G(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G(i, j) = A.polar(basis.col(i), basis.col(j));
  return !det<Scalar>(G).is_zero();
}

bool is_quaternion_subalgebra(const std::vector<AlgElement>& basis) {
  if (basis.empty()) return false;
  MatS B(basis[0].algebra()->dim(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].algebra() != basis[0].algebra()) return false;
    B.col(i) = basis[i].coeffs();
  }
  return is_quaternion_subalgebra(*basis[0].algebra(), B);
}

bool composition_identity_holds(const CompositionAlgebra& A) {
  const int n = A.dim();
  std::vector<VecS> probes;
  for (int i = 0; i < n; ++i) probes.push_back(A.basis(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) probes.push_back(A.basis(i) + A.basis(j));
  std::vector<Scalar> norms;
  for (const auto& p : probes) norms.push_back(A.norm(p));
  for (std::size_t a = 0; a < probes.size(); ++a)
    for (std::size_t b = 0; b < probes.size(); ++b)
      if (A.norm(A.mul(probes[a], probes[b])) != norms[a] * norms[b]) return false;
  return true;
}

}  // namespace symvar
