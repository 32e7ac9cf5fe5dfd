#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symvar {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// a + b i + c sqrt2 + d i sqrt2
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT
  Scalar(int v) : a_(v) {}   // NOLINT
  Scalar(const Rational& v) : a_(v) {}  // NOLINT
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar i() { return {0, 1, 0, 0}; }
  static Scalar sqrt2() { return {0, 0, 1, 0}; }
  static Scalar i_sqrt2() { return {0, 0, 0, 1}; }
  static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;
  // conjugation i -> -i (fixes sqrt2)
  Scalar conj_i() const { return {a_, -b_, c_, -d_}; }
  std::string str() const;

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

std::optional<Scalar> sqrt(const Scalar& z);
std::optional<Rational> sqrt(const Rational& q);

}  // namespace symvar

namespace Eigen {
template <>
struct NumTraits<symvar::Scalar> : GenericNumTraits<symvar::Scalar> {
  using Real = symvar::Scalar;
  using NonInteger = symvar::Scalar;
  using Literal = symvar::Scalar;
  using Nested = symvar::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
template <>
struct NumTraits<symvar::Rational> : GenericNumTraits<symvar::Rational> {
  using Real = symvar::Rational;
  using NonInteger = symvar::Rational;
  using Literal = symvar::Rational;
  using Nested = symvar::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace symvar {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatS = Mat<Scalar>;
using VecS = Vec<Scalar>;
using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class T>
Mat<T> zeros(Eigen::Index r, Eigen::Index c) {
  return Mat<T>::Constant(r, c, T(0));
}
template <class T>
Vec<T> zero_vec(Eigen::Index n) {
  return Vec<T>::Constant(n, T(0));
}
template <class T>
Mat<T> identity(Eigen::Index n) {
  Mat<T> m = zeros<T>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

// Bareiss elimination with full pivoting; upper trapezoid in U, column order in perm
template <class T>
struct Echelon {
  Mat<T> U;
  std::vector<Eigen::Index> perm;
  Eigen::Index rank = 0;
  int sign = 1;
};

template <class T>
Echelon<T> bareiss(Mat<T> M) {
  Echelon<T> e;
  const Eigen::Index m = M.rows(), n = M.cols();
  e.perm.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) e.perm[j] = j;
  T prev(1);
  Eigen::Index k = 0;
  for (; k < std::min(m, n); ++k) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index j = k; j < n && pr < 0; ++j)
      for (Eigen::Index i = k; i < m; ++i)
        if (!is_zero(M(i, j))) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    if (pr != k) {
      M.row(pr).swap(M.row(k));
      e.sign = -e.sign;
    }
    if (pc != k) {
      M.col(pc).swap(M.col(k));
      std::swap(e.perm[pc], e.perm[k]);
      e.sign = -e.sign;
    }
    const T piv = M(k, k);
    for (Eigen::Index i = k + 1; i < m; ++i) {
      const T f = M(i, k);
      for (Eigen::Index j = k + 1; j < n; ++j) {
        M(i, j) = (piv * M(i, j) - f * M(k, j)) / prev;
      }
      M(i, k) = T(0);
    }
    prev = piv;
  }
  e.rank = k;
  e.U = std::move(M);
  return e;
}

template <class T>
Eigen::Index rank(const Mat<T>& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  return bareiss<T>(M).rank;
}

// columns form a basis of {v : M v = 0}
template <class T>
Mat<T> kernel(const Mat<T>& M) {
  const Eigen::Index n = M.cols();
  if (M.rows() == 0) return identity<T>(n);
  Echelon<T> e = bareiss<T>(M);
  const Eigen::Index r = e.rank;
  Mat<T> K = zeros<T>(n, n - r);
  for (Eigen::Index f = r; f < n; ++f) {
    Vec<T> x = zero_vec<T>(n);
    x(f) = T(1);
    for (Eigen::Index i = r - 1; i >= 0; --i) {
      T s = e.U(i, f);
      for (Eigen::Index j = i + 1; j < r; ++j) s += e.U(i, j) * x(j);
      x(i) = -s / e.U(i, i);
    }
    for (Eigen::Index j = 0; j < n; ++j) K(e.perm[j], f - r) = x(j);
  }
  return K;
}

template <class T>
T det(const Mat<T>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det: matrix not square");
  if (M.rows() == 0) return T(1);
  Echelon<T> e = bareiss<T>(M);
  if (e.rank < M.rows()) return T(0);
  T d = e.U(M.rows() - 1, M.rows() - 1);
  return e.sign < 0 ? T(-d) : d;
}

// exact solution of M x = b, or nullopt when b is outside the column span
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& M, const Vec<T>& b) {
  if (M.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const Eigen::Index n = M.cols();
  Mat<T> A(M.rows(), n + 1);
  A.leftCols(n) = M;
  A.col(n) = -b;
  Mat<T> K = kernel<T>(A);
  for (Eigen::Index c = 0; c < K.cols(); ++c)
    if (!is_zero(K(n, c))) return Vec<T>(K.col(c).head(n) / K(n, c));
  return std::nullopt;
}

// inverse of a square matrix; throws std::domain_error when singular
template <class T>
Mat<T> inverse(const Mat<T>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = M.rows();
  Mat<T> out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Vec<T> e = Vec<T>::Zero(n);
    e(c) = T(1);
    auto x = solve<T>(M, e);
    if (!x) throw std::domain_error("inverse: singular matrix");
    out.col(c) = *x;
  }
  return out;
}

// independent columns of M spanning its column space
template <class T>
Mat<T> column_basis(const Mat<T>& M) {
  if (M.cols() == 0) return M;
  Echelon<T> e = bareiss<T>(M);
  std::vector<Eigen::Index> piv(e.perm.begin(), e.perm.begin() + e.rank);
  std::sort(piv.begin(), piv.end());
  Mat<T> B(M.rows(), e.rank);
  for (Eigen::Index k = 0; k < e.rank; ++k) B.col(k) = M.col(piv[k]);
  return B;
}

template <class T>
Mat<T> hstack(const Mat<T>& A, const Mat<T>& B) {
  if (A.cols() == 0) return B;
  if (B.cols() == 0) return A;
  Mat<T> C(A.rows(), A.cols() + B.cols());
  C.leftCols(A.cols()) = A;
  C.rightCols(B.cols()) = B;
  return C;
}

template <class T>
Mat<T> vstack(const Mat<T>& A, const Mat<T>& B) {
  if (A.rows() == 0) return B;
  if (B.rows() == 0) return A;
  Mat<T> C(A.rows() + B.rows(), A.cols());
  C.topRows(A.rows()) = A;
  C.bottomRows(B.rows()) = B;
  return C;
}

template <class T>
bool is_skew(const Mat<T>& M) {
  if (M.rows() != M.cols()) return false;
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = i; j < M.cols(); ++j)
      if (M(i, j) != T(-M(j, i))) return false;
  return true;
}

// Pfaffian of the principal minor on idx, by skew congruence elimination
template <class T>
T pfaffian(const Mat<T>& M, const std::vector<int>& idx) {
  if (!is_skew<T>(M)) throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
  if (idx.size() % 2) throw std::invalid_argument("pfaffian: odd index list");
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] <= idx[k - 1]) throw std::invalid_argument("pfaffian: index list not increasing");
  const Eigen::Index n = static_cast<Eigen::Index>(idx.size());
  Mat<T> A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = M(idx[i], idx[j]);
  T pf(1);
  for (Eigen::Index k = 0; k < n; k += 2) {
    Eigen::Index p = -1;
    for (Eigen::Index j = k + 1; j < n; ++j)
      if (!is_zero(A(k, j))) {
        p = j;
        break;
      }
    if (p < 0) return T(0);
    if (p != k + 1) {
      A.row(p).swap(A.row(k + 1));
      A.col(p).swap(A.col(k + 1));
      pf = -pf;
    }
    const T a = A(k, k + 1);
    pf *= a;
    for (Eigen::Index i = k + 2; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        T v = A(i, j) - (A(i, k + 1) * A(k, j) - A(i, k) * A(k + 1, j)) / a;
        A(i, j) = v;
        A(j, i) = -v;
      }
  }
  return pf;
}

template <class T>
T pfaffian(const Mat<T>& M) {
  std::vector<int> idx(M.rows());
  for (int i = 0; i < static_cast<int>(M.rows()); ++i) idx[i] = i;
  return pfaffian<T>(M, idx);
}

std::string to_string(const Rational& q);
inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace symvar
