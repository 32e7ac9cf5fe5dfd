#include "symvar/polyhedral.hpp"

#include <stdexcept>

namespace symvar {

namespace {

// calls f on every k-subset of {0..n-1}
template <class F>
void subsets(int n, int k, F&& f) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  if (k > n) return;
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

MatQ rows_of(const MatQ& A, const std::vector<int>& idx) {
  MatQ R(idx.size(), A.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) R.row(r) = A.row(idx[r]);
  return R;
}

MatQ kernel_or_all(const MatQ& A, Eigen::Index cols) {
  if (A.rows() == 0) return identity<Rational>(cols);
  return kernel<Rational>(A);
}

}  // namespace

VecQ primitive(const VecQ& v) {
  Integer l = 1, g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(denominator(v(i))));
  VecQ w = v * Rational(l);
  for (Eigen::Index i = 0; i < w.size(); ++i) g = gcd(g, Integer(numerator(w(i))));
  if (g == 0) return w;
  if (g < 0) g = -g;
  return w / Rational(g);
}

bool same_ray(const VecQ& u, const VecQ& v) {
  if (is_zero(u) || is_zero(v)) return false;
  return primitive(u) == primitive(v);
}

PolyCone extreme_rays(const MatQ& ineq, const MatQ& eq) {
  const Eigen::Index n = ineq.rows() ? ineq.cols() : eq.cols();
  MatQ K = kernel_or_all(eq, n);  // x = K y
  const int k = static_cast<int>(K.cols());
  PolyCone pc;
  if (k == 0) return pc;
  MatQ AK = ineq * K;
  MatQ L = kernel_or_all(AK, k);
  if (L.cols() > 0) {
    pc.pointed = false;
    for (Eigen::Index j = 0; j < L.cols(); ++j) pc.lineality.push_back(K * L.col(j));
    return pc;
  }
  const int m = static_cast<int>(AK.rows());
  subsets(m, k - 1, [&](const std::vector<int>& s) {
    MatQ sub = rows_of(AK, s);
    MatQ y = kernel_or_all(sub, k);
    if (y.cols() != 1) return;
    VecQ r = AK * y.col(0);
    bool pos = true, neg = true;
    for (int i = 0; i < m; ++i) {
      if (r(i) < 0) pos = false;
      if (r(i) > 0) neg = false;
    }
    if (!pos && !neg) return;
    VecQ x = primitive(K * y.col(0));
    if (!pos) x = -x;
    for (const auto& q : pc.rays)
      if (q == x) return;
    pc.rays.push_back(x);
  });
  return pc;
}

Facets facets(const std::vector<VecQ>& gens, Eigen::Index dim) {
  std::vector<VecQ> g;
  for (const auto& v : gens)
    if (!is_zero(v)) g.push_back(v);
  MatQ G = zeros<Rational>(dim, g.size());
  for (std::size_t j = 0; j < g.size(); ++j) G.col(j) = g[j];
  Facets f;
  MatQ perp = kernel_or_all(MatQ(G.transpose()), dim);  // span = perp^T kernel
  f.span_eq = perp.transpose();
  const int d = g.empty() ? 0 : static_cast<int>(rank<Rational>(G));
  std::vector<VecQ> normals;
  if (d > 0)
    subsets(static_cast<int>(g.size()), d - 1, [&](const std::vector<int>& s) {
      MatQ rows(s.size() + perp.cols(), dim);
      for (std::size_t r = 0; r < s.size(); ++r) rows.row(r) = g[s[r]].transpose();
      for (Eigen::Index c = 0; c < perp.cols(); ++c) rows.row(s.size() + c) = perp.col(c).transpose();
      MatQ h = kernel_or_all(rows, dim);
      if (h.cols() != 1) return;
      VecQ hv = h.col(0);
      bool pos = true, neg = true;
      for (const auto& v : g) {
        Rational t = hv.dot(v);
        if (t < 0) pos = false;
        if (t > 0) neg = false;
      }
      if (!pos && !neg) return;
      hv = primitive(pos ? hv : VecQ(-hv));
      for (const auto& q : normals)
        if (q == hv) return;
      normals.push_back(hv);
    });
  f.normals = MatQ(normals.size(), dim);
  for (std::size_t r = 0; r < normals.size(); ++r) f.normals.row(r) = normals[r].transpose();
  return f;
}

bool cone_contains(const std::vector<VecQ>& gens, const VecQ& x) {
  if (gens.empty()) return is_zero(x);
  Facets f = facets(gens, x.size());
  if (!is_zero(VecQ(f.span_eq * x))) return false;
  VecQ t = f.normals * x;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (t(i) < 0) return false;
  return true;
}

}  // namespace symvar
