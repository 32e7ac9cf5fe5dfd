#include "symvar/g2_geom.hpp"

#include <stdexcept>

namespace symvar {

namespace {

Rational det3x3(const VecQ& a, const VecQ& b, const VecQ& c, const std::array<int, 3>& t) {
  const Rational a0 = a(t[0]), a1 = a(t[1]), a2 = a(t[2]);
  const Rational b0 = b(t[0]), b1 = b(t[1]), b2 = b(t[2]);
  const Rational c0 = c(t[0]), c1 = c(t[1]), c2 = c(t[2]);
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

std::array<int, 3> idx3(int x, int y, int z) {
  return {SevenSpace::index(x), SevenSpace::index(y), SevenSpace::index(z)};
}

VecQ unit7(int k) {
  VecQ e = zero_vec<Rational>(7);
  e(k) = 1;
  return e;
}

// sign of the permutation sorting three distinct integers
int sort3(std::array<int, 3>& t) {
  int s = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i)
      if (t[i] > t[i + 1]) {
        std::swap(t[i], t[i + 1]);
        s = -s;
      }
  return s;
}

VecS embed(const VecS& v) {
  VecS x = zero_vec<Scalar>(8);
  x.tail(7) = v;
  return x;
}

int col_slot(int label) {
  switch (label) {
    case 2: return 0;
    case 3: return 1;
    case 0: return 2;
    case -1: return 3;
    default: throw std::invalid_argument("chart column label must be 2, 3, 0 or -1");
  }
}

}  // namespace

SevenSpace SevenSpace::with(const Rational& pair, const Rational& beta) {
  SevenSpace V;
  V.gram = zeros<Rational>(7, 7);
  V.gram(index(0), index(0)) = 1;
  for (int i = 1; i <= 3; ++i) V.gram(index(i), index(-i)) = V.gram(index(-i), index(i)) = pair;
  V.beta = beta;
  return V;
}

SevenSpace SevenSpace::stated() { return with(Rational(1, 2), 2); }

Rational SevenSpace::phi(const VecQ& a, const VecQ& b, const VecQ& c) const {
  Rational s = det3x3(a, b, c, idx3(0, 1, -1)) + det3x3(a, b, c, idx3(0, 2, -2)) + det3x3(a, b, c, idx3(0, 3, -3));
  return s + beta * (det3x3(a, b, c, idx3(1, 2, 3)) + det3x3(a, b, c, idx3(-1, -2, -3)));
}

VecQ SevenSpace::cross(const VecQ& a, const VecQ& b) const {
  VecQ y(7);
  for (int k = 0; k < 7; ++k) y(k) = phi(a, b, unit7(k));
  auto x = solve<Rational>(gram, y);
  if (!x) throw std::domain_error("quadratic form is degenerate");
  return *x;
}

QPhiOctonions octonion_from_q_phi(const SevenSpace& V) {
  if (det<Rational>(V.gram) == 0) throw std::domain_error("quadratic form is degenerate");
  std::vector<VecQ> X(49);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) X[7 * i + j] = V.cross(unit7(i), unit7(j));

  // N(ab) = N(a)N(b) on imaginary a, b reads q(a)q(b) = B(a,b)^2 + kappa^2 q(a x b)
  std::optional<Rational> k2;
  for (int i = 0; i < 7 && !k2; ++i)
    for (int j = 0; j < 7 && !k2; ++j) {
      Rational qx = V.q(X[7 * i + j]);
      if (qx != 0) k2 = (V.gram(i, i) * V.gram(j, j) - V.gram(i, j) * V.gram(i, j)) / qx;
    }
  if (!k2) throw std::domain_error("cross product is isotropic on every basis pair");
  auto kappa = sqrt(Scalar(*k2));
  if (!kappa) throw std::domain_error("normalization constant is not in Q(i,sqrt2)");

  std::vector<std::vector<CompositionAlgebra::Term>> table(64);
  for (int k = 0; k < 8; ++k) {
    table[k].push_back({k, Scalar(1)});
    if (k) table[8 * k].push_back({k, Scalar(1)});
  }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      auto& t = table[8 * (i + 1) + (j + 1)];
      if (V.gram(i, j) != 0) t.push_back({0, Scalar(Rational(-V.gram(i, j)))});
      for (int k = 0; k < 7; ++k)
        if (X[7 * i + j](k) != 0) t.push_back({k + 1, *kappa * Scalar(X[7 * i + j](k))});
    }
  auto alg = std::make_shared<CompositionAlgebra>("O(q,phi)", 8, 0, std::move(table));
  if (!composition_identity_holds(*alg))
    throw std::domain_error("no normalization of the cross product satisfies the composition identity");
  return {alg, *kappa};
}

int triple_index(int i, int j, int k) {
  if (!(0 <= i && i < j && j < k && k < 7)) throw std::invalid_argument("triple must be increasing in 0..6");
  int t = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c, ++t)
        if (a == i && b == j && c == k) return t;
  return -1;
}

std::array<int, 3> triple(int t) {
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c)
        if (t-- == 0) return {a, b, c};
  throw std::out_of_range("triple index");
}

VecS wedge(int i, int j, int k) {
  VecS v = zero_vec<Scalar>(35);
  if (i == j || j == k || i == k) return v;
  std::array<int, 3> t{i, j, k};
  int s = sort3(t);
  v(triple_index(t[0], t[1], t[2])) = s;
  return v;
}

MatS associator_map(const CompositionAlgebra& A) {
  if (A.dim() != 8 || A.unit() != 0) throw std::invalid_argument("associator_map expects an 8-dimensional algebra with unit at 0");
  MatS M(35, 8);
  for (int t = 0; t < 35; ++t) {
    auto [i, j, k] = triple(t);
    M.row(t) = associator(A, A.basis(i + 1), A.basis(j + 1), A.basis(k + 1)).transpose();
  }
  return M;
}

bool associator_alternating(const CompositionAlgebra& A) {
  MatS M = associator_map(A);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        VecS a = associator(A, A.basis(i + 1), A.basis(j + 1), A.basis(k + 1));
        VecS w = wedge(i, j, k);
        VecS expect = M.transpose() * w;
        if (a != expect) return false;
      }
  return true;
}

std::vector<VecS> listed_weight_vectors(bool corrected) {
  struct Term {
    int x, y, z, c;
  };
  std::vector<std::vector<Term>> P = {
      {{-2, -3, 0, 1}, {1, 2, -2, -1}, {1, 3, -3, -1}},
      {{2, -2, -3, 1}, {1, 2, 0, -1}, {1, -1, -3, 1}},
      {{3, -2, -3, 1}, {1, 3, 0, -1}, {1, -1, -2, -1}},
      {{1, 2, 3, 1}, {-1, -2, -3, -1}},
      {{2, 3, -3, 1}, {1, 2, -1, -1}, {0, -1, -3, 1}},
      {{2, 3, -2, -1}, {1, 3, -1, -1}, {0, -1, -2, -1}},
      {{1, -1, -2, -1}, {2, 3, 0, -1}, {3, -1, -3, -1}},
  };
  if (corrected) P[6][0] = {2, -1, -2, -1};
  std::vector<VecS> out;
  for (const auto& p : P) {
    VecS v = zero_vec<Scalar>(35);
    for (const auto& t : p)
      v += wedge(SevenSpace::index(t.x), SevenSpace::index(t.y), SevenSpace::index(t.z)) * Scalar(t.c);
    out.push_back(v);
  }
  return out;
}

VecS highest_weight_vector() {
  return wedge(SevenSpace::index(1), SevenSpace::index(-2), SevenSpace::index(-3));
}

MatS wedge3_action(const MatS& D) {
  MatS d = D.block(1, 1, 7, 7);
  MatS R = zeros<Scalar>(35, 35);
  for (int t = 0; t < 35; ++t) {
    auto tr = triple(t);
    for (int pos = 0; pos < 3; ++pos)
      for (int m = 0; m < 7; ++m) {
        if (d(m, tr[pos]).is_zero()) continue;
        std::array<int, 3> u = tr;
        u[pos] = m;
        R.col(t) += wedge(u[0], u[1], u[2]) * d(m, tr[pos]);
      }
  }
  return R;
}

VecS invariant_trivector(const SevenSpace& V) {
  MatQ Binv(7, 7);
  for (int k = 0; k < 7; ++k) Binv.col(k) = *solve<Rational>(V.gram, unit7(k));
  VecS v(35);
  for (int t = 0; t < 35; ++t) {
    auto [a, b, c] = triple(t);
    v(t) = Scalar(V.phi(Binv.col(a), Binv.col(b), Binv.col(c)));
  }
  return v;
}

Scalar& ChartPoint::at(int row, int col) { return a.at(row - 1)[col_slot(col)]; }
const Scalar& ChartPoint::at(int row, int col) const { return a.at(row - 1)[col_slot(col)]; }

Scalar chart_minor(const ChartPoint& p, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
  MatS M(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) M(r, c) = p.at(rows[r], cols[c]);
  return det<Scalar>(M);
}

ChartPoint chart_point(const std::array<Scalar, 8>& f) {
  ChartPoint p;
  p.at(1, 2) = f[0];
  p.at(1, 3) = f[1];
  p.at(2, 2) = f[2];
  p.at(2, 3) = f[3];
  p.at(2, 0) = f[4];
  p.at(3, 2) = f[5];
  p.at(3, 3) = f[6];
  p.at(3, 0) = f[7];
  p.at(1, 0) = -p.at(3, 2) + p.at(2, 3);
  p.at(2, -1) = -p.at(1, 2) + chart_minor(p, {2, 3}, {2, 0});
  p.at(3, -1) = -p.at(1, 3) + chart_minor(p, {2, 3}, {3, 0});
  p.at(1, -1) = chart_minor(p, {2, 3}, {2, 3});
  return p;
}

std::array<Scalar, 3> chart_residuals(const ChartPoint& p) {
  return {chart_minor(p, {1, 2}, {2, 3}) - chart_minor(p, {2, 3}, {2, -1}) + chart_minor(p, {1, 2}, {0, -1}),
          chart_minor(p, {1, 3}, {2, 3}) - chart_minor(p, {2, 3}, {3, -1}) + chart_minor(p, {1, 3}, {0, -1}),
          p.at(3, -1) + chart_minor(p, {1, 2, 3}, {2, 3, 0}) + chart_minor(p, {1, 2}, {3, -1})};
}

std::array<Scalar, 3> chart_residuals_corrected(const ChartPoint& p) {
  auto r = chart_residuals(p);
  r[2] = -chart_minor(p, {1, 2, 3}, {2, 3, 0}) - chart_minor(p, {1, 2}, {3, -1}) + chart_minor(p, {1, 3}, {2, -1});
  return r;
}

MatS chart_plane(const ChartPoint& p) {
  static const int rows[3] = {1, -2, -3};
  static const int cols[4] = {2, 3, 0, -1};
  MatS W = zeros<Scalar>(7, 3);
  for (int r = 0; r < 3; ++r) {
    W(SevenSpace::index(rows[r]), r) = 1;
    for (int c : cols) W(SevenSpace::index(c), r) += p.at(r + 1, c);
  }
  return W;
}

VecS plane_associator(const CompositionAlgebra& A, const MatS& W) {
  return associator(A, embed(W.col(0)), embed(W.col(1)), embed(W.col(2)));
}

bool quaternion_characterization(const CompositionAlgebra& A, const MatS& W) {
  if (W.rows() != 7 || W.cols() != 3 || rank<Scalar>(W) != 3) return false;
  std::vector<VecS> gens{A.one()};
  for (int c = 0; c < 3; ++c) gens.push_back(embed(W.col(c)));
  MatS S = subalgebra_closure(A, gens);
  return S.cols() == 4 && is_quaternion_subalgebra(A, S);
}

}  // namespace symvar
