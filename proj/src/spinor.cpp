#include "symvar/spinor.hpp"

#include "symvar/g2_geom.hpp"
#include "symvar/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace symvar {

namespace {

struct SubsetTables {
  std::vector<std::vector<int>> all, even;
  std::vector<int> index_of_mask;  // mask -> position in all
  std::vector<int> even_pos;       // position in all -> position in even, or -1
  std::vector<int> masks;          // position in all -> mask
};

const SubsetTables& tables() {
  static const SubsetTables t = [] {
    SubsetTables t;
    t.index_of_mask.assign(128, -1);
    for (int size = 0; size <= 7; ++size)
      for (int m = 0; m < 128; ++m) {
        if (__builtin_popcount(m) != size) continue;
        std::vector<int> s;
        for (int b = 0; b < 7; ++b)
          if (m >> b & 1) s.push_back(b + 1);
        t.all.push_back(s);
        t.masks.push_back(m);
      }
    // lexicographic order within each size
    std::vector<int> order(128);
    for (int k = 0; k < 128; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (t.all[a].size() != t.all[b].size()) return t.all[a].size() < t.all[b].size();
      return t.all[a] < t.all[b];
    });
    std::vector<std::vector<int>> all;
    std::vector<int> masks;
    for (int k : order) {
      all.push_back(t.all[k]);
      masks.push_back(t.masks[k]);
    }
    t.all = all;
    t.masks = masks;
    t.even_pos.assign(128, -1);
    for (int k = 0; k < 128; ++k) {
      t.index_of_mask[t.masks[k]] = k;
      if (t.all[k].size() % 2 == 0) {
        t.even_pos[k] = static_cast<int>(t.even.size());
        t.even.push_back(t.all[k]);
      }
    }
    return t;
  }();
  return t;
}

int mask_of(const std::vector<int>& labels) {
  int m = 0;
  for (int l : labels) m |= 1 << (l - 1);
  return m;
}

void set_entry(SkewParam& p, int i, int j, const Scalar& v) {
  p(i - 1, j - 1) = v;
  p(j - 1, i - 1) = -v;
}

Scalar pf_labels(const SkewParam& p, const std::vector<int>& labels) {
  std::vector<int> idx;
  for (int l : labels) idx.push_back(l - 1);
  return pfaffian<Scalar>(p, idx);
}

using Op = SpinorModel::Op;

Op from_triplets(const std::vector<Eigen::Triplet<Rational>>& t) {
  Op m(128, 128);
  m.setFromTriplets(t.begin(), t.end());
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  return m;
}

Op product(const Op& a, const Op& b) {
  Op m = a * b;
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  return m;
}

MatQ restrict_even(const Op& op) {
  const auto& t = tables();
  MatQ m = zeros<Rational>(64, 64);
  for (int c = 0; c < op.outerSize(); ++c) {
    if (t.even_pos[c] < 0) continue;
    for (Op::InnerIterator it(op, c); it; ++it) {
      const int r = t.even_pos[it.row()];
      if (r < 0) throw std::logic_error("operator does not preserve parity");
      m(r, t.even_pos[c]) = it.value();
    }
  }
  return m;
}

// common kernel of a family of operators, as a column basis
MatQ common_kernel(const std::vector<MatQ>& ops, Eigen::Index n) {
  MatQ K = identity<Rational>(n);
  for (const auto& op : ops) {
    if (K.cols() == 0) break;
    MatQ N = kernel<Rational>(MatQ(op * K));
    K = K * N;
  }
  return K;
}

MatQ span_of(const std::vector<MatQ>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  MatQ all(rows, cols);
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    all.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return column_basis<Rational>(all);
}

VecQ apply_exp(const MatQ& n, VecQ v) {
  VecQ term = v;
  for (int k = 1; k <= 64; ++k) {
    term = n * term / Rational(k);
    if (is_zero(term)) return v;
    v += term;
  }
  throw std::logic_error("exponential of a non-nilpotent operator");
}

}  // namespace

const std::vector<std::vector<int>>& all_subsets() { return tables().all; }
const std::vector<std::vector<int>>& even_subsets() { return tables().even; }

int even_index(const std::vector<int>& labels) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 1 || labels[k] > 7) return -1;
    if (k && labels[k] <= labels[k - 1]) return -1;
  }
  const auto& t = tables();
  return t.even_pos[t.index_of_mask[mask_of(labels)]];
}

EvenForms pfaffian_chart(const SkewParam& p) {
  if (p.rows() != 7 || p.cols() != 7) throw std::invalid_argument("pfaffian_chart: expected 7 x 7");
  const auto& ev = even_subsets();
  EvenForms s(64);
  for (int k = 0; k < 64; ++k) s(k) = pf_labels(p, ev[k]);
  return s;
}

std::array<Scalar, 4> v1_equations(const SkewParam& p) {
  return {p(0, 1) - pf_labels(p, {1, 2, 4, 5, 6, 7}), p(0, 2) - pf_labels(p, {1, 3, 4, 5, 6, 7}),
          p(1, 2) - pf_labels(p, {2, 3, 4, 5, 6, 7}), p(3, 6) - pf_labels(p, {1, 2, 3, 4})};
}

const std::vector<std::pair<int, int>>& chart_pairs() {
  static const std::vector<std::pair<int, int>> v = [] {
    std::vector<std::pair<int, int>> v;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) v.emplace_back(i, j);
    return v;
  }();
  return v;
}

const std::vector<std::pair<int, int>>& graph_free_pairs() {
  static const std::vector<std::pair<int, int>> v = [] {
    std::vector<std::pair<int, int>> v;
    for (const auto& pr : chart_pairs())
      if (pr != std::pair{1, 2} && pr != std::pair{1, 3} && pr != std::pair{2, 3} && pr != std::pair{3, 4})
        v.push_back(pr);
    return v;
  }();
  return v;
}

namespace {

// [i,j,4,5,6,7] at x_ij = 0; the full Pfaffian is x_ij [4,5,6,7] plus this
Scalar graph_r(SkewParam p, int i, int j) {
  set_entry(p, i, j, 0);
  return pf_labels(p, {i, j, 4, 5, 6, 7});
}

Scalar fourth_relation(const SkewParam& p) {
  const Scalar d = Scalar(1) - pf_labels(p, {4, 5, 6, 7});
  return p(3, 6) * d - (p(2, 3) * graph_r(p, 1, 2) - p(1, 3) * graph_r(p, 1, 3) + p(0, 3) * graph_r(p, 2, 3));
}

}  // namespace

SkewParam solve_graph(const std::array<Scalar, 17>& free) {
  SkewParam p = zeros<Scalar>(7, 7);
  const auto& fp = graph_free_pairs();
  for (std::size_t k = 0; k < fp.size(); ++k) set_entry(p, fp[k].first, fp[k].second, free[k]);
  const Scalar d = Scalar(1) - pf_labels(p, {4, 5, 6, 7});
  if (d.is_zero()) throw std::domain_error("solve_graph: 1 - [4,5,6,7] vanishes");
  set_entry(p, 3, 4, 0);
  const Scalar f0 = fourth_relation(p);
  set_entry(p, 3, 4, 1);
  const Scalar a = fourth_relation(p) - f0;
  if (a.is_zero() && !f0.is_zero()) throw std::domain_error("solve_graph: fourth relation does not involve x34");
  // a vanishing relation leaves x34 free; take 0
  set_entry(p, 3, 4, a.is_zero() ? Scalar(0) : Scalar(-f0 / a));
  const Scalar r12 = graph_r(p, 1, 2), r13 = graph_r(p, 1, 3), r23 = graph_r(p, 2, 3);
  set_entry(p, 1, 2, r12 / d);
  set_entry(p, 1, 3, r13 / d);
  set_entry(p, 2, 3, r23 / d);
  for (const auto& r : v1_equations(p))
    if (!r.is_zero()) throw std::logic_error("solve_graph: residual did not vanish");
  return p;
}

Scalar x47_second_difference(const SkewParam& p) {
  std::array<Scalar, 3> g;
  for (int t = 0; t < 3; ++t) {
    SkewParam q = p;
    set_entry(q, 4, 7, t);
    g[t] = fourth_relation(q);
  }
  return g[2] - Scalar(2) * g[1] + g[0];
}

MatS chart_jacobian(const MatS& equations, const SkewParam& p) {
  if (equations.cols() != 64) throw std::invalid_argument("chart_jacobian: equations need 64 columns");
  const auto& pairs = chart_pairs();
  MatS j(64, static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    SkewParam p0 = p, p1 = p;
    set_entry(p0, pairs[c].first, pairs[c].second, 0);
    set_entry(p1, pairs[c].first, pairs[c].second, 1);
    j.col(static_cast<Eigen::Index>(c)) = pfaffian_chart(p1) - pfaffian_chart(p0);
  }
  return equations * j;
}

MatQ embed_factor(const MatQ& x7, int factor) {
  if (factor != 1 && factor != 2) throw std::invalid_argument("factor must be 1 or 2");
  MatQ m = zeros<Rational>(14, 14);
  m.block(7 * (factor - 1), 7 * (factor - 1), 7, 7) = x7;
  return m;
}

SpinorModel::SpinorModel() {
  const SevenSpace V = SevenSpace::with(-2, 2);
  form_ = zeros<Rational>(14, 14);
  form_.topLeftCorner(7, 7) = V.gram;
  form_.bottomRightCorner(7, 7) = -V.gram;

  // g2: X with phi(Xa, b, c) + phi(a, Xb, c) + phi(a, b, Xc) = 0
  auto unit = [](int k) {
    VecQ e = zero_vec<Rational>(7);
    e(k) = 1;
    return e;
  };
  MatQ sys = zeros<Rational>(35, 49);
  for (int t = 0; t < 35; ++t) {
    const auto [a, b, c] = triple(t);
    for (int i = 0; i < 7; ++i) {
      sys(t, i * 7 + a) += V.phi(unit(i), unit(b), unit(c));
      sys(t, i * 7 + b) += V.phi(unit(a), unit(i), unit(c));
      sys(t, i * 7 + c) += V.phi(unit(a), unit(b), unit(i));
    }
  }
  MatQ ker = kernel<Rational>(sys);
  for (Eigen::Index k = 0; k < ker.cols(); ++k) {
    MatQ x(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) x(i, j) = ker(i * 7 + j, k);
    g2_.push_back(x);
  }

  // root vectors: eigenvectors of ad H on g2
  h_ = zeros<Rational>(7, 7);
  const long hd[7] = {3, -2, -1, 0, 1, 2, -3};
  for (int i = 0; i < 7; ++i) h_(i, i) = hd[i];
  MatQ flat(49, static_cast<Eigen::Index>(g2_.size()));
  for (std::size_t k = 0; k < g2_.size(); ++k)
    flat.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const VecQ>(g2_[k].data(), 49);
  const auto n = static_cast<Eigen::Index>(g2_.size());
  MatQ ad(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    MatQ br = h_ * g2_[k] - g2_[k] * h_;
    auto c = solve<Rational>(flat, VecQ(Eigen::Map<const VecQ>(br.data(), 49)));
    if (!c) throw std::logic_error("H does not normalize g2");
    ad.col(k) = *c;
  }
  std::vector<long> seen;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const long lam = hd[i] - hd[j];
      if (lam == 0 || std::find(seen.begin(), seen.end(), lam) != seen.end()) continue;
      seen.push_back(lam);
      MatQ e = kernel<Rational>(MatQ(ad - identity<Rational>(n) * Rational(lam)));
      for (Eigen::Index k = 0; k < e.cols(); ++k) {
        MatQ x = zeros<Rational>(7, 7);
        for (Eigen::Index b = 0; b < n; ++b) x += g2_[b] * e(b, k);
        roots_.push_back(x);
      }
    }

  // W = e1, e2, e3, e0 + f0, f1, f2, f3 ; W~ = e-1, e-2, e-3, (e0 - f0)/2, f-1, f-2, f-3
  auto e = [](int label) { return SevenSpace::index(label); };
  auto f = [](int label) { return 7 + SevenSpace::index(label); };
  MatQ mb = zeros<Rational>(14, 14);
  for (int k = 0; k < 3; ++k) {
    mb(e(k + 1), k) = 1;
    mb(f(k + 1), 4 + k) = 1;
    mb(e(-k - 1), 7 + k) = 1;
    mb(f(-k - 1), 11 + k) = 1;
  }
  mb(e(0), 3) = mb(f(0), 3) = 1;
  mb(e(0), 10) = Rational(1, 2);
  mb(f(0), 10) = Rational(-1, 2);
  w_basis_inv_ = inverse<Rational>(mb);

  const auto& t = tables();
  std::vector<Op> eps, iota;
  for (int j = 0; j < 7; ++j) {
    std::vector<Eigen::Triplet<Rational>> trip;
    for (int c = 0; c < 128; ++c) {
      const int m = t.masks[c];
      if (m >> j & 1) continue;
      const int below = __builtin_popcount(m & ((1 << j) - 1));
      trip.emplace_back(t.index_of_mask[m | 1 << j], c, Rational(below % 2 ? -1 : 1));
    }
    eps.push_back(from_triplets(trip));
  }
  for (int k = 0; k < 7; ++k) {
    std::vector<Eigen::Triplet<Rational>> trip;
    for (int c = 0; c < 128; ++c) {
      const int m = t.masks[c];
      int pos = 0;
      for (int j = 0; j < 7; ++j) {
        if (!(m >> j & 1)) continue;
        const Rational val = 2 * mb.col(7 + k).dot(form_ * mb.col(j));
        if (val != 0) trip.emplace_back(t.index_of_mask[m & ~(1 << j)], c, pos % 2 ? Rational(-val) : val);
        ++pos;
      }
    }
    iota.push_back(from_triplets(trip));
  }
  cl_.resize(14);
  for (int a = 0; a < 14; ++a) {
    const VecQ c = w_basis_inv_.col(a);
    Op m(128, 128);
    for (int j = 0; j < 7; ++j) {
      if (c(j) != 0) m += eps[j] * c(j);
      if (c(7 + j) != 0) m += iota[j] * c(7 + j);
    }
    m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
    cl_[a] = m;
  }

  for (const auto& x : g2_) {
    rho1_.push_back(rho_even(x, 1));
    rho2_.push_back(rho_even(x, 2));
  }
  for (const auto& x : roots_) {
    root_rho1_.push_back(rho_even(x, 1));
    root_rho2_.push_back(rho_even(x, 2));
  }
}

SpinorModel::Op SpinorModel::clifford(const VecQ& v) const {
  Op m(128, 128);
  for (int a = 0; a < 14; ++a)
    if (v(a) != 0) m += cl_[a] * v(a);
  return m;
}

SpinorModel::Op SpinorModel::rho(const MatQ& x14) const {
  const MatQ gi = inverse<Rational>(form_);
  Op r(128, 128);
  for (int a = 0; a < 14; ++a) {
    const VecQ xa = x14.col(a);
    if (is_zero(xa)) continue;
    r += product(clifford(xa), clifford(VecQ(gi.col(a))));
  }
  r *= Rational(1, 4);
  r.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return v != 0; });
  return r;
}

MatQ SpinorModel::rho_even(const MatQ& x7, int factor) const { return restrict_even(rho(embed_factor(x7, factor))); }

const SpinorModel::Decomposition& SpinorModel::decomposition() const {
  if (!dec_.empty()) return dec_.front();
  Decomposition d;
  std::vector<MatQ> both = rho1_;
  both.insert(both.end(), rho2_.begin(), rho2_.end());
  d.trivial = common_kernel(both, 64);
  const MatQ ker1 = common_kernel(rho1_, 64), ker2 = common_kernel(rho2_, 64);
  std::vector<MatQ> b1, b2, b12;
  for (const auto& r : rho1_) b1.push_back(r * ker2);
  for (const auto& r : rho2_) b2.push_back(r * ker1);
  d.v1 = span_of(b1, 64);
  d.v2 = span_of(b2, 64);
  // rho2 maps onto V2 + V1V2 and rho1 then kills V2
  std::vector<MatQ> img2;
  for (const auto& r : rho2_) img2.push_back(r);
  const MatQ image2 = span_of(img2, 64);
  for (const auto& r : rho1_) b12.push_back(r * image2);
  d.v1v2 = span_of(b12, 64);
  MatQ keep(64, d.v1v2.cols() + d.trivial.cols());
  keep << d.v1v2, d.trivial;
  d.equations = kernel<Rational>(MatQ(keep.transpose())).transpose();
  MatQ all(64, keep.cols() + d.v1.cols() + d.v2.cols());
  all << keep, d.v1, d.v2;
  d.direct_sum = all.cols() == 64 && rank<Rational>(all) == 64;
  dec_.push_back(d);
  return dec_.front();
}

VecQ SpinorModel::base_point() const {
  std::vector<MatQ> ops;
  for (int k = 0; k < 7; ++k) ops.push_back(MatQ(Op(cl_[k] + cl_[7 + k])));
  MatQ k = common_kernel(ops, 128);
  if (k.cols() != 1) throw std::logic_error("diagonal pure spinor is not unique");
  const auto& t = tables();
  VecQ s(64);
  for (int c = 0; c < 128; ++c) {
    if (t.even_pos[c] >= 0) s(t.even_pos[c]) = k(c, 0);
    else if (k(c, 0) != 0) throw std::logic_error("diagonal pure spinor is not even");
  }
  for (Eigen::Index i = 0; i < 64; ++i)
    if (s(i) != 0) return VecQ(s / Rational(s(i)));
  throw std::logic_error("zero pure spinor");
}

VecQ SpinorModel::orbit_sample(std::uint64_t seed, int rounds) const {
  Sampler smp(seed, 3, 2);
  VecQ s = base_point();
  const long nr = static_cast<long>(roots_.size());
  for (int r = 0; r < rounds || s(0) == 0; ++r) {
    if (r > rounds + 20) throw std::domain_error("orbit_sample: no sample in the chart");
    for (int factor = 1; factor <= 2; ++factor) {
      const auto& ops = factor == 1 ? root_rho1_ : root_rho2_;
      s = apply_exp(MatQ(ops[smp.integer(0, nr - 1)] * smp.nonzero_rational()), s);
    }
  }
  return s / Rational(s(0));
}

long SpinorModel::orbit_tangent_dim(const VecQ& s) const {
  MatQ m(64, 1 + rho1_.size() + rho2_.size());
  m.col(0) = s;
  Eigen::Index c = 1;
  for (const auto& r : rho1_) m.col(c++) = r * s;
  for (const auto& r : rho2_) m.col(c++) = r * s;
  return static_cast<long>(rank<Rational>(m)) - 1;
}

SpinorSample analyze_sample(const SpinorModel& m, const VecQ& s_in) {
  if (s_in.size() != 64 || s_in(0) == 0) throw std::domain_error("analyze_sample: point outside the chart");
  const VecQ s = s_in / Rational(s_in(0));
  SpinorSample out;
  out.x = zeros<Scalar>(7, 7);
  for (const auto& [i, j] : chart_pairs()) set_entry(out.x, i, j, s(even_index({i, j})));
  out.chart_matches = pfaffian_chart(out.x) == s.cast<Scalar>();
  const MatQ& eq = m.decomposition().equations;
  out.on_section = is_zero(VecQ(eq * s));
  out.jacobian_rank = static_cast<long>(rank<Scalar>(chart_jacobian(eq.cast<Scalar>(), out.x)));
  out.local_dim = static_cast<long>(chart_pairs().size()) - out.jacobian_rank;
  out.orbit_dim = m.orbit_tangent_dim(s);
  return out;
}

DecompositionAudit decomposition_audit(const SpinorModel& m) {
  const auto& d = m.decomposition();
  DecompositionAudit a;
  a.v1v2 = static_cast<int>(d.v1v2.cols());
  a.v1 = static_cast<int>(d.v1.cols());
  a.v2 = static_cast<int>(d.v2.cols());
  a.trivial = static_cast<int>(d.trivial.cols());
  a.total = a.v1v2 + a.v1 + a.v2 + a.trivial;
  a.direct_sum = d.direct_sum;
  MatQ ex(64, d.v1.cols() + d.v2.cols() + d.trivial.cols());
  ex << d.v1, d.v2, d.trivial;
  a.explicit_rank = static_cast<int>(rank<Rational>(ex));

  // Lambda W1 as the spin module of so(V1): e_i wedges, e_-i contracts,
  // e0 acts by the parity sign
  const std::vector<std::vector<int>> w1subs{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  auto w1pos = [&](const std::vector<int>& s) {
    return static_cast<Eigen::Index>(std::find(w1subs.begin(), w1subs.end(), s) - w1subs.begin());
  };
  const MatQ g1 = m.form().topLeftCorner(7, 7);
  auto w1_clifford = [&](const VecQ& v) {
    MatQ c = zeros<Rational>(8, 8);
    for (const auto& sub : w1subs) {
      const Eigen::Index col = w1pos(sub);
      c(col, col) += v(SevenSpace::index(0)) * (sub.size() % 2 ? -1 : 1);
      for (int i = 1; i <= 3; ++i) {
        const auto at = std::find(sub.begin(), sub.end(), i);
        if (at == sub.end()) {
          std::vector<int> ns = sub;
          ns.insert(std::upper_bound(ns.begin(), ns.end(), i), i);
          const long below = std::count_if(sub.begin(), sub.end(), [&](int x) { return x < i; });
          c(w1pos(ns), col) += v(SevenSpace::index(i)) * (below % 2 ? -1 : 1);
        } else {
          std::vector<int> ns = sub;
          const long pos = at - sub.begin();
          ns.erase(ns.begin() + pos);
          c(w1pos(ns), col) +=
              v(SevenSpace::index(-i)) * 2 * g1(SevenSpace::index(-i), SevenSpace::index(i)) * (pos % 2 ? -1 : 1);
        }
      }
    }
    return c;
  };
  const MatQ g1inv = inverse<Rational>(g1);
  std::vector<MatQ> w1rho;
  for (const auto& x : m.g2()) {
    MatQ r = zeros<Rational>(8, 8);
    for (int k = 0; k < 7; ++k) r += w1_clifford(VecQ(x.col(k))) * w1_clifford(VecQ(g1inv.col(k)));
    w1rho.push_back(r / Rational(4));
  }
  const MatQ inv = common_kernel(w1rho, 8);
  a.w1_invariant_dim = static_cast<int>(inv.cols());
  if (inv.cols() == 1 && inv(7, 0) != 0)
    for (Eigen::Index k = 0; k < 8; ++k) a.w1_invariant.push_back(inv(k, 0) / inv(7, 0));
  MatQ span = zeros<Rational>(8, 6);
  for (int k = 0; k < 6; ++k) span(1 + k, k) = 1;
  for (;;) {
    std::vector<MatQ> blocks{span};
    for (const auto& r : w1rho) blocks.push_back(MatQ(r * span));
    MatQ next = span_of(blocks, 8);
    if (next.cols() == span.cols()) break;
    span = next;
  }
  a.w1_module_dim = static_cast<int>(span.cols());

  const MatS v1 = d.v1.cast<Scalar>();
  const Eigen::Index r1rank = rank<Scalar>(v1);
  MatS stated(64, 3);
  const std::vector<std::pair<int, int>> ij{{1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = ij[k];
    VecS v = zero_vec<Scalar>(64);
    v(even_index({i, j})) = Scalar::i_sqrt2() * Scalar(2);
    v(even_index({i, j, 4, 5, 6, 7})) = 1;
    stated.col(k) = v;
    MatS aug(64, v1.cols() + 1);
    aug << v1, v;
    if (rank<Scalar>(aug) == r1rank) ++a.stated_v1_in_v1;
    MatQ sys(64, d.v1.cols() + 1);
    VecQ rhs = zero_vec<Rational>(64);
    rhs(even_index({i, j, 4, 5, 6, 7})) = 1;
    VecQ eij = zero_vec<Rational>(64);
    eij(even_index({i, j})) = -1;
    sys << d.v1, eij;
    auto sol = solve<Rational>(sys, rhs);
    if (sol) a.v1_coefficients.push_back((*sol)(sys.cols() - 1));
  }
  a.stated_v1_rank = static_cast<int>(rank<Scalar>(stated));
  VecQ origin = zero_vec<Rational>(64);
  origin(0) = 1;
  a.base_point_on_section = is_zero(VecQ(d.equations * origin));
  return a;
}

}  // namespace symvar
