#include "symvar/restricted.hpp"
#include "symvar/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace symvar {

InvolutionData::InvolutionData(RootSystem R, MatQ theta) : R_(std::move(R)), theta_(std::move(theta)) {
  if (theta_.rows() != R_.rank() || theta_.cols() != R_.rank())
    throw std::invalid_argument("involution matrix has wrong size");
  for (const auto& b : R_.roots())
    if (theta_ * b == b) fixed_.push_back(b);
}

int InvolutionData::minus_eigenspace_dim() const {
  MatQ P = theta_ + identity<Rational>(R_.rank());
  return R_.rank() - static_cast<int>(rank<Rational>(P));
}

InvolutionCheck check_involution(const RootSystem& R, const MatQ& theta) {
  InvolutionCheck c;
  if (theta.rows() != R.rank() || theta.cols() != R.rank()) return c;
  c.involutive = theta * theta == identity<Rational>(R.rank());
  c.permutes_roots = true;
  for (const auto& b : R.roots()) {
    VecQ t = theta * b;
    bool integral = true;
    for (Eigen::Index i = 0; i < t.size(); ++i)
      if (denominator(t(i)) != 1) integral = false;
    if (!integral || !R.is_root(t)) {
      c.permutes_roots = false;
      break;
    }
  }
  c.orthogonal = MatQ(theta.transpose() * R.gram() * theta) == R.gram();
  return c;
}

namespace {

bool integral(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (denominator(v(i)) != 1) return false;
  return true;
}

int find(const std::vector<VecQ>& list, const VecQ& v) {
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == v) return static_cast<int>(k);
  return -1;
}

MatQ columns(const std::vector<VecQ>& v, Eigen::Index rows) {
  MatQ M(rows, v.size());
  for (std::size_t k = 0; k < v.size(); ++k) M.col(k) = v[k];
  return M;
}

// permutation p with A(p[i], p[j]) == target(i, j), first in lexicographic order
bool match_cartan(const Mat<long>& A, const Mat<long>& target, std::vector<int>& p) {
  const int n = static_cast<int>(A.rows());
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (A(q[i], q[j]) != target(i, j)) ok = false;
    if (ok) {
      p = q;
      return true;
    }
  } while (std::next_permutation(q.begin(), q.end()));
  return false;
}

}  // namespace

RestrictedRootSystem restrict(const InvolutionData& inv) {
  const RootSystem& R = inv.root_system();
  InvolutionCheck chk = check_involution(R, inv.theta());
  if (!chk.involutive) throw std::domain_error("theta is not an involution");
  if (!chk.permutes_roots) throw std::domain_error("theta does not permute the roots");
  if (!chk.orthogonal) throw std::domain_error("theta does not preserve the invariant form");

  RestrictedRootSystem out;
  out.inv_ = std::make_shared<const InvolutionData>(inv);
  const int n = R.rank();
  for (const auto& b : R.roots()) {
    VecQ r = b - inv.apply(b);
    if (!is_zero(r) && find(out.roots_, r) < 0) out.roots_.push_back(r);
  }
  std::vector<VecQ> cand;
  for (int j = 0; j < n; ++j) {
    VecQ r = R.simple_root(j) - inv.apply(R.simple_root(j));
    if (!is_zero(r) && find(cand, r) < 0) cand.push_back(r);
  }
  const int s = static_cast<int>(cand.size());
  if (s != inv.minus_eigenspace_dim()) throw std::logic_error("restricted basis has wrong size");
  MatQ Cm = columns(cand, n);
  if (rank<Rational>(Cm) != s) throw std::logic_error("restricted basis is not independent");
  for (const auto& r : out.roots_) {
    auto c = solve<Rational>(Cm, r);
    if (!c || !integral(*c)) throw std::logic_error("restricted root outside the lattice of the basis");
    bool pos = true, neg = true;
    for (int i = 0; i < s; ++i) {
      if ((*c)(i) < 0) pos = false;
      if ((*c)(i) > 0) neg = false;
    }
    if (!pos && !neg) throw std::logic_error("positive system not compatible with theta");
  }
  for (const auto& r : out.roots_)
    for (const auto& a : cand)
      if (find(out.roots_, R.reflect(r, a)) < 0) throw std::logic_error("restricted roots not reflection-closed");

  // components and canonical labels
  Mat<long> A(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      Rational v = 2 * R.pairing(cand[i], cand[j]) / R.pairing(cand[j], cand[j]);
      if (denominator(v) != 1) throw std::logic_error("restricted Cartan entry not integral");
      A(i, j) = static_cast<long>(numerator(v));
    }
  std::vector<int> comp(s, -1);
  int ncomp = 0;
  for (int i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      for (int j = 0; j < s; ++j)
        if (comp[j] < 0 && A(k, j) != 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<int> order;
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < s; ++i)
      if (comp[i] == c) idx.push_back(i);
    const int m = static_cast<int>(idx.size());
    Mat<long> Ac(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) Ac(i, j) = A(idx[i], idx[j]);
    bool nonreduced = false;
    for (int i : idx)
      if (find(out.roots_, VecQ(cand[i] * Rational(2))) >= 0) nonreduced = true;
    std::vector<int> p;
    char fam = 0;
    for (char f : std::string("ABCDEFG")) {
      if (f == 'C' && m == 2) continue;  // reported as B2, alpha_1 long
      if (nonreduced && !(f == 'B' || (f == 'A' && m == 1))) continue;
      Mat<long> T;
      try {
        T = cartan_matrix(f, m);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (f == 'D' && m < 4) continue;
      if (!match_cartan(Ac, T, p)) continue;
      if (nonreduced) {
        // only the last (short) simple root may be divisible
        bool good = true;
        for (int i = 0; i + 1 < m; ++i)
          if (find(out.roots_, VecQ(cand[idx[p[i]]] * Rational(2))) >= 0) good = false;
        if (!good) continue;
      }
      fam = f;
      break;
    }
    if (!fam) throw std::logic_error("restricted root system of unknown type");
    for (int i = 0; i < m; ++i) order.push_back(idx[p[i]]);
    RestrictedComponent rc{nonreduced ? "BC" + std::to_string(m) : std::string(1, fam) + std::to_string(m),
                           fam, m, nonreduced};
    out.comps_.push_back(rc);
    labels.push_back(rc.label);
  }
  for (std::size_t k = 0; k < labels.size(); ++k) out.type_ += (k ? "x" : "") + labels[k];
  for (int i : order) out.basis_.push_back(cand[i]);

  for (const auto& a : out.basis_) {
    Rational b = find(out.roots_, VecQ(a * Rational(2))) >= 0 ? Rational(1, 2) : Rational(1);
    out.b_.push_back(b);
    out.coroots_.push_back(a * (2 * b / R.pairing(a, a)));
  }
  MatQ P(s, s), Pc(s, s);
  for (int k = 0; k < s; ++k)
    for (int j = 0; j < s; ++j) {
      P(k, j) = R.pairing(out.basis_[k], out.coroots_[j]);
      Pc(k, j) = R.pairing(out.coroots_[k], out.basis_[j]);
    }
  for (int i = 0; i < s; ++i) {
    VecQ e = zero_vec<Rational>(s);
    e(i) = 1;
    VecQ c = *solve<Rational>(MatQ(P.transpose()), e);
    VecQ cc = *solve<Rational>(MatQ(Pc.transpose()), e);
    VecQ w = zero_vec<Rational>(n), wc = zero_vec<Rational>(n);
    for (int k = 0; k < s; ++k) {
      w += out.basis_[k] * c(k);
      wc += out.coroots_[k] * cc(k);
    }
    out.weights_.push_back(w);
    out.coweights_.push_back(wc);
  }

  // two distinct simple roots with the same image, not forming a theta-orthogonal pair
  for (int i = 0; i < s; ++i) {
    std::vector<VecQ> pre;
    for (int j = 0; j < n; ++j)
      if (R.simple_root(j) - inv.apply(R.simple_root(j)) == out.basis_[i]) pre.push_back(R.simple_root(j));
    bool exc = false;
    for (std::size_t a = 0; a < pre.size(); ++a)
      for (std::size_t b = 0; b < pre.size(); ++b) {
        if (a == b) continue;
        if (inv.apply(pre[a]) != -pre[b] || R.pairing(pre[a], pre[b]) != 0) exc = true;
      }
    if (exc) out.exceptional_.push_back(i + 1);
  }
  return out;
}

int RestrictedRootSystem::multiplicity(const VecQ& alpha) const {
  int m = 0;
  for (const auto& b : ambient().roots())
    if (b - inv_->apply(b) == alpha) ++m;
  return m;
}

VecQ RestrictedRootSystem::weight_coords(const VecQ& x) const {
  VecQ c(rank());
  for (int i = 0; i < rank(); ++i) c(i) = pairing(x, coroots_[i]);
  return c;
}

VecQ RestrictedRootSystem::coweight_coords(const VecQ& x) const {
  VecQ c(rank());
  for (int i = 0; i < rank(); ++i) c(i) = pairing(basis_[i], x);
  return c;
}

VecQ RestrictedRootSystem::from_weight_coords(const VecQ& c) const {
  VecQ v = zero_vec<Rational>(ambient().rank());
  for (int i = 0; i < rank(); ++i) v += weights_[i] * c(i);
  return v;
}

VecQ RestrictedRootSystem::from_coweight_coords(const VecQ& c) const {
  VecQ v = zero_vec<Rational>(ambient().rank());
  for (int i = 0; i < rank(); ++i) v += coweights_[i] * c(i);
  return v;
}

bool RestrictedRootSystem::is_dominant(const VecQ& w) const {
  VecQ c = weight_coords(w);
  for (int i = 0; i < rank(); ++i)
    if (c(i) < 0) return false;
  return true;
}

bool RestrictedRootSystem::in_valuation_cone(const VecQ& x) const {
  for (const auto& a : basis_)
    if (pairing(a, x) > 0) return false;
  return true;
}

VecQ RestrictedRootSystem::reflect_coweight(const VecQ& x, int i) const {
  return x - coroots_.at(i - 1) * pairing(basis_.at(i - 1), x);
}

ValuationCone valuation_cone(const RestrictedRootSystem& rrs) {
  ValuationCone vc;
  for (const auto& w : rrs.coweights()) vc.generators.push_back(-w);
  vc.inequalities = rrs.basis();
  const int n = rrs.ambient().rank();
  const MatQ& B = rrs.ambient().gram();
  MatQ ineq(rrs.rank(), n);
  for (int i = 0; i < rrs.rank(); ++i) ineq.row(i) = -(B * rrs.basis()[i]).transpose();
  MatQ eq = rrs.involution().theta() + identity<Rational>(n);
  PolyCone pc = extreme_rays(ineq, eq);
  bool agree = pc.pointed && pc.rays.size() == vc.generators.size();
  for (const auto& g : vc.generators) {
    bool gen_ok = false;
    for (const auto& r : pc.rays)
      if (same_ray(g, r)) gen_ok = true;
    agree = agree && gen_ok && rrs.in_valuation_cone(g);
  }
  vc.presentations_agree = agree;
  return vc;
}

CharacterLattice lattice_from_chi(const RestrictedRootSystem& rrs, const std::vector<VecQ>& chi) {
  const int s = rrs.rank();
  if (static_cast<int>(chi.size()) != s) throw std::invalid_argument("lattice basis has wrong size");
  MatQ M(s, s);
  for (int i = 0; i < s; ++i)
    for (int l = 0; l < s; ++l) M(i, l) = rrs.pairing(chi[i], rrs.coweights()[l]);
  if (det<Rational>(M) == 0) throw std::invalid_argument("lattice basis is degenerate");
  CharacterLattice L{chi, {}};
  for (int j = 0; j < s; ++j) {
    VecQ e = zero_vec<Rational>(s);
    e(j) = 1;
    L.chi_star.push_back(rrs.from_coweight_coords(*solve<Rational>(M, e)));
  }
  return L;
}

CharacterLattice lattice_from_chi_star(const RestrictedRootSystem& rrs,
                                       const std::vector<VecQ>& chi_star) {
  const int s = rrs.rank();
  if (static_cast<int>(chi_star.size()) != s) throw std::invalid_argument("lattice basis has wrong size");
  MatQ M(s, s);
  for (int i = 0; i < s; ++i)
    for (int l = 0; l < s; ++l) M(i, l) = rrs.pairing(rrs.weights()[l], chi_star[i]);
  if (det<Rational>(M) == 0) throw std::invalid_argument("lattice basis is degenerate");
  CharacterLattice L{{}, chi_star};
  for (int j = 0; j < s; ++j) {
    VecQ e = zero_vec<Rational>(s);
    e(j) = 1;
    L.chi.push_back(rrs.from_weight_coords(*solve<Rational>(M, e)));
  }
  return L;
}

CharacterLattice weight_lattice(const RestrictedRootSystem& rrs) {
  return lattice_from_chi(rrs, rrs.weights());
}

CharacterLattice root_lattice(const RestrictedRootSystem& rrs) {
  return lattice_from_chi(rrs, rrs.basis());
}

LatticeCheck check_lattice(const RestrictedRootSystem& rrs, const CharacterLattice& L) {
  const int s = rrs.rank();
  LatticeCheck c;
  MatQ X(s, s);  // columns: chi basis in weight coordinates
  for (int i = 0; i < s; ++i) X.col(i) = rrs.weight_coords(L.chi[i]);
  c.inside_weight_lattice = true;
  for (int i = 0; i < s; ++i)
    if (!integral(X.col(i))) c.inside_weight_lattice = false;
  MatQ Rt(s, s);  // columns: simple roots in chi coordinates
  c.contains_root_lattice = true;
  for (int i = 0; i < s; ++i) {
    VecQ y = *solve<Rational>(X, rrs.weight_coords(rrs.basis()[i]));
    if (!integral(y)) c.contains_root_lattice = false;
    Rt.col(i) = y;
  }
  Rational d = det<Rational>(Rt);
  if (d < 0) d = -d;
  c.index_over_root_lattice = denominator(d) == 1 ? Integer(numerator(d)) : Integer(0);
  return c;
}

long symmetric_space_dim(const InvolutionData& inv) {
  const long nroots = static_cast<long>(inv.root_system().roots().size());
  const long nfixed = static_cast<long>(inv.fixed_roots().size());
  return inv.minus_eigenspace_dim() + (nroots - nfixed) / 2;
}

}  // namespace symvar
