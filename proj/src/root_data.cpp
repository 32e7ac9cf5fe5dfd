#include "symvar/root_data.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace symvar {

Mat<long> cartan_matrix(char family, int n) {
  Mat<long> A = Mat<long>::Zero(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = 2;
  auto link = [&](int i, int j) { A(i, j) = A(j, i) = -1; };
  switch (family) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      return A;
    case 'B':
      if (n < 2) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A(n - 2, n - 1) = -2;
      return A;
    case 'C':
      if (n < 2) break;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A(n - 1, n - 2) = -2;
      return A;
    case 'D':
      if (n < 3) break;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      return A;
    case 'E':
      if (n < 6 || n > 8) break;
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      return A;
    case 'F':
      if (n != 4) break;
      link(0, 1);
      link(1, 2);
      link(2, 3);
      A(1, 2) = -2;
      return A;
    case 'G':
      if (n != 2) break;
      A(0, 1) = -3;
      A(1, 0) = -1;
      return A;
    default:
      break;
  }
  throw std::invalid_argument(std::string("unknown root system type ") + family + std::to_string(n));
}

std::vector<long> root_lengths(char family, int n) {
  std::vector<long> len(n, 2);
  if (family == 'B') len[n - 1] = 1;
  if (family == 'C')
    for (int i = 0; i + 1 < n; ++i) len[i] = 1;
  if (family == 'F') len[2] = len[3] = 1;
  if (family == 'G') len = {6, 2};
  return len;
}

namespace {

std::vector<long> key(const VecQ& v) {
  std::vector<long> k(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) throw std::logic_error("root with non-integral coordinate");
    k[i] = static_cast<long>(numerator(v(i)));
  }
  return k;
}

std::vector<RootComponent> parse_type(const std::string& t) {
  std::vector<RootComponent> out;
  std::stringstream ss(t);
  std::string part;
  int offset = 0;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2) throw std::invalid_argument("bad root system label: " + t);
    char f = part[0];
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad root system label: " + t);
    }
    cartan_matrix(f, r);  // validates
    out.push_back({f, r, offset});
    offset += r;
  }
  if (out.empty()) throw std::invalid_argument("empty root system label");
  return out;
}

}  // namespace

RootSystem::RootSystem(const std::string& type) : type_(type), comps_(parse_type(type)) {
  for (const auto& c : comps_) rank_ += c.rank;
  cartan_ = Mat<long>::Zero(rank_, rank_);
  gram_ = zeros<Rational>(rank_, rank_);
  for (const auto& c : comps_) {
    Mat<long> A = cartan_matrix(c.family, c.rank);
    std::vector<long> len = root_lengths(c.family, c.rank);
    cartan_.block(c.offset, c.offset, c.rank, c.rank) = A;
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        gram_(c.offset + i, c.offset + j) = Rational(A(i, j) * len[j], 2);
  }
  if (gram_ != gram_.transpose()) throw std::logic_error("Cartan data not symmetrizable");
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (2 * gram_(i, j) / gram_(j, j) != cartan_(i, j)) throw std::logic_error("Cartan mismatch");
  // reflection closure
  std::map<std::vector<long>, int> seen;
  std::vector<VecQ> queue;
  for (int i = 0; i < rank_; ++i) queue.push_back(simple_root(i));
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const VecQ b = queue[q];
    if (seen.count(key(b))) continue;
    seen[key(b)] = static_cast<int>(roots_.size());
    roots_.push_back(b);
    for (int i = 0; i < rank_; ++i) {
      VecQ r = reflect(b, simple_root(i));
      if (!seen.count(key(r))) queue.push_back(r);
    }
    if (roots_.size() > 1000) throw std::logic_error("root closure did not terminate");
  }
}

VecQ RootSystem::simple_root(int i) const {
  VecQ v = zero_vec<Rational>(rank_);
  v(i) = 1;
  return v;
}

VecQ RootSystem::coroot(const VecQ& a) const { return a * (Rational(2) / pairing(a, a)); }

VecQ RootSystem::reflect(const VecQ& x, const VecQ& a) const {
  return x - a * (2 * pairing(x, a) / pairing(a, a));
}

int RootSystem::root_index(const VecQ& v) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == v) return static_cast<int>(k);
  return -1;
}

bool RootSystem::is_root(const VecQ& v) const { return root_index(v) >= 0; }

std::vector<VecQ> RootSystem::positive_roots() const {
  std::vector<VecQ> out;
  for (const auto& r : roots_) {
    bool pos = true;
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (r(i) < 0) pos = false;
    if (pos) out.push_back(r);
  }
  return out;
}

std::vector<Weight> fundamental_weights(const RootSystem& R) {
  const int n = R.rank();
  // w_i = sum_k c_ik a_k with (w_i, a_j^v) = delta_ij
  MatQ P(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) P(k, j) = R.pairing(R.simple_root(k), R.simple_coroot(j));
  if (det<Rational>(P) == 0) throw std::domain_error("fundamental_weights: degenerate form");
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) {
    VecQ e = zero_vec<Rational>(n);
    e(i) = 1;
    w.push_back(*solve<Rational>(MatQ(P.transpose()), e));
  }
  return w;
}

std::vector<VecQ> fundamental_coweights(const RootSystem& R) {
  const int n = R.rank();
  MatQ P(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) P(k, j) = R.pairing(R.simple_coroot(k), R.simple_root(j));
  if (det<Rational>(P) == 0) throw std::domain_error("fundamental_coweights: degenerate form");
  std::vector<VecQ> w;
  for (int i = 0; i < n; ++i) {
    VecQ e = zero_vec<Rational>(n);
    e(i) = 1;
    // coefficients on simple coroots, converted to root coordinates
    VecQ c = *solve<Rational>(MatQ(P.transpose()), e);
    VecQ v = zero_vec<Rational>(n);
    for (int k = 0; k < n; ++k) v += R.simple_coroot(k) * c(k);
    w.push_back(v);
  }
  return w;
}

bool is_dominant(const Weight& w, const RootSystem& R) {
  for (int i = 0; i < R.rank(); ++i)
    if (R.pairing(w, R.simple_coroot(i)) < 0) return false;
  return true;
}

long dim_group(const RootSystem& R) { return static_cast<long>(R.roots().size()) + R.rank(); }

long dim_flag(const RootSystem& R, const std::vector<int>& marked) {
  for (int m : marked)
    if (m < 1 || m > R.rank()) throw std::invalid_argument("dim_flag: simple root label out of range");
  long n = 0;
  for (const auto& r : R.positive_roots()) {
    bool out = false;
    for (int m : marked)
      if (r(m - 1) != 0) out = true;
    n += out;
  }
  return n;
}

}  // namespace symvar
