#include "symvar/colored_fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace symvar {

namespace {

std::vector<VecQ> to_coweight(const RestrictedRootSystem& rrs, const std::vector<VecQ>& v) {
  std::vector<VecQ> out;
  for (const auto& x : v) {
    VecQ c = rrs.coweight_coords(x);
    if (!is_zero(c)) out.push_back(c);
  }
  return out;
}

bool nonpositive(const VecQ& c) {
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c(i) > 0) return false;
  return true;
}

VecQ unit(int s, int i, long sign) {
  VecQ e = zero_vec<Rational>(s);
  e(i) = sign;
  return e;
}

// smallest c > 0 with c * v integral
Rational integral_scale(const std::vector<Rational>& v) {
  Integer l = 1, g = 0;
  for (const auto& q : v) l = lcm(l, Integer(denominator(q)));
  for (const auto& q : v) g = gcd(g, Integer(numerator(Rational(q * Rational(l)))));
  if (g == 0) throw std::logic_error("direction pairs trivially with the lattice");
  if (g < 0) g = -g;
  return Rational(l) / Rational(g);
}

}  // namespace

ConeCheck validate_cone(const ColoredCone& cone, const RestrictedRootSystem& rrs) {
  if (cone.generators.empty()) throw std::invalid_argument("colored cone without generators");
  const int s = rrs.rank();
  for (int i : cone.colors)
    if (i < 1 || i > s) throw std::invalid_argument("color label out of range");
  std::vector<VecQ> g = to_coweight(rrs, cone.generators);
  std::vector<VecQ> colors;
  for (int i : cone.colors) colors.push_back(rrs.coweight_coords(rrs.restricted_coroot(i)));

  ConeCheck chk;
  chk.colors_are_generators = std::all_of(colors.begin(), colors.end(), [&](const VecQ& c) {
    return std::any_of(g.begin(), g.end(), [&](const VecQ& v) { return same_ray(c, v); });
  });
  chk.others_in_valuation_cone = std::all_of(g.begin(), g.end(), [&](const VecQ& v) {
    bool is_color = std::any_of(colors.begin(), colors.end(), [&](const VecQ& c) { return same_ray(c, v); });
    return is_color || nonpositive(v);
  });

  const int k = static_cast<int>(g.size());
  MatQ G = zeros<Rational>(s, k);
  for (int j = 0; j < k; ++j) G.col(j) = g[j];
  chk.pointed = k == 0 || extreme_rays(identity<Rational>(k), G).rays.empty();

  VecQ sum = zero_vec<Rational>(s);
  for (const auto& v : g) sum += v;
  if (nonpositive(sum)) {
    chk.interior_meets_valuation_cone = true;
    chk.witness = sum;
  } else {
    // lambda_j >= t, G lambda <= 0, t >= 0; a ray with t > 0 gives a witness
    MatQ A = zeros<Rational>(k + s + 1, k + 1);
    for (int j = 0; j < k; ++j) {
      A(j, j) = 1;
      A(j, k) = -1;
    }
    A.block(k, 0, s, k) = -G;
    A(k + s, k) = 1;
    PolyCone pc = extreme_rays(A, MatQ(0, k + 1));
    for (const auto& r : pc.rays)
      if (r(k) > 0) {
        chk.interior_meets_valuation_cone = true;
        chk.witness = G * r.head(k);
        break;
      }
  }
  if (chk.interior_meets_valuation_cone) chk.witness = rrs.from_coweight_coords(chk.witness);

  if (!chk.colors_are_generators)
    chk.reason = "a color is not a generator";
  else if (!chk.others_in_valuation_cone)
    chk.reason = "a non-color generator lies outside the valuation cone";
  else if (!chk.pointed)
    chk.reason = "cone is not strictly convex";
  else if (!chk.interior_meets_valuation_cone)
    chk.reason = "relative interior misses the valuation cone";
  return chk;
}

CompletenessCheck is_complete(const ColoredFan& f, const RestrictedRootSystem& rrs) {
  if (f.cones.size() > 2) throw std::domain_error("fans with more than two maximal cones are not supported");
  const int s = rrs.rank();
  CompletenessCheck out;
  std::vector<std::vector<VecQ>> cones;
  for (const auto& c : f.cones) cones.push_back(to_coweight(rrs, c.generators));
  auto covered = [&](const VecQ& x) {
    return std::any_of(cones.begin(), cones.end(), [&](const auto& g) { return cone_contains(g, x); });
  };
  auto fail = [&](const VecQ& x) {
    out.complete = false;
    out.uncovered = rrs.from_coweight_coords(x);
    return out;
  };

  if (cones.size() <= 1 || s == 1) {
    out.method = "generator containment";
    for (int i = 0; i < s; ++i)
      if (!covered(unit(s, i, -1))) return fail(unit(s, i, -1));
    out.complete = true;
    return out;
  }

  if (s == 2) {
    // x(t) = (1-t)(-w1) + t(-w2); each cone meets the segment in a closed interval
    out.method = "angular sweep";
    const VecQ a = unit(2, 0, -1), b = unit(2, 1, -1);
    std::vector<Rational> ts{0, 1};
    for (const auto& g : cones) {
      Facets fc = facets(g, 2);
      MatQ rows = vstack<Rational>(fc.normals, fc.span_eq);
      for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        Rational ha = rows.row(r).dot(a), hd = rows.row(r).dot(b - a);
        if (hd == 0) continue;
        Rational t = -ha / hd;
        if (t > 0 && t < 1) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rational> probes;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      probes.push_back(ts[i]);
      if (i + 1 < ts.size()) probes.push_back((ts[i] + ts[i + 1]) / 2);
    }
    for (const auto& t : probes) {
      VecQ x = a * (1 - t) + b * t;
      if (!covered(x)) return fail(x);
    }
    out.complete = true;
    return out;
  }

  // two cones in rank >= 3: split -C+ along the hyperplane through the shared generators
  out.method = "shared-facet split";
  std::vector<VecQ> shared;
  for (const auto& u : cones[0])
    for (const auto& v : cones[1])
      if (same_ray(u, v)) shared.push_back(u);
  MatQ S(shared.size(), s);
  for (std::size_t r = 0; r < shared.size(); ++r) S.row(r) = shared[r].transpose();
  MatQ H = shared.empty() ? identity<Rational>(s) : kernel<Rational>(S);
  if (H.cols() != 1) {
    out.complete = false;
    return out;
  }
  VecQ h = H.col(0);
  auto side = [&](const std::vector<VecQ>& g, const VecQ& n) {
    return std::all_of(g.begin(), g.end(), [&](const VecQ& v) { return n.dot(v) >= 0; });
  };
  if (!side(cones[0], h)) h = -h;
  if (!side(cones[0], h) || !side(cones[1], VecQ(-h))) {
    out.complete = false;
    return out;
  }
  out.separator = h;
  for (int half = 0; half < 2; ++half) {
    VecQ n = half == 0 ? h : VecQ(-h);
    MatQ A(s + 1, s);
    A.topRows(s) = -identity<Rational>(s);
    A.row(s) = n.transpose();
    PolyCone pc = extreme_rays(A, MatQ(0, s));
    for (const auto& r : pc.rays)
      if (!cone_contains(cones[half], r)) return fail(r);
  }
  out.complete = true;
  return out;
}

SliceWeight slice_highest_weight(const RestrictedRootSystem& rrs, const CharacterLattice& L,
                                 const ColoredCone& c) {
  const int s = rrs.rank();
  if (static_cast<int>(c.colors.size()) != s - 1)
    throw std::invalid_argument("slice weight needs a cone with rank - 1 colors");
  int j = -1;
  for (int i = 1; i <= s; ++i)
    if (std::find(c.colors.begin(), c.colors.end(), i) == c.colors.end()) j = i;
  const VecQ& wj = rrs.coweights()[j - 1];
  std::vector<Rational> vals;
  for (const auto& b : L.chi) vals.push_back(rrs.pairing(b, wj));
  VecQ varpi = wj * integral_scale(vals);
  if (!cone_contains(c.generators, varpi)) {
    varpi = -varpi;
    if (!cone_contains(c.generators, varpi)) throw std::logic_error("neither sign of varpi^v lies in the cone");
  }
  MatQ M = zeros<Rational>(s, s);
  VecQ rhs = VecQ::Constant(s, Rational(1));
  int r = 0;
  for (int k : c.colors) M(r++, k - 1) = 1;
  for (int i = 0; i < s; ++i) M(r, i) = rrs.pairing(rrs.weights()[i], varpi);
  auto sol = solve<Rational>(M, rhs);
  if (!sol || rank<Rational>(M) != s) throw std::logic_error("slice weight system is inconsistent");
  SliceWeight sw;
  sw.varpi_check = varpi;
  sw.coords = *sol;
  sw.omega = rrs.from_weight_coords(*sol);
  sw.dominant = rrs.is_dominant(sw.omega);
  return sw;
}

Verdict homogeneity_verdict(const RestrictedRootSystem& rrs, const CharacterLattice& L,
                            const ColoredFan& f, std::optional<long> model_dim, long dim_GH) {
  Verdict v;
  if (rrs.rank() == 2)
    for (const auto& c : f.cones) v.slices.push_back(slice_highest_weight(rrs, L, c));
  if (model_dim && *model_dim == dim_GH) {
    v.transitive = true;
    v.reason = "homogeneous model of matching dimension";
    return v;
  }
  if (v.slices.empty()) throw std::invalid_argument("no homogeneous model and no slice weights");
  bool all_nondominant = std::none_of(v.slices.begin(), v.slices.end(),
                                      [](const SliceWeight& s) { return s.dominant; });
  v.transitive = !all_nondominant;
  v.reason = all_nondominant ? "slice weight not dominant at any closed orbit"
                             : "slice weight dominant at some closed orbit";
  return v;
}

}  // namespace symvar
