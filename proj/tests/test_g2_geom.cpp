#include "doctest.h"
#include "symvar/g2_geom.hpp"
#include "symvar/sampling.hpp"

using namespace symvar;

namespace {

// associators computed from the multiplication table, no shared code with
// associator_map
MatS direct_associators(const CompositionAlgebra& A) {
  MatS M(35, 8);
  int t = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k, ++t) {
        VecS a = A.basis(i), b = A.basis(j), c = A.basis(k);
        M.row(t) = (A.mul(A.mul(a, b), c) - A.mul(a, A.mul(b, c))).transpose();
      }
  return M;
}

VecQ e7(int label) {
  VecQ v = zero_vec<Rational>(7);
  v(SevenSpace::index(label)) = 1;
  return v;
}

int stable_images(const std::vector<MatS>& ders, const std::vector<VecS>& vecs) {
  MatS S(35, static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t k = 0; k < vecs.size(); ++k) S.col(static_cast<Eigen::Index>(k)) = vecs[k];
  const auto r = rank<Scalar>(S);
  int n = 0;
  for (const auto& D : ders) {
    MatS R = wedge3_action(D);
    for (const auto& v : vecs) n += rank<Scalar>(hstack<Scalar>(S, MatS(R * v))) == r;
  }
  return n;
}

std::array<Scalar, 8> random_free(Sampler& s) {
  std::array<Scalar, 8> f;
  for (auto& x : f) x = Scalar(s.rational());
  return f;
}

}  // namespace

TEST_SUITE("g2_geom") {
  TEST_CASE("phi is alternating and matches its defining terms") {
    SevenSpace V = SevenSpace::with(-2, 2);
    CHECK(V.phi(e7(0), e7(1), e7(-1)) == 1);
    CHECK(V.phi(e7(1), e7(0), e7(-1)) == -1);
    CHECK(V.phi(e7(1), e7(2), e7(3)) == 2);
    CHECK(V.phi(e7(-3), e7(-2), e7(-1)) == -2);
    CHECK(V.phi(e7(1), e7(2), e7(-3)) == 0);
    CHECK(V.phi(e7(1), e7(1), e7(2)) == 0);
  }

  TEST_CASE("the stated normalization admits no composition structure") {
    CHECK_THROWS_AS(octonion_from_q_phi(SevenSpace::stated()), std::domain_error);
  }

  TEST_CASE("rescaled model: composition, 14 derivations, associator rank 7") {
    QPhiOctonions O = octonion_from_q_phi(SevenSpace::with(-2, 2));
    CHECK(O.kappa * O.kappa == Scalar(-4));
    const auto& A = *O.algebra;
    Sampler s(3);
    for (int n = 0; n < 50; ++n) {
      VecS x(8), y(8);
      for (int k = 0; k < 8; ++k) {
        x(k) = s.mixed();
        y(k) = s.mixed();
      }
      REQUIRE(A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y));
    }
    CHECK(derivations(A).size() == 14);
    MatS M = associator_map(A);
    CHECK(M == direct_associators(A));
    CHECK(rank<Scalar>(M) == 7);
    CHECK(kernel<Scalar>(MatS(M.transpose())).cols() == 28);
    CHECK(associator_alternating(A));
  }

  TEST_CASE("invariant trivector and the highest weight vector lie in the kernel") {
    SevenSpace V = SevenSpace::with(-2, 2);
    QPhiOctonions O = octonion_from_q_phi(V);
    MatS Mt = associator_map(*O.algebra).transpose();
    VecS inv = invariant_trivector(V);
    CHECK(is_zero(VecS(Mt * inv)));
    CHECK(is_zero(VecS(Mt * highest_weight_vector())));
    for (const auto& D : derivations(*O.algebra)) CHECK(is_zero(VecS(wedge3_action(D) * inv)));
  }

  TEST_CASE("stated weight vectors: complement and stability") {
    QPhiOctonions O = octonion_from_q_phi(SevenSpace::with(-2, 2));
    MatS K = kernel<Scalar>(MatS(associator_map(*O.algebra).transpose()));
    auto ders = derivations(*O.algebra);
    for (bool corrected : {false, true}) {
      auto P = listed_weight_vectors(corrected);
      MatS S(35, 7);
      for (int k = 0; k < 7; ++k) S.col(k) = P[k];
      CHECK(rank<Scalar>(S) == 7);
      CHECK(rank<Scalar>(hstack<Scalar>(S, K)) == (corrected ? 35 : 34));
    }
    CHECK(stable_images(ders, listed_weight_vectors(false)) == 46);
    CHECK(stable_images(ders, listed_weight_vectors(true)) == 56);
  }

  TEST_CASE("model with pair -1/2, beta -1: corrected vectors give a stable complement") {
    QPhiOctonions O = octonion_from_q_phi(SevenSpace::with(Rational(-1, 2), -1));
    CHECK(O.kappa * O.kappa == Scalar(Rational(-1, 4)));
    auto ders = derivations(*O.algebra);
    CHECK(stable_images(ders, listed_weight_vectors(false)) == 80);
    CHECK(stable_images(ders, listed_weight_vectors(true)) == 98);
  }

  TEST_CASE("chart minors") {
    Sampler s(1);
    ChartPoint zero = chart_point({});
    for (auto r : chart_residuals(zero)) CHECK(r.is_zero());
    int stated = 0, corrected = 0;
    for (int n = 0; n < 10; ++n) {
      ChartPoint p = chart_point(random_free(s));
      auto a = chart_residuals(p), b = chart_residuals_corrected(p);
      CHECK(a[0].is_zero());
      CHECK(a[1].is_zero());
      stated += a[2].is_zero();
      corrected += b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
    }
    CHECK(stated == 0);
    CHECK(corrected == 10);
    CHECK_THROWS_AS(zero.at(1, 1), std::invalid_argument);
  }

  TEST_CASE("chart planes: associator and quaternion closure depend on the model") {
    QPhiOctonions a = octonion_from_q_phi(SevenSpace::with(-2, 2));
    QPhiOctonions b = octonion_from_q_phi(SevenSpace::with(-2, -2));
    Sampler s(1);
    int za = 0, zb = 0, qb = 0;
    for (int n = 0; n < 5; ++n) {
      MatS W = chart_plane(chart_point(random_free(s)));
      za += is_zero(plane_associator(*a.algebra, W));
      zb += is_zero(plane_associator(*b.algebra, W));
      qb += quaternion_characterization(*b.algebra, W);
    }
    CHECK(za < 5);
    CHECK(zb == 5);
    CHECK(qb == 5);
  }
}
