#include "doctest.h"
#include "helpers.hpp"

using namespace symvar;
using testing_helpers::random_herm;
using testing_helpers::random_vec;

TEST_SUITE("jordan") {
  TEST_CASE("identity and diagonal matrices") {
    for (int dim : {1, 2, 4, 8}) {
      auto A = standard_algebra(dim);
      Herm3 I = Herm3::identity(A);
      CHECK(comatrix(I) == I);
      CHECK(det3(I) == Scalar(1));
      Scalar r1(3), r2 = Scalar::frac(-1, 2), r3 = Scalar::i();
      Herm3 D = Herm3::diag(A, r1, r2, r3);
      CHECK(comatrix(D) == Herm3::diag(A, r2 * r3, r1 * r3, r1 * r2));
      CHECK(det3(D) == r1 * r2 * r3);
      CHECK(jordan_product(D, Herm3::diag(A, 2, 5, 7)) == Herm3::diag(A, r1 * 2, r2 * 5, r3 * 7));
    }
  }

  TEST_CASE("Jordan product is commutative with unit I") {
    auto O = standard_algebra(8);
    Sampler s(31);
    for (int n = 0; n < 10; ++n) {
      Herm3 A = random_herm(s, O), B = random_herm(s, O);
      CHECK(jordan_product(A, Herm3::identity(O)) == A);
      CHECK(jordan_product(A, B) == jordan_product(B, A));
    }
  }

  TEST_CASE("com(P) P = det(P) I on random matrices over the associative algebras") {
    for (int dim : {1, 2, 4}) {
      auto A = standard_algebra(dim);
      Sampler s(40 + dim);
      for (int n = 0; n < 100; ++n) {
        CofactorCheck c = check_cofactor_identity(random_herm(s, A));
        REQUIRE(c.product_hermitian);
        REQUIRE(c.identity_holds);
        REQUIRE(c.jordan_identity_holds);
      }
    }
  }

  TEST_CASE("over the octonions the ordinary product misses by the associator") {
    auto O = standard_algebra(8);
    Sampler s(48);
    for (int n = 0; n < 100; ++n) {
      Herm3 P = random_herm(s, O);
      CofactorCheck c = check_cofactor_identity(P);
      REQUIRE(c.jordan_identity_holds);
      VecS assoc = associator(*O, P.x()[0], P.x()[1], P.x()[2]);
      if (is_zero(assoc)) continue;
      REQUIRE_FALSE(c.product_hermitian);
      REQUIRE(c.scalar_defect);
      REQUIRE(*c.scalar_defect == assoc);
    }
    // entries inside a quaternion subalgebra: no defect
    VecS z = zero_vec<Scalar>(8);
    Herm3 Q(O, {1, 2, 3}, {O->basis(1), O->basis(2), O->basis(3)});
    CHECK(check_cofactor_identity(Q).identity_holds);
  }

  TEST_CASE("determinant is cubic and detects invertibility") {
    auto H = standard_algebra(4);
    Sampler s(5);
    for (int n = 0; n < 10; ++n) {
      Herm3 P = random_herm(s, H);
      Scalar t = s.mixed();
      CHECK(det3(t * P) == t * t * t * det3(P));
      Scalar d = det3(P);
      if (!d.is_zero()) {
        // com(P)/det(P) is a two-sided inverse
        Herm3 inv = d.inverse() * comatrix(P);
        CHECK(Herm3::from_matrix(inv.matrix() * P.matrix()) == Herm3::identity(H));
      }
    }
    // rank-one matrix: x x^* with x = (1, a, b)
    VecS z = zero_vec<Scalar>(4);
    VecS a = random_vec(s, 4);
    Herm3 R(H, {1, H->norm(a), 0}, {z, z, a});
    CHECK(det3(R).is_zero());
  }

  TEST_CASE("trace form is symmetric bilinear and matches the quadratic trace") {
    auto O = standard_algebra(8);
    Sampler s(6);
    Herm3 A = random_herm(s, O), B = random_herm(s, O), C = random_herm(s, O);
    Scalar t = s.mixed();
    CHECK(trace_form(A, B) == trace_form(B, A));
    CHECK(trace_form(A + t * C, B) == trace_form(A, B) + t * trace_form(C, B));
    CHECK(trace_form(A, A) == Herm3::from_matrix(A.matrix() * A.matrix()).trace());
  }

  TEST_CASE("Freudenthal map and the section z1 = z4") {
    auto O = standard_algebra(8);
    Zorn2 z = freudenthal_phi(1, Herm3::identity(O));
    CHECK(z.z1 == Scalar(1));
    CHECK(z.z2 == Herm3::identity(O));
    CHECK(z.z3 == Herm3::identity(O));
    CHECK(z.z4 == Scalar(1));
    CHECK(in_section(z));

    Sampler s(13);
    Herm3 P = random_herm(s, O);
    Zorn2 z0 = freudenthal_phi(0, P);
    CHECK(z0.z1.is_zero());
    CHECK(z0.z2 == Herm3::zero(O));
    CHECK(z0.z3 == Herm3::zero(O));
    CHECK(z0.z4 == det3(P));

    CHECK_FALSE(in_section({1, Herm3::zero(O), Herm3::zero(O), 0}));

    for (int n = 0; n < 20; ++n) {
      Herm3 Q = random_herm(s, O);
      Scalar x = s.mixed();
      CHECK(in_section(freudenthal_phi(x, Q)) == (x * x * x == det3(Q)));
    }
    // points on the section: x = 2, P = diag(2, 2, 2) and a scaled diag(1, 1, x^3)
    CHECK(in_section(freudenthal_phi(2, Herm3::diag(O, 2, 2, 2))));
    CHECK(in_section(freudenthal_phi(3, Herm3::diag(O, 1, 1, 27))));
  }

  TEST_CASE("dimension audit") {
    CHECK(jordan_dim(1) == 6);
    CHECK(jordan_dim(2) == 9);
    CHECK(jordan_dim(4) == 15);
    CHECK(jordan_dim(8) == 27);
    CHECK(zorn_dim(1) == 14);
    CHECK(zorn_dim(2) == 20);
    CHECK(zorn_dim(4) == 32);
    CHECK(zorn_dim(8) == 56);
  }
}
