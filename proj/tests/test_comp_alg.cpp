#include "doctest.h"
#include "helpers.hpp"

using namespace symvar;
using testing_helpers::random_vec;

TEST_SUITE("comp_alg") {
  TEST_CASE("doubling the scalars gives i^2 = -1") {
    auto C = cayley_dickson(scalar_algebra());
    REQUIRE(C->dim() == 2);
    VecS i = C->basis(1);
    CHECK(C->mul(i, i) == C->one() * Scalar(-1));
  }

  TEST_CASE("sedenions are rejected") {
    CHECK_THROWS_AS(cayley_dickson(standard_algebra(8)), std::invalid_argument);
  }

  TEST_CASE("unit and composition identity on random pairs") {
    for (int dim : {1, 2, 4, 8}) {
      auto A = standard_algebra(dim);
      Sampler s(100 + dim);
      for (int k = 0; k < dim; ++k) {
        CHECK(A->mul(A->one(), A->basis(k)) == A->basis(k));
        CHECK(A->mul(A->basis(k), A->one()) == A->basis(k));
      }
      for (int n = 0; n < 200; ++n) {
        VecS x = random_vec(s, dim), y = random_vec(s, dim);
        REQUIRE(A->norm(A->mul(x, y)) == A->norm(x) * A->norm(y));
      }
      CHECK(composition_identity_holds(*A));
    }
  }

  TEST_CASE("x conj(x) = conj(x) x = N(x) 1") {
    auto O = standard_algebra(8);
    Sampler s(7);
    for (int n = 0; n < 50; ++n) {
      VecS x = random_vec(s, 8);
      VecS N1 = O->one() * O->norm(x);
      REQUIRE(O->mul(x, O->conj(x)) == N1);
      REQUIRE(O->mul(O->conj(x), x) == N1);
    }
  }

  TEST_CASE("associativity by dimension, exhaustive on basis triples") {
    auto count_nonassoc = [](const CompositionAlgebra& A) {
      int bad = 0;
      for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b)
          for (int c = 0; c < A.dim(); ++c)
            bad += !is_zero(associator(A, A.basis(a), A.basis(b), A.basis(c)));
      return bad;
    };
    CHECK(count_nonassoc(*standard_algebra(4)) == 0);
    CHECK(count_nonassoc(*standard_algebra(8)) > 0);
  }

  TEST_CASE("associator with the unit vanishes; alternative laws on random pairs") {
    auto O = standard_algebra(8);
    Sampler s(9);
    for (int n = 0; n < 30; ++n) {
      AlgElement a(O, random_vec(s, 8)), b(O, random_vec(s, 8));
      AlgElement zero(O, zero_vec<Scalar>(8));
      REQUIRE(associator(AlgElement::one(O), a, b) == zero);
      REQUIRE(associator(a, a, b) == zero);
      REQUIRE(associator(a, b, b) == zero);
    }
  }

  TEST_CASE("mixing algebras throws") {
    auto A = standard_algebra(8);
    auto B = cayley_dickson(standard_algebra(4));
    CHECK_THROWS_AS(AlgElement::one(A) * AlgElement::one(B), std::invalid_argument);
  }

  TEST_CASE("derivation dimensions") {
    CHECK(derivations(*standard_algebra(2)).empty());
    CHECK(derivations(*standard_algebra(4)).size() == 3);
    auto O = standard_algebra(8);
    auto D = derivations(*O);
    CHECK(D.size() == 14);
    for (const auto& d : D) {
      CHECK(is_zero(VecS(d * O->one())));
      // image of Im O stays in Im O
      for (int k = 0; k < 8; ++k)
        if (k != O->unit()) CHECK((d * O->basis(k))(O->unit()).is_zero());
    }
  }

  TEST_CASE("derivations satisfy the Leibniz rule on random pairs") {
    auto O = standard_algebra(8);
    Sampler s(12);
    for (const auto& d : derivations(*O)) {
      VecS x = random_vec(s, 8), y = random_vec(s, 8);
      CHECK(VecS(d * O->mul(x, y)) == VecS(O->mul(d * x, y) + O->mul(x, d * y)));
    }
  }

  TEST_CASE("subalgebra closure") {
    auto O = standard_algebra(8);
    CHECK(subalgebra_closure({AlgElement::one(O)}).cols() == 1);
    CHECK(subalgebra_closure({AlgElement::basis(O, 5)}).cols() == 2);
    // e1, e2 generate a quaternion algebra containing e3 = e1 e2
    MatS H = subalgebra_closure({AlgElement::basis(O, 1), AlgElement::basis(O, 2)});
    CHECK(H.cols() == 4);
    CHECK(is_quaternion_subalgebra(*O, H));
    CHECK(subalgebra_closure({AlgElement::basis(O, 1), AlgElement::basis(O, 2), AlgElement::basis(O, 4)}).cols() == 8);
  }

  TEST_CASE("quaternion recognition") {
    auto O = standard_algebra(8);
    std::vector<AlgElement> H;
    for (int k = 0; k < 4; ++k) H.push_back(AlgElement::basis(O, k));
    CHECK(is_quaternion_subalgebra(H));
    H.pop_back();
    CHECK_FALSE(is_quaternion_subalgebra(H));
    std::vector<AlgElement> nonassoc{AlgElement::one(O), AlgElement::basis(O, 1), AlgElement::basis(O, 2),
                                     AlgElement::basis(O, 4)};
    CHECK_FALSE(is_quaternion_subalgebra(nonassoc));
  }
}
