#include "doctest.h"
#include "symvar/root_data.hpp"

using namespace symvar;

namespace {
VecQ vec(std::initializer_list<long> v) {
  VecQ x(v.size());
  int i = 0;
  for (long t : v) x(i++) = t;
  return x;
}
}  // namespace

TEST_SUITE("root_data") {
  TEST_CASE("root counts per type") {
    CHECK(RootSystem("A1").roots().size() == 2);
    CHECK(RootSystem("A3").roots().size() == 12);
    CHECK(RootSystem("B3").roots().size() == 18);
    CHECK(RootSystem("C3").roots().size() == 18);
    CHECK(RootSystem("D4").roots().size() == 24);
    CHECK(RootSystem("G2").roots().size() == 12);
    CHECK(RootSystem("F4").roots().size() == 48);
    CHECK(RootSystem("E6").roots().size() == 72);
    CHECK(RootSystem("E7").roots().size() == 126);
    CHECK(RootSystem("A2xA2").roots().size() == 12);
  }

  TEST_CASE("reflection closure and Cartan integers") {
    for (const char* t : {"A4", "B3", "C4", "D5", "G2", "F4", "E6"}) {
      RootSystem R(t);
      for (const auto& r : R.roots())
        for (int i = 0; i < R.rank(); ++i) REQUIRE(R.is_root(R.reflect(r, R.simple_root(i))));
      for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j)
          REQUIRE(2 * R.pairing(R.simple_root(i), R.simple_root(j)) / R.pairing(R.simple_root(j), R.simple_root(j)) ==
                  R.cartan()(i, j));
    }
  }

  TEST_CASE("G2 labels the long simple root first") {
    RootSystem R("G2");
    CHECK(R.pairing(R.simple_root(0), R.simple_root(0)) == 3 * R.pairing(R.simple_root(1), R.simple_root(1)));
  }

  TEST_CASE("fundamental weights") {
    RootSystem A1("A1");
    CHECK(fundamental_weights(A1)[0] == VecQ::Constant(1, Rational(1, 2)));
    for (const char* t : {"A2", "G2", "B3", "E6"}) {
      RootSystem R(t);
      auto w = fundamental_weights(R);
      auto wc = fundamental_coweights(R);
      for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j) {
          REQUIRE(R.pairing(w[i], R.simple_coroot(j)) == (i == j ? 1 : 0));
          REQUIRE(R.pairing(R.simple_root(j), wc[i]) == (i == j ? 1 : 0));
        }
    }
  }

  TEST_CASE("dominance") {
    RootSystem A2("A2");
    auto w = fundamental_weights(A2);
    CHECK(is_dominant(VecQ(w[0] + w[1]), A2));
    CHECK_FALSE(is_dominant(VecQ(w[0] - w[1]), A2));
    RootSystem G2("G2");
    auto g = fundamental_weights(G2);
    CHECK_FALSE(is_dominant(VecQ(g[1] - g[0]), G2));
  }

  TEST_CASE("group and flag dimensions") {
    CHECK(dim_group(RootSystem("A3")) == 15);
    CHECK(dim_group(RootSystem("G2")) == 14);
    CHECK(dim_flag(RootSystem("G2"), {1}) == 5);
    CHECK(dim_flag(RootSystem("A5"), {2}) == 8);
    CHECK(dim_flag(RootSystem("E6"), {1}) == 16);
    CHECK(dim_flag(RootSystem("E7"), {7}) == 27);
    CHECK(dim_flag(RootSystem("B3"), {}) == 0);
    CHECK(dim_flag(RootSystem("B3"), {1, 2, 3}) == 9);
    CHECK_THROWS_AS(dim_flag(RootSystem("A2"), {3}), std::invalid_argument);
  }

  TEST_CASE("bad labels") {
    CHECK_THROWS_AS(RootSystem("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem("G3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem("A"), std::invalid_argument);
  }

  TEST_CASE("pairing is symmetric") {
    RootSystem R("C3");
    CHECK(R.pairing(vec({1, 0, 2}), vec({0, 1, 1})) == R.pairing(vec({0, 1, 1}), vec({1, 0, 2})));
  }
}
