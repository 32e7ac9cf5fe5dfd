#include "doctest.h"
#include "symvar/colored_fan.hpp"

using namespace symvar;

namespace {

MatQ group_swap(int n) {
  MatQ T = zeros<Rational>(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    T(n + j, j) = -1;
    T(j, n + j) = -1;
  }
  return T;
}

struct Fixture {
  RestrictedRootSystem a2 = restrict(InvolutionData(RootSystem("A2"), -identity<Rational>(2)));
  RestrictedRootSystem g2 = restrict(InvolutionData(RootSystem("G2xG2"), group_swap(2)));
  RestrictedRootSystem a3 = restrict(InvolutionData(RootSystem("A3"), -identity<Rational>(3)));
};

const VecQ& cor(const RestrictedRootSystem& r, int i) { return r.coroots()[i - 1]; }
VecQ mw(const RestrictedRootSystem& r, int i) { return -r.coweights()[i - 1]; }

}  // namespace

TEST_SUITE("colored_fan") {
  TEST_CASE_FIXTURE(Fixture, "cone validity") {
    ConeCheck g = validate_cone({{cor(g2, 2), mw(g2, 2)}, {2}}, g2);
    CHECK(g.valid());
    CHECK(g2.in_valuation_cone(g.witness));

    ConeCheck bad = validate_cone({{cor(a2, 1)}, {1}}, a2);
    CHECK_FALSE(bad.valid());
    CHECK(bad.colors_are_generators);
    CHECK_FALSE(bad.interior_meets_valuation_cone);

    CHECK(validate_cone({{zero_vec<Rational>(2)}, {}}, a2).valid());
    CHECK_THROWS_AS(validate_cone({{}, {}}, a2), std::invalid_argument);

    // colour missing among the generators
    CHECK_FALSE(validate_cone({{mw(a2, 1)}, {1}}, a2).colors_are_generators);
    // non-colour generator outside -C+
    CHECK_FALSE(validate_cone({{cor(a2, 1), cor(a2, 2)}, {1}}, a2).others_in_valuation_cone);
  }

  TEST_CASE_FIXTURE(Fixture, "interior witness through the fallback") {
    // the plain sum alpha1^v - w1^v - w2^v has coordinates (1, -2), outside -C+;
    // alpha1^v + 2(-w1^v - w2^v) = (0, -3) is inside
    ColoredCone c{{cor(a2, 1), VecQ(mw(a2, 1) + mw(a2, 2))}, {1}};
    ConeCheck chk = validate_cone(c, a2);
    REQUIRE(chk.valid());
    CHECK(a2.in_valuation_cone(chk.witness));
    CHECK(cone_contains(c.generators, chk.witness));
  }

  TEST_CASE_FIXTURE(Fixture, "completeness") {
    VecQ m12 = mw(a2, 1) + mw(a2, 2);
    ColoredFan two{{{{cor(a2, 1), m12}, {1}}, {{cor(a2, 2), m12}, {2}}}};
    CompletenessCheck c = is_complete(two, a2);
    CHECK(c.complete);
    CHECK(c.method == "angular sweep");

    // -w1^v = 1/3 a2^v + 2/3 (-w1^v - w2^v)
    CHECK(cone_contains(two.cones[1].generators, mw(a2, 1)));
    CHECK(mw(a2, 1) == VecQ(cor(a2, 2) * Rational(1, 3) + m12 * Rational(2, 3)));

    ColoredFan canon{{{{mw(a2, 1), mw(a2, 2)}, {}}}};
    CHECK(is_complete(canon, a2).complete);

    ColoredFan proper{{{{mw(a2, 1), m12}, {}}}};
    CompletenessCheck p = is_complete(proper, a2);
    CHECK_FALSE(p.complete);
    REQUIRE(p.uncovered);
    CHECK(a2.in_valuation_cone(*p.uncovered));

    ColoredFan dropped{{{{cor(a2, 1), m12}, {1}}}};
    CHECK_FALSE(is_complete(dropped, a2).complete);

    ColoredFan three{{two.cones[0], two.cones[1], canon.cones[0]}};
    CHECK_THROWS_AS(is_complete(three, a2), std::domain_error);
  }

  TEST_CASE_FIXTURE(Fixture, "shared-facet split in rank three") {
    // cones (a1, a2, -w1) and (a1, a2, -w3) style split of -C+ along a plane
    VecQ m13 = mw(a3, 1) + mw(a3, 3);
    ColoredFan f{{{{mw(a3, 1), mw(a3, 2), m13}, {}}, {{mw(a3, 3), mw(a3, 2), m13}, {}}}};
    CompletenessCheck c = is_complete(f, a3);
    CHECK(c.method == "shared-facet split");
    CHECK(c.complete);
    ColoredFan half{{f.cones[0], {{mw(a3, 3), m13}, {}}}};
    CHECK_FALSE(is_complete(half, a3).complete);
  }

  TEST_CASE_FIXTURE(Fixture, "slice highest weights") {
    CharacterLattice Lg = weight_lattice(g2);
    SliceWeight sg = slice_highest_weight(g2, Lg, {{cor(g2, 2), mw(g2, 2)}, {2}});
    CHECK(sg.coords(0) == -1);
    CHECK(sg.coords(1) == 1);
    CHECK(sg.varpi_check == mw(g2, 1));
    CHECK_FALSE(sg.dominant);

    CharacterLattice La = weight_lattice(a2);
    VecQ m12 = mw(a2, 1) + mw(a2, 2);
    SliceWeight s1 = slice_highest_weight(a2, La, {{cor(a2, 1), m12}, {1}});
    CHECK(s1.coords(0) == 1);
    CHECK(s1.coords(1) == -1);
    CHECK(s1.varpi_check == VecQ(mw(a2, 2) * Rational(3)));
    SliceWeight s2 = slice_highest_weight(a2, La, {{cor(a2, 2), m12}, {2}});
    CHECK(s2.coords(0) == -1);
    CHECK(s2.coords(1) == 1);

    // normalizer: root lattice, single cone
    SliceWeight sn = slice_highest_weight(a2, root_lattice(a2), {{cor(a2, 1), mw(a2, 1)}, {1}});
    CHECK(sn.coords(0) == 1);
    CHECK(sn.coords(1) == -2);
  }

  TEST_CASE_FIXTURE(Fixture, "verdicts") {
    VecQ m12 = mw(a2, 1) + mw(a2, 2);
    ColoredFan two{{{{cor(a2, 1), m12}, {1}}, {{cor(a2, 2), m12}, {2}}}};
    Verdict v = homogeneity_verdict(a2, weight_lattice(a2), two, std::nullopt, 5);
    CHECK_FALSE(v.transitive);
    CHECK(v.slices.size() == 2);
    ColoredFan one{{{{cor(a2, 1), mw(a2, 1)}, {1}}}};
    CHECK(homogeneity_verdict(a2, root_lattice(a2), one, 5, 5).transitive);
    CHECK_FALSE(homogeneity_verdict(a2, root_lattice(a2), one, 6, 5).transitive);
  }
}
