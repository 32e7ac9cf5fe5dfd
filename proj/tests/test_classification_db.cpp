#include "doctest.h"
#include "symvar/classification_db.hpp"

#include <map>
#include <set>

using namespace symvar;

namespace {

const ClassificationDb& db() {
  static const ClassificationDb d = load_db(default_db_path());
  return d;
}

long sl(long n) { return n * n - 1; }
long so(long n) { return n * (n - 1) / 2; }
long sp(long n) { return n * (2 * n + 1); }  // Sp_{2n}

// dim G - dim H from classical group dimensions, independent of root data
const std::map<std::string, long>& quotient_dims() {
  static const std::map<std::string, long> m = {
      {"a1a1-spin5-spin5", 2 * (so(5) - so(4))},
      {"a2-sl3-so3", sl(3) - so(3)},
      {"a2-sl3", sl(3)},
      {"a2-sl6-sp6", sl(6) - sp(3)},
      {"a2-e6-f4", 78 - 52},
      {"a2-sl3-so3-n", sl(3) - so(3)},
      {"a2-sl3-n", sl(3)},
      {"a2-sl6-sp6-n", sl(6) - sp(3)},
      {"a2-e6-f4-n", 78 - 52},
      {"a3-sl4-so4-n", sl(4) - so(4)},
      {"a3-sl4-n", sl(4)},
      {"b2-sl4-s(l2xl2)-n", sl(4) - 2 * sl(2) - 1},
      {"b2-sp8-sp4xsp4-n", sp(4) - 2 * sp(2)},
      {"b2-so5-so2xso3-n", so(5) - so(2) - so(3)},
      {"b2-so8-gl4-n", so(8) - 16},
      {"b2-sp8-sp4xsp4", sp(4) - 2 * sp(2)},
      {"b2-spin5", so(5)},
      {"b3-so7-so3xso4-n", so(7) - so(3) - so(4)},
      {"b3-so7-n", so(7)},
      {"c3-sp12-sp6xsp6", sp(6) - 2 * sp(3)},
      {"c3-sp6", sp(3)},
      {"bc2-sp10-sp4xsp6", sp(5) - sp(2) - sp(3)},
      {"d5-so10-so5xso5", so(10) - 2 * so(5)},
      {"d5-so10", so(10)},
      {"d4-so8-so4xso4", so(8) - 2 * so(4)},
      {"d4-so8", so(8)},
      {"g2-split", 14 - 2 * sl(2)},
      {"g2-group", 14},
      {"r1-sl2xsl2", sl(2)},
      {"r1-psl2xpsl2", sl(2)},
      {"r1-sl3-gl2", sl(3) - 4},
      {"r1-psl2-pso2", sl(2) - so(2)},
      {"r1-sp6-sp2xsp4", sp(3) - sp(1) - sp(2)},
      {"r1-so5-so4", so(5) - so(4)},
      {"r1-so5-s(o1xo4)", so(5) - so(4)},
      {"r1-f4-spin9", 52 - so(9)},
  };
  return m;
}

}  // namespace

TEST_SUITE("classification_db") {
  TEST_CASE("every entry verifies") {
    REQUIRE(db().entries.size() == quotient_dims().size());
    for (const auto& e : db().entries) {
      CAPTURE(e.id);
      EntryReport r = verify_entry(e);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
      }
      CHECK(r.checks.size() == 8);
    }
  }

  TEST_CASE("dimension audit against group dimensions") {
    for (const auto& e : db().entries) {
      CAPTURE(e.id);
      DimensionAudit a = dimension_audit(e);
      CHECK(a.dim_gh == quotient_dims().at(e.id));
      CHECK(a.pass);
    }
    const auto* sp6 = db().find("c3-sp6");
    CHECK(model_dimension(sp6->model) == sp(3));
    const auto* e6 = db().find("a2-e6-f4-n");
    CHECK(model_dimension(e6->model) == 26);
  }

  TEST_CASE("model families") {
    ModelSpec m;
    m.family = "G", m.m = 2, m.n = 6;
    CHECK(model_dimension(m) == 8);
    m.family = "LG", m.m = 3, m.n = 6;
    CHECK(model_dimension(m) == 6);
    m.family = "IG", m.form = "orthogonal", m.m = 1, m.n = 10;
    CHECK(model_dimension(m) == 8);
    m.form = "symplectic", m.m = 4, m.n = 8;
    CHECK(model_dimension(m) == 10);
    m.form = "";
    CHECK_THROWS_AS(model_dimension(m), std::invalid_argument);
    m.family = "S", m.m = 7;
    CHECK(model_dimension(m) == 21);
    m.family = "flag", m.group = "E7", m.marked = {7};
    CHECK(model_dimension(m) == 27);
    m.family = "cone";
    CHECK_THROWS_AS(model_dimension(m), std::invalid_argument);
  }

  TEST_CASE("non-transitive entries") {
    std::set<std::string> nt;
    for (const auto& e : db().entries) {
      EntryReport r = verify_entry(e);
      REQUIRE(r.transitive);
      if (!*r.transitive) nt.insert(e.id);
    }
    std::set<std::string> want = {"a2-sl3-so3", "a2-sl3", "a2-sl6-sp6", "a2-e6-f4", "g2-split",
                                  "g2-group"};
    CHECK(nt == want);
    for (const auto& id : want) {
      const auto* e = db().find(id);
      CHECK(e->h == "fixed");
      CHECK((e->restricted_type == "A2" || e->restricted_type == "G2"));
    }
  }

  TEST_CASE("slice weights in the reports") {
    auto slices = [](const char* id) {
      return verify_entry(*db().find(id)).check("homogeneity")->certificate.at("slices");
    };
    auto g = slices("g2-split");
    REQUIRE(g.size() == 1);
    CHECK(g[0]["omega"] == nlohmann::json({"-1", "1"}));
    CHECK(g[0]["dominant"] == false);
    auto a = slices("a2-sl3");
    REQUIRE(a.size() == 2);
    CHECK(a[0]["omega"] == nlohmann::json({"1", "-1"}));
    CHECK(a[1]["omega"] == nlohmann::json({"-1", "1"}));
  }

  TEST_CASE("lattice of the A1xA1 entry") {
    const auto* e = db().find("a1a1-spin5-spin5");
    EntryReport r = verify_entry(*e);
    CHECK(r.check("lattice")->certificate.at("index_over_root_lattice") == "2");
    CHECK(r.check("fan_complete")->pass);
    auto rrs = restrict(InvolutionData(RootSystem(e->group), e->theta));
    CharacterLattice L = build_lattice(e->lattice, rrs);
    CHECK(rrs.weight_coords(L.chi[0]) == VecQ(Eigen::Vector<Rational, 2>(2, 0)));
    CHECK(rrs.weight_coords(L.chi[1]) == VecQ(Eigen::Vector<Rational, 2>(1, 1)));
  }

  TEST_CASE("negative controls fail for their reason") {
    auto nc = negative_controls(db());
    CHECK(nc.size() == 8);
    for (const auto& n : nc) {
      CAPTURE(n.name);
      EntryReport r = verify_entry(n.entry);
      CHECK_FALSE(r.pass());
      REQUIRE(r.check(n.expected_failure));
      CHECK_FALSE(r.check(n.expected_failure)->pass);
    }
  }

  TEST_CASE("nesting chain") {
    NestingCheck n = check_nesting(db());
    CHECK(n.pass);
    CHECK(n.x_dims == std::vector<long>{5, 8, 14, 26});
    CHECK(n.model_dims == std::vector<long>{6, 9, 15, 27});
  }

  TEST_CASE("generator strings") {
    const auto* e = db().find("a2-sl3-so3");
    auto rrs = restrict(InvolutionData(RootSystem(e->group), e->theta));
    VecQ v = parse_generator("-w1-w2", rrs);
    CHECK(v == VecQ(-rrs.coweights()[0] - rrs.coweights()[1]));
    CHECK(parse_generator("2a1", rrs) == VecQ(2 * rrs.coroots()[0]));
    CHECK(parse_generator("a1+w2", rrs) == VecQ(rrs.coroots()[0] + rrs.coweights()[1]));
    for (const char* bad : {"", "a3", "x1", "a1w2", "w", "a0", "a1 "})
      CHECK_THROWS_AS(parse_generator(bad, rrs), std::invalid_argument);
  }

  TEST_CASE("json round trip") {
    for (const auto& e : db().entries) {
      ClassificationEntry back = parse_entry(entry_to_json(e));
      CHECK(entry_to_json(back) == entry_to_json(e));
    }
  }

  TEST_CASE("malformed databases") {
    CHECK_THROWS_AS(parse_db("{"), DbError);
    CHECK_THROWS_AS(parse_db("[]"), DbError);
    CHECK_THROWS_AS(load_db("/nonexistent/db.json"), DbError);
    nlohmann::json j = entry_to_json(*db().find("g2-split"));
    auto wrap = [](const nlohmann::json& e) { return nlohmann::json{{"entries", {e}}}.dump(); };
    CHECK_NOTHROW(parse_db(wrap(j)));
    auto k = j;
    k.erase("fan");
    CHECK_THROWS_AS(parse_db(wrap(k)), DbError);
    k = j;
    k["H"] = "other";
    CHECK_THROWS_AS(parse_db(wrap(k)), DbError);
    k = j;
    k["involution"]["theta"] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(parse_db(wrap(k)), DbError);
    k = j;
    k["group"] = "Q9";
    CHECK_THROWS_AS(parse_db(wrap(k)), DbError);
    CHECK_THROWS_AS(parse_db(nlohmann::json{{"entries", {j, j}}}.dump()), DbError);
  }
}
