// One line per acceptance criterion. All algebraic checks are exact
// (tolerance 0); runtime budgets are pinned below.
#include "suites.hpp"

#include "symvar/classification_db.hpp"
#include "symvar/jordan.hpp"
#include "symvar/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace symvar;
using nlohmann::json;

namespace {

constexpr int kSeed = 1;
constexpr int kJordanSamples = 100;      // >= 100 per algebra
constexpr int kCompositionPairs = 200;   // >= 200 per algebra
constexpr int kChartSamples = 50;        // >= 50 chart points
constexpr int kGraphSamples = 20;        // >= 20 graph samples
constexpr double kBudgetJordan = 10.0;   // seconds
constexpr double kBudgetG2 = 30.0;
constexpr double kBudgetClassification = 10.0;
constexpr double kBudgetFullSuite = 120.0;

int failures = 0;

void line(int n, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", n, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  failures += !pass;
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const json& check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  throw std::logic_error("report has no check " + name);
}

std::string secs(double t, double budget) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << t << " s (budget " << budget << " s)";
  return os.str();
}

VecS random_vec(Sampler& s, int n) {
  VecS v(n);
  for (int i = 0; i < n; ++i) v(i) = s.mixed();
  return v;
}

}  // namespace

int main() {
  suites::RunConfig cfg;
  cfg.seed = kSeed;

  // 1. cofactor identity over the four composition algebras
  {
    int holds[4] = {}, jordan[4] = {}, defect[4] = {};
    bool units = true;
    double t = timed([&] {
      Sampler s(kSeed);
      int a = 0;
      for (int dim : {1, 2, 4, 8}) {
        AlgebraPtr A = standard_algebra(dim);
        Herm3 I = Herm3::identity(A);
        units = units && det3(I) == Scalar(1) && comatrix(I) == I;
        for (int k = 0; k < kJordanSamples; ++k) {
          Herm3 P(A, {s.mixed(), s.mixed(), s.mixed()},
                  {random_vec(s, dim), random_vec(s, dim), random_vec(s, dim)});
          CofactorCheck c = check_cofactor_identity(P);
          holds[a] += c.identity_holds;
          jordan[a] += c.jordan_identity_holds;
          defect[a] += c.scalar_defect && *c.scalar_defect == associator(*A, P.x()[0], P.x()[1], P.x()[2]);
        }
        ++a;
      }
    });
    std::ostringstream d;
    bool all = units && t < kBudgetJordan;
    for (int a = 0; a < 4; ++a) all = all && holds[a] == kJordanSamples;
    d << "com(P)P = det(P)I holds " << holds[0] << "/" << holds[1] << "/" << holds[2] << "/" << holds[3]
      << " of " << kJordanSamples << " for dims 1/2/4/8; dim 8 defect equals the associator of the"
      << " off-diagonal entries in " << defect[3] << "/" << kJordanSamples
      << "; Jordan-product form holds " << jordan[3] << "/" << kJordanSamples
      << "; det(I) = 1, com(I) = I: " << (units ? "yes" : "no") << "; tolerance exact; "
      << secs(t, kBudgetJordan);
    line(1, all, "Jordan cofactor identity", d.str());
  }

  // 2. composition identity and derivation dimensions
  json jordan_report;
  double t_jordan = timed([&] {
    suites::RunConfig c = cfg;
    c.samples = kCompositionPairs / 2;
    jordan_report = suites::run_jordan(c);
  });
  {
    bool ok = true;
    std::ostringstream d;
    for (int dim : {1, 2, 4, 8}) {
      const json& c = check(jordan_report, "composition_dim" + std::to_string(dim));
      ok = ok && c["pass"].get<bool>() && c["observed"].get<int>() >= kCompositionPairs;
      d << "N(xy) = N(x)N(y) " << c["observed"] << "/" << c["expected"] << " (dim " << dim << "); ";
    }
    const json& d8 = check(jordan_report, "derivations_dim8");
    const json& d4 = check(jordan_report, "derivations_dim4");
    ok = ok && d8["observed"] == 14 && d4["observed"] == 3;
    d << "dim Der = " << d8["observed"] << " (dim 8), " << d4["observed"] << " (dim 4); tolerance exact";
    line(2, ok, "composition identity and derivations", d.str());
  }

  // 3 and 4. G2 associator, weight vectors, chart identity
  json g2_report;
  double t_g2 = timed([&] {
    suites::RunConfig c = cfg;
    c.samples = kChartSamples;
    g2_report = suites::run_g2(c);
  });
  {
    const json& k = check(g2_report, "associator_kernel");
    const json& r = check(g2_report, "associator_rank");
    const json& cp = check(g2_report, "weight_vectors_complement");
    const json& st = check(g2_report, "weight_vectors_stable");
    const json& pm = check(g2_report, "stated_model_composition");
    bool ok = k["pass"].get<bool>() && r["pass"].get<bool>() && cp["pass"].get<bool>() &&
              st["pass"].get<bool>() && t_g2 < kBudgetG2;
    std::ostringstream d;
    d << "stated (q, phi) normalization: " << pm["observed"].get<std::string>()
      << "; rescaled model " << g2_report["notes"]["model"].get<std::string>() << ": kernel " << k["observed"]
      << ", rank " << r["observed"] << "; stated vectors give complement rank " << cp["observed"]
      << "/35 and " << st["observed"] << "/98 stable images (corrected vectors: "
      << g2_report["notes"]["weight_vectors"].dump() << "); tolerance exact; " << secs(t_g2, kBudgetG2);
    line(3, ok, "G2 associator kernel and weight-vector complement", d.str());
  }
  {
    const json& res = check(g2_report, "chart_residuals");
    const json& as = check(g2_report, "chart_plane_associator");
    const json& n = g2_report["notes"]["chart"];
    bool ok = res["pass"].get<bool>() && as["pass"].get<bool>() && res["expected"].get<int>() >= kChartSamples;
    std::ostringstream d;
    d << "stated residuals vanish at " << res["observed"] << "/" << res["expected"]
      << " points; plane associator vanishes at " << as["observed"] << "/" << as["expected"]
      << " in the rescaled model; diagnostics " << n.dump() << "; tolerance exact";
    line(4, ok, "chart identity on the graph", d.str());
  }

  // 5. spinor chart and local dimension
  json spinor_report;
  double t_spinor = timed([&] {
    suites::RunConfig c = cfg;
    c.samples = kGraphSamples;
    spinor_report = suites::run_spinor(c);
  });
  {
    const json& pf = check(spinor_report, "pfaffian_chart");
    const json& gs = check(spinor_report, "graph_samples");
    const json& gr = check(spinor_report, "graph_residuals");
    const json& gd = check(spinor_report, "graph_local_dimension_12");
    const json& od = check(spinor_report, "orbit_local_dimension_12");
    bool ok = pf["pass"].get<bool>() && gs["pass"].get<bool>() && gr["pass"].get<bool>() &&
              gd["pass"].get<bool>();
    std::ostringstream d;
    d << "chart formulas " << pf["observed"] << "/" << pf["expected"] << "; residuals vanish on "
      << gr["observed"] << "/" << gs["expected"] << " graph samples; local dimension from the four"
      << " residuals " << gd["observed"] << " (expected 12); points of the section on the orbit give "
      << od["observed"] << "; diagnostics " << spinor_report["notes"]["graph"].dump() << "; tolerance exact";
    line(5, ok, "spinor chart and dimension of X'", d.str());
  }

  // 6-8. classification
  json class_report;
  double t_class = timed([&] { class_report = suites::run_classification(cfg); });
  ClassificationDb db = load_db(default_db_path());
  {
    int entries = 0, good = 0;
    // Picard number one entries; the P^n x P^n* record is kept only as rank-one data
    for (const auto& e : class_report["entries"]) {
      const ClassificationEntry* src = db.find(e["id"].get<std::string>());
      if (!src->picard_one) continue;
      ++entries;
      bool ok = true;
      for (const auto& c : e["checks"])
        if (c["name"] == "cones" || c["name"] == "fan_complete" || c["name"] == "colors" ||
            c["name"] == "restricted_type")
          ok = ok && c["pass"].get<bool>();
      good += ok;
    }
    int nc = 0, rejected = 0;
    for (const auto& c : class_report["negative_controls"]) {
      ++nc;
      rejected += c["rejected"].get<bool>();
    }
    bool ok = entries > 0 && good == entries && nc > 0 && rejected == nc && t_class < kBudgetClassification;
    std::ostringstream d;
    d << good << "/" << entries << " Picard-number-one entries pass cone validity, completeness, |colors| = rank and"
      << " restricted type; " << rejected << "/" << nc << " negative controls rejected; "
      << secs(t_class, kBudgetClassification);
    line(6, ok, "classification database", d.str());
  }
  {
    auto slices = [&](const char* id) {
      for (const auto& e : class_report["entries"])
        if (e["id"] == id)
          for (const auto& c : e["checks"])
            if (c["name"] == "homogeneity") return c["certificate"]["slices"];
      return json();
    };
    json g = slices("g2-split"), a = slices("a2-sl3-so3");
    bool g_ok = g.size() == 1 && g[0]["omega"] == json({"-1", "1"}) && !g[0]["dominant"].get<bool>();
    bool a_ok = a.size() == 2 && a[0]["omega"] == json({"1", "-1"}) && !a[0]["dominant"].get<bool>() &&
                !a[1]["dominant"].get<bool>();
    const json& nt = check(class_report, "non_transitive_set");
    bool ok = g_ok && a_ok && nt["pass"].get<bool>();
    std::ostringstream d;
    d << "G2 slice weight " << g[0]["omega"].dump() << ", A2 slice weights " << a[0]["omega"].dump() << " and "
      << a[1]["omega"].dump() << " in fundamental weights, none dominant; non-transitive set "
      << nt["observed"].dump();
    line(7, ok, "homogeneity test", d.str());
  }
  {
    int n = 0, ok_n = 0;
    for (const auto& e : db.entries) {
      ++n;
      ok_n += dimension_audit(e).pass;
    }
    auto dim = [&](const char* id) { return dimension_audit(*db.find(id)); };
    DimensionAudit sl4 = dim("b2-sl4-s(l2xl2)-n"), e6 = dim("a2-e6-f4-n"), sp = dim("c3-sp6");
    const json& fs = check(jordan_report, "freudenthal_section");
    bool ok = ok_n == n && sl4.dim_gh == 8 && sl4.model_dim == 8 && e6.dim_gh == 26 && e6.model_dim == 26 &&
              sp.dim_gh == sp.model_dim && fs["pass"].get<bool>();
    std::ostringstream d;
    d << ok_n << "/" << n << " audits pass; SL4/N(S(L2xL2)) " << sl4.dim_gh << " = G_2(6) " << sl4.model_dim
      << "; E6/N(F4) " << e6.dim_gh << " = P(J3(O)) " << e6.model_dim << "; Sp6 " << sp.dim_gh
      << " = IG_6(12) " << sp.model_dim << "; Freudenthal section " << fs["observed"].dump();
    line(8, ok, "dimension audits", d.str());
  }

  // 9. determinism and total runtime of the default suite
  {
    bool same = true;
    double t = timed([&] {
      same = same && suites::run_jordan(cfg).dump() == jordan_report.dump();
      same = same && suites::run_g2(cfg).dump() == g2_report.dump();
      same = same && suites::run_spinor(cfg).dump() == spinor_report.dump();
      same = same && suites::run_classification(cfg).dump() == class_report.dump();
    });
    double suite = t_jordan + t_g2 + t_spinor + t_class;
    bool ok = same && suite < kBudgetFullSuite;
    std::ostringstream d;
    d << "repeated runs with seed " << kSeed << " give " << (same ? "identical" : "different")
      << " JSON; default suite " << secs(suite, kBudgetFullSuite) << ", rerun " << secs(t, kBudgetFullSuite);
    line(9, ok, "determinism and runtime", d.str());
  }

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
