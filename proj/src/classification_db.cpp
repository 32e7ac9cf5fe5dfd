#include "symvar/classification_db.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace symvar {

using nlohmann::json;

namespace {

json vec_json(const VecQ& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw DbError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DbError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

ModelSpec parse_model(const json& j) {
  ModelSpec m;
  m.name = field<std::string>(j, "name");
  m.family = field<std::string>(j, "family");
  m.dimension = field<long>(j, "dimension");
  json p = field_or<json>(j, "params", json::object());
  m.m = field_or<int>(p, "m", 0);
  m.n = field_or<int>(p, "n", 0);
  m.dim_v = field_or<int>(p, "dim_v", 0);
  m.form = field_or<std::string>(p, "form", "");
  m.group = field_or<std::string>(p, "group", "");
  m.marked = field_or<std::vector<int>>(p, "marked", {});
  if (j.contains("section")) {
    const json& s = j.at("section");
    m.section = true;
    m.section_codim = field_or<int>(s, "codimension", 0);
    m.section_description = field_or<std::string>(s, "description", "");
  }
  return m;
}

json model_json(const ModelSpec& m) {
  json p = json::object();
  if (m.m) p["m"] = m.m;
  if (m.n) p["n"] = m.n;
  if (m.dim_v) p["dim_v"] = m.dim_v;
  if (!m.form.empty()) p["form"] = m.form;
  if (!m.group.empty()) p["group"] = m.group;
  if (!m.marked.empty()) p["marked"] = m.marked;
  json j = {{"name", m.name}, {"family", m.family}, {"params", p}, {"dimension", m.dimension}};
  if (m.section) {
    json s = {{"description", m.section_description}};
    if (m.section_codim) s["codimension"] = m.section_codim;
    j["section"] = s;
  }
  return j;
}

std::vector<int> expected_colors(const RestrictedRootSystem& rrs) {
  std::vector<int> c;
  for (int i = 1; i <= rrs.rank(); ++i) c.push_back(i);
  for (int i : rrs.exceptional()) c.push_back(i);
  std::sort(c.begin(), c.end());
  return c;
}

CheckResult fail(const std::string& name, const std::string& why) { return {name, false, why, {}}; }

}  // namespace

const ClassificationEntry* ClassificationDb::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

ClassificationEntry parse_entry(const json& j) {
  if (!j.is_object()) throw DbError("entry is not an object");
  ClassificationEntry e;
  e.id = field<std::string>(j, "id");
  try {
    e.note = field_or<std::string>(j, "note", "");
    e.group = field<std::string>(j, "group");
    const json& inv = j.at("involution");
    e.involution_name = field_or<std::string>(inv, "name", "");
    auto rows = field<std::vector<std::vector<long>>>(inv, "theta");
    const auto n = static_cast<Eigen::Index>(rows.size());
    e.theta = zeros<Rational>(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != n) throw DbError("theta is not square");
      for (Eigen::Index c = 0; c < n; ++c) e.theta(r, c) = rows[r][c];
    }
    e.h = field<std::string>(j, "H");
    if (e.h != "fixed" && e.h != "normalizer" && e.h != "index_two")
      throw DbError("unknown H kind '" + e.h + "'");
    e.restricted_type = field<std::string>(j, "restricted_type");
    const json& l = j.at("lattice");
    e.lattice.kind = field<std::string>(l, "kind");
    e.lattice.basis = field_or<std::vector<std::vector<long>>>(l, "basis", {});
    if (l.contains("triality")) e.lattice.note = l.at("triality").dump();
    if ((e.lattice.kind == "chi" || e.lattice.kind == "chi_star") == e.lattice.basis.empty())
      throw DbError("lattice kind '" + e.lattice.kind + "' and basis disagree");
    e.colors = field<std::vector<int>>(j, "colors");
    for (const auto& c : field<json>(j, "fan"))
      e.fan.push_back({field<std::vector<std::string>>(c, "generators"),
                       field<std::vector<int>>(c, "colors")});
    if (e.fan.empty()) throw DbError("empty fan");
    e.picard_one = field<bool>(j, "picard_one");
    e.homogeneous = field<bool>(j, "homogeneous");
    e.model = parse_model(j.at("model"));
    e.x_dimension = field<long>(j, "x_dimension");
    e.aut = field_or<std::string>(j, "aut", "");
  } catch (const json::exception& ex) {
    throw DbError(e.id + ": " + ex.what());
  } catch (const DbError& ex) {
    throw DbError(e.id + ": " + ex.what());
  }
  try {
    RootSystem R(e.group);
    if (R.rank() != e.theta.rows()) throw DbError(e.id + ": theta size does not match the group rank");
  } catch (const std::invalid_argument& ex) {
    throw DbError(e.id + ": " + ex.what());
  }
  return e;
}

json entry_to_json(const ClassificationEntry& e) {
  std::vector<std::vector<long>> rows(e.theta.rows());
  for (Eigen::Index r = 0; r < e.theta.rows(); ++r)
    for (Eigen::Index c = 0; c < e.theta.cols(); ++c)
      rows[r].push_back(static_cast<long>(numerator(e.theta(r, c)).convert_to<long>()));
  json lat = {{"kind", e.lattice.kind}};
  if (!e.lattice.basis.empty()) lat["basis"] = e.lattice.basis;
  if (!e.lattice.note.empty()) lat["triality"] = json::parse(e.lattice.note);
  json fan = json::array();
  for (const auto& c : e.fan) fan.push_back({{"generators", c.generators}, {"colors", c.colors}});
  json j = {{"id", e.id},
            {"note", e.note},
            {"group", e.group},
            {"involution", {{"name", e.involution_name}, {"theta", rows}}},
            {"H", e.h},
            {"restricted_type", e.restricted_type},
            {"lattice", lat},
            {"colors", e.colors},
            {"fan", fan},
            {"picard_one", e.picard_one},
            {"homogeneous", e.homogeneous},
            {"model", model_json(e.model)},
            {"x_dimension", e.x_dimension}};
  if (!e.aut.empty()) j["aut"] = e.aut;
  return j;
}

ClassificationDb parse_db(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw DbError(std::string("not valid JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw DbError("top level must be an object with an 'entries' array");
  ClassificationDb db;
  for (const auto& e : j.at("entries")) {
    db.entries.push_back(parse_entry(e));
    if (std::count_if(db.entries.begin(), db.entries.end(),
                      [&](const auto& x) { return x.id == db.entries.back().id; }) > 1)
      throw DbError("duplicate id " + db.entries.back().id);
  }
  if (j.contains("nesting")) {
    db.nesting = field<std::vector<std::string>>(j.at("nesting"), "chain");
    db.nesting_note = field_or<std::string>(j.at("nesting"), "note", "");
    for (const auto& id : db.nesting)
      if (!db.find(id)) throw DbError("nesting refers to unknown id " + id);
  }
  return db;
}

ClassificationDb load_db(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DbError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_db(ss.str());
}

const char* default_db_path() { return SYMVAR_DEFAULT_DB; }

VecQ parse_generator(const std::string& s, const RestrictedRootSystem& rrs) {
  static const std::regex term(R"(([+-]?)(\d*)([aw])(\d+))");
  VecQ v = zero_vec<Rational>(rrs.ambient().rank());
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != pos || (pos > 0 && m[1].length() == 0))
      throw std::invalid_argument("bad generator '" + s + "'");
    pos += m.length();
    int i = std::stoi(m[4].str());
    if (i < 1 || i > rrs.rank()) throw std::invalid_argument("index out of range in '" + s + "'");
    Rational c = m[2].length() ? Rational(std::stol(m[2].str())) : Rational(1);
    if (m[1] == "-") c = -c;
    v += c * (m[3] == "a" ? rrs.coroots()[i - 1] : rrs.coweights()[i - 1]);
  }
  if (pos != s.size() || s.empty()) throw std::invalid_argument("bad generator '" + s + "'");
  return v;
}

CharacterLattice build_lattice(const LatticeSpec& l, const RestrictedRootSystem& rrs) {
  if (l.kind == "weight") return weight_lattice(rrs);
  if (l.kind == "root") return root_lattice(rrs);
  if (l.kind != "chi" && l.kind != "chi_star")
    throw std::invalid_argument("unknown lattice kind '" + l.kind + "'");
  if (static_cast<int>(l.basis.size()) != rrs.rank())
    throw std::invalid_argument("lattice basis size differs from the rank");
  std::vector<VecQ> b;
  for (const auto& row : l.basis) {
    if (static_cast<int>(row.size()) != rrs.rank())
      throw std::invalid_argument("lattice basis vector has the wrong length");
    VecQ c(rrs.rank());
    for (int i = 0; i < rrs.rank(); ++i) c(i) = row[i];
    b.push_back(l.kind == "chi" ? rrs.from_weight_coords(c) : rrs.from_coweight_coords(c));
  }
  return l.kind == "chi" ? lattice_from_chi(rrs, b) : lattice_from_chi_star(rrs, b);
}

ColoredFan build_fan(const std::vector<ConeSpec>& f, const RestrictedRootSystem& rrs) {
  ColoredFan fan;
  for (const auto& c : f) {
    ColoredCone cc;
    for (const auto& g : c.generators) cc.generators.push_back(parse_generator(g, rrs));
    for (int k : c.colors) {
      if (k < 1 || k > rrs.rank()) throw std::invalid_argument("color label out of range");
      // the color D_i lies on the ray of alpha_i^v
      if (std::find(c.generators.begin(), c.generators.end(), "a" + std::to_string(k)) ==
          c.generators.end())
        throw std::invalid_argument("color " + std::to_string(k) + " is not a listed generator");
    }
    cc.colors = c.colors;
    fan.cones.push_back(std::move(cc));
  }
  return fan;
}

long model_dimension(const ModelSpec& m) {
  const long a = m.m, n = m.n;
  if (m.family == "G") return a * (n - a);
  if (m.family == "LG") return a * (n - a) - a * (a - 1) / 2;
  if (m.family == "IG") {
    if (m.form == "orthogonal") return a * (n - a) - a * (a + 1) / 2;
    if (m.form == "symplectic") return a * (n - a) - a * (a - 1) / 2;
    throw std::invalid_argument("IG needs form orthogonal or symplectic");
  }
  if (m.family == "S") return a * (a - 1) / 2;
  if (m.family == "P") return m.dim_v - 1;
  if (m.family == "Q") return n - 1;
  if (m.family == "PxP") return 2 * (n - 1);
  if (m.family == "flag") return dim_flag(RootSystem(m.group), m.marked);
  throw std::invalid_argument("unsupported model family '" + m.family + "'");
}

DimensionAudit dimension_audit(const ClassificationEntry& e) {
  DimensionAudit a;
  a.dim_gh = symmetric_space_dim(InvolutionData(RootSystem(e.group), e.theta));
  a.model_dim = model_dimension(e.model);
  a.stored_model_dim = e.model.dimension;
  a.x_dim = e.x_dimension;
  std::ostringstream d;
  d << "dim G/H = " << a.dim_gh << ", " << e.model.name << " has dim " << a.model_dim;
  bool ok = a.model_dim == a.stored_model_dim && a.x_dim == a.dim_gh;
  if (e.model.section) {
    ok = ok && a.x_dim < a.model_dim;
    if (e.model.section_codim) ok = ok && a.x_dim == a.model_dim - e.model.section_codim;
    d << ", X is a section of dim " << a.x_dim;
  } else {
    ok = ok && a.model_dim == a.dim_gh;
  }
  if (a.model_dim != a.stored_model_dim) d << " (stored " << a.stored_model_dim << ")";
  a.pass = ok;
  a.detail = d.str();
  return a;
}

bool EntryReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* EntryReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json EntryReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json x = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.certificate.is_null()) x["certificate"] = c.certificate;
    cs.push_back(x);
  }
  json j = {{"id", id}, {"pass", pass()}, {"checks", cs}};
  if (transitive) j["transitive"] = *transitive;
  return j;
}

EntryReport verify_entry(const ClassificationEntry& e) {
  EntryReport rep;
  rep.id = e.id;
  auto& out = rep.checks;

  std::optional<RootSystem> R;
  try {
    R.emplace(e.group);
  } catch (const std::exception& ex) {
    out.push_back(fail("involution", std::string("bad group: ") + ex.what()));
    return rep;
  }
  InvolutionCheck ic = check_involution(*R, e.theta);
  {
    json cert = {{"involutive", ic.involutive}, {"permutes_roots", ic.permutes_roots},
                 {"orthogonal", ic.orthogonal}};
    out.push_back({"involution", ic.ok(), e.involution_name, cert});
  }
  std::optional<RestrictedRootSystem> rrs;
  std::optional<InvolutionData> inv;
  if (ic.ok()) {
    try {
      inv.emplace(*R, e.theta);
      rrs.emplace(restrict(*inv));
    } catch (const std::exception& ex) {
      out.push_back(fail("restricted_type", ex.what()));
    }
  }
  const char* later[] = {"colors", "lattice", "cones", "fan_complete", "dimension", "homogeneity"};
  if (!rrs) {
    if (!ic.ok()) out.push_back(fail("restricted_type", "involution invalid"));
    for (const char* n : later) out.push_back(fail(n, "no restricted root system"));
    return rep;
  }

  out.push_back({"restricted_type", rrs->type() == e.restricted_type,
                 "computed " + rrs->type() + ", stored " + e.restricted_type,
                 {{"computed", rrs->type()}, {"exceptional", rrs->exceptional()}}});

  {
    std::vector<int> want = expected_colors(*rrs), have = e.colors;
    std::sort(have.begin(), have.end());
    bool ok = want == have;
    if (e.picard_one) ok = ok && static_cast<int>(have.size()) == rrs->rank();
    for (const auto& c : e.fan)
      for (int k : c.colors) ok = ok && std::count(have.begin(), have.end(), k) > 0;
    std::ostringstream d;
    d << have.size() << " colors, rank " << rrs->rank();
    out.push_back({"colors", ok, d.str(), {{"computed", want}, {"stored", have}}});
  }

  std::optional<CharacterLattice> L;
  try {
    L = build_lattice(e.lattice, *rrs);
    LatticeCheck lc = check_lattice(*rrs, *L);
    bool ok = lc.contains_root_lattice && lc.inside_weight_lattice;
    out.push_back({"lattice", ok, e.lattice.kind,
                   {{"contains_root_lattice", lc.contains_root_lattice},
                    {"inside_weight_lattice", lc.inside_weight_lattice},
                    {"index_over_root_lattice", lc.index_over_root_lattice.str()}}});
  } catch (const std::exception& ex) {
    out.push_back(fail("lattice", ex.what()));
  }

  std::optional<ColoredFan> fan;
  try {
    fan = build_fan(e.fan, *rrs);
    bool ok = true;
    json certs = json::array();
    std::string reason;
    for (const auto& c : fan->cones) {
      ConeCheck cc = validate_cone(c, *rrs);
      if (!cc.valid() && reason.empty()) reason = cc.reason;
      ok = ok && cc.valid();
      certs.push_back({{"valid", cc.valid()},
                       {"witness", cc.valid() ? vec_json(rrs->coweight_coords(cc.witness)) : json()},
                       {"reason", cc.reason}});
    }
    out.push_back({"cones", ok, ok ? std::to_string(fan->cones.size()) + " valid" : reason, certs});
  } catch (const std::exception& ex) {
    out.push_back(fail("cones", ex.what()));
  }

  if (fan) {
    try {
      CompletenessCheck cc = is_complete(*fan, *rrs);
      json cert = {{"method", cc.method}};
      if (cc.uncovered) cert["uncovered"] = vec_json(rrs->coweight_coords(*cc.uncovered));
      if (cc.separator) cert["separator"] = vec_json(*cc.separator);
      out.push_back({"fan_complete", cc.complete, cc.method, cert});
    } catch (const std::exception& ex) {
      out.push_back(fail("fan_complete", ex.what()));
    }
  } else {
    out.push_back(fail("fan_complete", "fan not built"));
  }

  std::optional<DimensionAudit> da;
  try {
    da = dimension_audit(e);
    out.push_back({"dimension", da->pass, da->detail,
                   {{"dim_GH", da->dim_gh}, {"model", da->model_dim}, {"x", da->x_dim}}});
  } catch (const std::exception& ex) {
    out.push_back(fail("dimension", ex.what()));
  }

  if (fan && L && da) {
    try {
      std::optional<long> declared;
      if (!e.model.section) declared = da->model_dim;
      Verdict v = homogeneity_verdict(*rrs, *L, *fan, declared, da->dim_gh);
      json slices = json::array();
      for (const auto& s : v.slices)
        slices.push_back({{"omega", vec_json(s.coords)}, {"dominant", s.dominant}});
      rep.transitive = v.transitive;
      out.push_back({"homogeneity", v.transitive == e.homogeneous,
                     std::string(v.transitive ? "transitive: " : "non-transitive: ") + v.reason,
                     {{"transitive", v.transitive}, {"slices", slices}}});
    } catch (const std::exception& ex) {
      out.push_back(fail("homogeneity", ex.what()));
    }
  } else {
    out.push_back(fail("homogeneity", "missing lattice, fan or dimension"));
  }
  return rep;
}

NestingCheck check_nesting(const ClassificationDb& db) {
  NestingCheck n;
  if (db.nesting.size() < 2) {
    n.detail = "no chain recorded";
    return n;
  }
  for (const auto& id : db.nesting) {
    const auto* e = db.find(id);
    n.x_dims.push_back(e->x_dimension);
    n.model_dims.push_back(model_dimension(e->model));
  }
  auto increasing = [](const std::vector<long>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<long>()) == v.end();
  };
  n.pass = increasing(n.x_dims) && increasing(n.model_dims);
  n.detail = n.pass ? "strictly increasing" : "not strictly increasing";
  return n;
}

std::vector<NegativeControl> negative_controls(const ClassificationDb& db) {
  auto base = [&](const char* id) {
    const auto* e = db.find(id);
    if (!e) throw DbError(std::string("negative controls need entry ") + id);
    return *e;
  };
  std::vector<NegativeControl> v;
  {
    auto e = base("g2-split");
    e.colors = {2};
    v.push_back({"color removed", "colors", e});
  }
  {
    auto e = base("g2-split");
    e.restricted_type = "B2";
    v.push_back({"wrong restricted type", "restricted_type", e});
  }
  {
    auto e = base("g2-split");
    e.fan[0].generators = {"a2", "w2"};
    v.push_back({"cone misses the valuation cone", "cones", e});
  }
  {
    auto e = base("a2-sl3");
    e.fan.pop_back();
    v.push_back({"closed orbit dropped", "fan_complete", e});
  }
  {
    auto e = base("a2-sl3-so3");
    e.theta(0, 0) = 1;
    v.push_back({"theta not an involution", "involution", e});
  }
  {
    auto e = base("a1a1-spin5-spin5");
    e.lattice.basis = {{4, 0}, {1, 1}};
    v.push_back({"lattice misses a root", "lattice", e});
  }
  {
    auto e = base("b2-sl4-s(l2xl2)-n");
    e.model.dimension = 9;
    v.push_back({"model dimension off by one", "dimension", e});
  }
  {
    auto e = base("g2-split");
    e.homogeneous = true;
    v.push_back({"homogeneity flag flipped", "homogeneity", e});
  }
  return v;
}

}  // namespace symvar
