#pragma once

#include "symvar/colored_fan.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symvar {

// malformed database text or entry data
struct DbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LatticeSpec {
  std::string kind;  // "weight", "root", "chi" (weight coords), "chi_star" (coweight coords)
  std::vector<std::vector<long>> basis;
  std::string note;
};

struct ConeSpec {
  std::vector<std::string> generators;  // "a2", "-w1-w2", "2w4"
  std::vector<int> colors;
};

struct ModelSpec {
  std::string name, family;  // family: G, IG, LG, S, P, Q, PxP, flag
  int m = 0, n = 0, dim_v = 0;
  std::string form;  // IG only: "orthogonal" or "symplectic"
  std::string group;  // flag only
  std::vector<int> marked;
  long dimension = 0;
  bool section = false;  // X is a linear section of the model
  int section_codim = 0;  // 0 when the section is not a complete intersection of known codimension
  std::string section_description;
};

struct ClassificationEntry {
  std::string id, note, group, involution_name;
  MatQ theta;
  std::string h;  // "fixed", "normalizer", "index_two"
  std::string restricted_type;
  LatticeSpec lattice;
  std::vector<int> colors;  // colors of G/H; an exceptional root contributes its label twice
  std::vector<ConeSpec> fan;
  bool picard_one = true;
  bool homogeneous = true;
  ModelSpec model;
  long x_dimension = 0;
  std::string aut;
};

struct ClassificationDb {
  std::vector<ClassificationEntry> entries;
  std::vector<std::string> nesting;  // ids, smallest first
  std::string nesting_note;
  const ClassificationEntry* find(const std::string& id) const;
};

// throw DbError
ClassificationDb parse_db(const std::string& text);
ClassificationDb load_db(const std::string& path);
ClassificationEntry parse_entry(const nlohmann::json& j);
nlohmann::json entry_to_json(const ClassificationEntry& e);
const char* default_db_path();

// "a2", "-w1-w2", "2w4": restricted coroots and fundamental coweights, ambient
// coordinates; throws std::invalid_argument
VecQ parse_generator(const std::string& s, const RestrictedRootSystem& rrs);
CharacterLattice build_lattice(const LatticeSpec& l, const RestrictedRootSystem& rrs);
ColoredFan build_fan(const std::vector<ConeSpec>& f, const RestrictedRootSystem& rrs);

// throws std::invalid_argument for an unsupported family
long model_dimension(const ModelSpec& m);

struct DimensionAudit {
  long dim_gh = 0;
  long model_dim = 0;
  long stored_model_dim = 0;
  long x_dim = 0;
  bool pass = false;
  std::string detail;
};
DimensionAudit dimension_audit(const ClassificationEntry& e);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json certificate;
};

struct EntryReport {
  std::string id;
  std::vector<CheckResult> checks;
  std::optional<bool> transitive;
  bool pass() const;
  const CheckResult* check(const std::string& name) const;
  nlohmann::json to_json() const;
};

// checks: involution, restricted_type, colors, lattice, cones, fan_complete,
// dimension, homogeneity. Never throws on bad data; failures are reported.
EntryReport verify_entry(const ClassificationEntry& e);

struct NestingCheck {
  bool pass = false;
  std::vector<long> x_dims, model_dims;
  std::string detail;
};
NestingCheck check_nesting(const ClassificationDb& db);

struct NegativeControl {
  std::string name;
  std::string expected_failure;  // name of the check that must fail
  ClassificationEntry entry;
};
// one corrupted entry per failure class; throws DbError when a base entry is missing
std::vector<NegativeControl> negative_controls(const ClassificationDb& db);

}  // namespace symvar
