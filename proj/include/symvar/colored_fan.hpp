#pragma once

#include "symvar/polyhedral.hpp"
#include "symvar/restricted.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symvar {

// Generators in ambient coordinates (inside the (-1)-eigenspace); colors are
// 1-based labels i standing for the restricted coroot alpha_i^v.
struct ColoredCone {
  std::vector<VecQ> generators;
  std::vector<int> colors;
};

struct ColoredFan {
  std::vector<ColoredCone> cones;
};

struct ConeCheck {
  bool colors_are_generators = false;
  bool others_in_valuation_cone = false;
  bool interior_meets_valuation_cone = false;
  bool pointed = false;
  VecQ witness;        // relative-interior point lying in -C+
  std::string reason;  // first failing condition, empty when valid
  bool valid() const { return reason.empty(); }
};

// throws std::invalid_argument on an empty generator list; zero generators are dropped
ConeCheck validate_cone(const ColoredCone& c, const RestrictedRootSystem& rrs);

struct CompletenessCheck {
  bool complete = false;
  std::string method;
  std::optional<VecQ> uncovered;  // a point of -C+ outside every cone
  std::optional<VecQ> separator;  // shared-facet normal, coweight coordinates
};

// throws std::domain_error for fans with more than two maximal cones
CompletenessCheck is_complete(const ColoredFan& f, const RestrictedRootSystem& rrs);

struct SliceWeight {
  VecQ varpi_check;  // ambient coordinates
  VecQ omega;        // ambient coordinates
  VecQ coords;       // in the fundamental weights
  bool dominant = false;
};

// cone must carry rank - 1 colors; throws std::logic_error when the sign of
// varpi^v cannot be fixed or the system is inconsistent
SliceWeight slice_highest_weight(const RestrictedRootSystem& rrs, const CharacterLattice& L,
                                 const ColoredCone& c);

struct Verdict {
  bool transitive = false;
  std::string reason;
  std::vector<SliceWeight> slices;  // one per maximal cone
};

// Transitive when a homogeneous model of dimension dim G/H is declared;
// otherwise non-transitive iff the slice weight fails to be dominant at every
// closed orbit.
Verdict homogeneity_verdict(const RestrictedRootSystem& rrs, const CharacterLattice& L,
                            const ColoredFan& f, std::optional<long> model_dim, long dim_GH);

}  // namespace symvar
