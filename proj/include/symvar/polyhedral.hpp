#pragma once

#include "symvar/exact_field.hpp"

#include <vector>

namespace symvar {

// {x : A x >= 0, E x = 0}
struct PolyCone {
  bool pointed = true;
  std::vector<VecQ> rays;       // extreme rays, primitive integral (pointed case)
  std::vector<VecQ> lineality;  // basis of the lineality space
};

// Extreme rays by enumeration of rank-deficient row subsets. Fine for the
// dimensions used here (at most 5 coordinates, a handful of inequalities).
PolyCone extreme_rays(const MatQ& ineq, const MatQ& eq);

// positive multiple of an integral vector with coprime entries
VecQ primitive(const VecQ& v);
bool same_ray(const VecQ& u, const VecQ& v);

// Facet description of cone(gens) inside its linear span. Each row h satisfies
// h.g >= 0 on every generator; span_eq rows cut out the span.
struct Facets {
  MatQ normals;
  MatQ span_eq;
};
Facets facets(const std::vector<VecQ>& gens, Eigen::Index dim);

bool cone_contains(const std::vector<VecQ>& gens, const VecQ& x);

}  // namespace symvar
