// Lattice polytopes in dimensions 1-4 (ambient dimension up to 5): hulls with
// exact facet systems, lattice point enumeration, faces, normalized volume,
// and restriction to the affine hull's lattice.
#pragma once

#include "latwidth/intlin.hpp"

#include <optional>
#include <vector>

namespace latwidth {

// normal . x <= offset; normal is primitive and outward
struct Facet {
  IntVec normal;
  Int offset;
  bool operator==(const Facet&) const = default;
};

// normal . x == value on the whole polytope
struct HullEq {
  IntVec normal;
  Int value;
  bool operator==(const HullEq&) const = default;
};

// Immutable after construction via hull(); facet system and lattice points
// are computed eagerly, so values are safe to share across threads.
//
// For intrinsic dim < ambient the facet inequalities cut the polytope out of
// its affine hull, which is itself described by `equations`. Interior
// predicates use the relative interior in that case.
struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<IntVec> vertices; // lex sorted
  std::vector<Facet> facets;    // sorted by (normal, offset)
  std::vector<HullEq> equations;
  std::vector<IntVec> points;   // all lattice points, lex sorted

  bool operator==(const Polytope& o) const {
    return ambient == o.ambient && vertices == o.vertices;
  }
};

// Change of coordinates between a degenerate polytope's ambient space and a
// lattice basis of its affine hull: p = origin + from_sub * y, and
// y = the restricted coordinates of p (exact, lattice-preserving).
struct RestrictedCoords {
  IntVec origin;
  IntMat to_sub;   // k x d: y = to_sub * (p - origin)
  IntMat from_sub; // d x k
};

Polytope hull(const std::vector<IntVec>& pts);

const std::vector<IntVec>& lattice_points(const Polytope& p);
std::vector<IntVec> interior_lattice_points(const Polytope& p);
long size(const Polytope& p);

// d! times the Euclidean volume, taken inside the affine hull's lattice for
// degenerate polytopes; an integer unimodular invariant
Int normalized_volume(const Polytope& p);

bool contains(const Polytope& p, const IntVec& x);
bool in_relative_interior(const Polytope& p, const IntVec& x);

struct Face {
  std::vector<int> vertex_ids; // indices into p.vertices, sorted
  int dim = -1;
};

// all k-faces, 0 <= k < dim(p)
std::vector<Face> faces(const Polytope& p, int k);

struct PyramidInfo {
  Polytope base;     // the face opposite the apex
  Int apex_distance; // lattice distance from the apex to the base hyperplane
};

// Nonempty iff every vertex except `apex` lies on a common supporting
// hyperplane avoiding the apex. Throws if apex is not a vertex.
std::optional<PyramidInfo> pyramid_with_apex(const Polytope& p, const IntVec& apex);

// coordinates of the affine hull's lattice; requires dim(p) < ambient
RestrictedCoords restricted_coords(const Polytope& p);
Polytope restrict_to_affine_hull(const Polytope& p);

// image of p under an affine unimodular map
Polytope transform(const Polytope& p, const AffUnimodMap& f);

// fan triangulation from the first vertex; each simplex is a list of dim+1
// vertex points of p
std::vector<std::vector<IntVec>> triangulate(const Polytope& p);

// exact integral over p of the affine function x |-> c0 + c . x
Rat integrate_affine(const Polytope& p, const Rat& c0, const RatVec& c);

} // namespace latwidth
