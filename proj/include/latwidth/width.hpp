// Certified lattice width: the exact minimum of width_l over nonzero integer
// functionals, established by enumerating the finite candidate set of
// functionals of width at most an initial upper bound (the lattice points of
// the scaled polar of the difference body).
#pragma once

#include "latwidth/polytope.hpp"

namespace latwidth {

struct WidthCertificate {
  Int value;
  IntVec minimizer;      // primitive, first nonzero entry positive
  Int upper_bound_used;  // every functional of width <= this was examined
  long long candidate_count = 0;
};

// max l.v - min l.v over the vertices; throws on the zero functional
Int width_along(const Polytope& p, const IntVec& functional);

// { l : l . (v_i - v_j) <= w0 for all vertex pairs }, stored with one
// inequality per scaled primitive direction, plus an integer box containing
// all its integer points (from exact rational vertices of the polar dilate,
// intersected with a Cramer-rule bound from d independent edge directions)
struct PolarBox {
  std::vector<std::pair<IntVec, Int>> constraints; // a . l <= b
  IntVec box_lo, box_hi;
};
PolarBox difference_body_polar_box(const Polytope& p, const Int& w0);

WidthCertificate lattice_width(const Polytope& p);

// upper_bound_hint must be a valid upper bound for the true width (the census
// passes the parent's width, valid by subpolytope monotonicity)
WidthCertificate lattice_width(const Polytope& p, const Int& upper_bound_hint);

} // namespace latwidth
