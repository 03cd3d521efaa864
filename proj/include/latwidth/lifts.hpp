// Lift machinery: coordinate-dropping projections, tight lifts with one
// integer height per base vertex, enumeration of tight-lift classes of
// bounded size, and the explicit generator families used throughout.
#pragma once

#include "latwidth/polytope.hpp"

#include <vector>

namespace latwidth {

// A d-polytope together with the projection that forgets the last coordinate
// and its (d-1)-dimensional image. For tight lifts the total polytope is the
// hull of one lifted point per base vertex, recorded in `heights` (indexed by
// base.vertices order).
struct Lift {
  Polytope total;
  Polytope base;
  bool tight = false;
  std::vector<Int> heights;
};

Polytope project_last(const Polytope& p); // requires ambient dim >= 2

Lift lift_of(const Polytope& total); // wraps with base = project_last(total)

Lift tight_lift(const Polytope& base, const std::vector<Int>& heights);

// conv(Q' x {0} u {(v, h)}) where Q' drops the vertex v. Hypotheses checked:
// Q hollow, Q not a pyramid with apex v, and every proper face of dimension
// >= 1 containing v either hollow or a pyramid with apex v; violations are
// reported with the offending face. The lcm of the apex distances of the
// pyramid faces at v gives the height period with size(P(h)) = size(Q).
struct PhLift {
  Lift lift;
  Int size_period; // lcm of apex distances over pyramid faces at v
};
PhLift construct_P_h(const Polytope& q, const IntVec& v, const Int& h);

// conv{0, e1, e2, (1,1,r)}, r >= 1
Polytope family_reeve(const Int& r);
// conv{0, e1, e2, e3, (2,2,3)}
Polytope family_hz_base();
// 4-simplex conv{e1, e2, e3, e4, (2, N/2-1, a, N/2-a)}; N = 0 mod 4, gcd(a,N) = 1
Polytope family_bbk(const Int& n, const Int& a);

Polytope product_with_segment(const Polytope& p, const Int& w); // w >= 1

// conv(Q x {0} u {(u, h), (v, -h)}); u, v lattice points of Q sharing no facet
Polytope bipyramid_lift(const Polytope& q, const IntVec& u, const IntVec& v, const Int& h);

// grows p by exactly one lattice point inside the width band of the given
// width-realizing functional, removing surplus hull points one at a time
Polytope extend_by_one_point(const Polytope& p, const IntVec& width_functional);

struct TightLiftClass {
  Lift rep;
  long size = 0;
  Int width;
  int dim = -1;
};

// All tight lifts with the first vertex height normalized to 0 and the other
// heights in [-h, h], deduplicated by lift equivalence (heights are reduced
// modulo sign flip and integer-affine shifts first), filtered to
// size <= size_bound. The height bound is a completeness caveat, not a
// theoretical cutoff.
std::vector<TightLiftClass> enumerate_tight_lifts(const Polytope& q, const Int& height_bound,
                                                  long size_bound);

// index of the vertex-spanned affine lattice in the ambient lattice of the
// affine hull; equals the normalized volume. Input must be a simplex.
Int same_dimensional_lift_count(const Polytope& simplex);

// The constant c(q, interior point) bounding normalized lift volumes against
// fiber lengths: d! times the maximum over polar vertices w of
// int_Q (1 - w.(x - q)) dx, exact.
Rat fiber_volume_constant(const Polytope& q, const IntVec& interior_point);

// exact length of the vertical fiber segment of `total` over a base point;
// -1 when the fiber is empty
Rat fiber_length(const Polytope& total, const IntVec& base_point);

} // namespace latwidth
