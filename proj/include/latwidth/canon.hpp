// Unimodular equivalence machinery: byte-comparable canonical forms for
// lattice polytopes, equivalence tests with explicit verified witness maps,
// and the finer equivalence of lifts over a common base.
#pragma once

#include "latwidth/polytope.hpp"

#include <string>
#include <vector>

namespace latwidth {

struct Lift; // lifts.hpp

// Key layout: ambient dim, intrinsic dim, vertex count, size, then the
// canonical matrix. Keys are equal exactly for affinely unimodularly
// equivalent polytopes.
struct CanonicalForm {
  std::vector<unsigned char> key;
  std::string hex() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

// The canonical matrix is the lexicographically minimal left-unimodular
// Hermite form of the anchored vertex-difference matrix
// [v_1 - v_0, ..., v_{n-1} - v_0] over all anchor choices and all orderings
// of the remaining vertices (branch-and-bound on the column prefix).
struct CanonicalData {
  CanonicalForm form;
  IntMat canonical_matrix; // d x (n-1)
  int anchor = 0;          // index into p.vertices
  std::vector<int> order;  // remaining vertex indices, in canonical order
  IntMat transform;        // transform * diffs(anchor, order) = canonical_matrix
};

CanonicalData canonical_data(const Polytope& p);
CanonicalForm canonical_form(const Polytope& p);

struct EquivResult {
  bool equivalent = false;
  AffUnimodMap witness; // maps the first polytope onto the second when equivalent
};

// canonical forms plus an explicit witness, verified on the vertex sets and
// on the full lattice point sets
EquivResult equivalent(const Polytope& p1, const Polytope& p2);

// Equivalence of lifts of one common base: exists e in {+1,-1}, integer
// covector a and integer c with (x, y) |-> (x, e y + a.x + c) mapping the
// first total polytope onto the second. Solved from the vertex fibers and
// verified on all lattice points. Throws if the bases differ.
bool lift_equivalent(const Lift& l1, const Lift& l2);

} // namespace latwidth
