// Hollow/empty classification, the embedded catalog of the twelve maximal
// hollow 3-polytopes, hollow projection directions, and the breadth-first
// subpolytope census with canonical deduplication.
#pragma once

#include "latwidth/polytope.hpp"

#include <string>
#include <vector>

namespace latwidth {

struct CatalogEntry {
  std::string name; // "M1" .. "M12"
  Polytope polytope;
  Int stated_width;
};

// the twelve maximal hollow lattice 3-polytopes, vertices exactly as printed
const std::vector<CatalogEntry>& catalog();
const Polytope* catalog_lookup(const std::string& name);

// throws unless all twelve are hollow with their stated widths
void catalog_self_check();

bool is_hollow(const Polytope& p); // no lattice point in the relative interior
bool is_empty(const Polytope& p);  // vertices are the only lattice points

struct CensusRecord {
  std::string key; // canonical form, lowercase hex
  long size = 0;
  Int width;
  int dim = -1;
  std::string parent;            // key of a discovering parent; empty for the seed
  std::vector<IntVec> vertices;  // representative vertex set
};

struct CensusOptions {
  Int min_width = 0;
  bool include_degenerate = false;
  int threads = 1;
};

// Breadth-first walk over subpolytopes of the seed: children drop one hull
// vertex from the current lattice point set, so each level is one size step
// down. Classes are deduplicated by canonical key; nodes of width below
// min_width are pruned (width is monotone under taking subpolytopes).
// Output is ordered by size descending, then key, and is deterministic for
// any thread count.
std::vector<CensusRecord> census_subpolytopes(const Polytope& seed, const CensusOptions& opt);

// width of hull(lattice_points(p) minus one vertex), per vertex
std::vector<std::pair<IntVec, Int>> vertex_removal_widths(const Polytope& p);

struct HollowProjection {
  IntVec direction;
  Polytope image;
};

// Projections of p along primitive lattice directions of the difference body
// whose images are hollow. The candidate set is a documented heuristic, not
// proven exhaustive.
std::vector<HollowProjection> hollow_projection_directions(const Polytope& p);

} // namespace latwidth
