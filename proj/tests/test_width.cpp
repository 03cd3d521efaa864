#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwidth/hollowlab.hpp"
#include "latwidth/width.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace latwidth;

namespace {

IntVec vec(std::vector<long> v) { return IntVec(v.begin(), v.end()); }

std::vector<IntVec> vecs(std::vector<std::vector<long>> vs) {
  std::vector<IntVec> out;
  for (auto& v : vs) out.push_back(vec(v));
  return out;
}

Polytope unit_square() { return hull(vecs({{0, 0}, {1, 0}, {0, 1}, {1, 1}})); }
Polytope unit_cube() {
  return hull(vecs({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                    {0, 1, 1}, {1, 1, 1}}));
}
Polytope reeve(long r) { return hull(vecs({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, r}})); }
Polytope simplex2() { return hull(vecs({{0, 0}, {1, 0}, {0, 1}})); }

// all sign-normalized primitive integer points passing the pair-inequality
// filter, by brute force over a box
std::set<IntVec> filter_bruteforce(const Polytope& p, long w0, long bound) {
  std::set<IntVec> out;
  const int d = p.ambient;
  IntVec l(d, Int(-bound));
  for (;;) {
    if (!is_zero(l) && content(l) == 1) {
      IntVec norm = sign_normalize(l);
      if (norm == l) {
        bool pass = true;
        for (const IntVec& a : p.vertices) {
          for (const IntVec& b : p.vertices) {
            if (dot(l, sub(a, b)) > w0) { pass = false; break; }
          }
          if (!pass) break;
        }
        if (pass) out.insert(l);
      }
    }
    int j = d - 1;
    while (j >= 0) {
      if (l[j] < bound) { ++l[j]; break; }
      l[j] = -bound;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

} // namespace

TEST_CASE("width_along examples") {
  CHECK(width_along(unit_cube(), vec({0, 0, 1})) == 1);
  Polytope m3 = hull(vecs({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  CHECK(width_along(m3, vec({1, 0, 0})) == 3);
  for (long r : {1L, 5L, 9L}) CHECK(width_along(reeve(r), vec({0, 0, 1})) == r);
  CHECK_THROWS_AS(width_along(unit_cube(), vec({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("polar box of the unit square at W0 = 1") {
  PolarBox pb = difference_body_polar_box(unit_square(), 1);
  CHECK(pb.box_lo == vec({-1, -1}));
  CHECK(pb.box_hi == vec({1, 1}));
}

TEST_CASE("polar filter for the unimodular triangle at W0 = 1") {
  // brute force over [-2, 2]^2 fixes the expected set
  std::set<IntVec> expected = filter_bruteforce(simplex2(), 1, 2);
  CHECK(expected == std::set<IntVec>{vec({0, 1}), vec({1, 0}), vec({1, 1})});

  PolarBox pb = difference_body_polar_box(simplex2(), 1);
  std::set<IntVec> got;
  for (Int x = pb.box_lo[0]; x <= pb.box_hi[0]; ++x)
    for (Int y = pb.box_lo[1]; y <= pb.box_hi[1]; ++y) {
      IntVec l{x, y};
      if (is_zero(l) || content(l) != 1 || sign_normalize(l) != l) continue;
      bool pass = true;
      for (const auto& [a, b] : pb.constraints)
        if (dot(a, l) > b) { pass = false; break; }
      if (pass) got.insert(l);
    }
  CHECK(got == expected);
}

TEST_CASE("polar system at W0 = 0 admits only the zero functional") {
  PolarBox pb = difference_body_polar_box(unit_square(), 0);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      bool pass = true;
      for (const auto& [a, b] : pb.constraints)
        if (dot(a, vec({x, y})) > b) { pass = false; break; }
      CHECK_FALSE(pass);
    }
}

TEST_CASE("difference_body_polar_box preconditions") {
  Polytope seg = hull(vecs({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(difference_body_polar_box(seg, 1), std::invalid_argument);
  CHECK_THROWS_AS(difference_body_polar_box(unit_square(), -1), std::invalid_argument);
}

TEST_CASE("catalog widths match the stated values") {
  std::vector<long> expected{2, 2, 3, 2, 3, 3, 2, 2, 3, 3, 2, 2};
  const auto& cat = catalog();
  REQUIRE(cat.size() == 12);
  for (size_t i = 0; i < cat.size(); ++i) {
    WidthCertificate c = lattice_width(cat[i].polytope);
    CHECK_MESSAGE(c.value == expected[i], cat[i].name);
    CHECK(width_along(cat[i].polytope, c.minimizer) == c.value);
    CHECK(c.upper_bound_used >= c.value);
    CHECK(c.candidate_count >= 1);
  }
}

TEST_CASE("known small widths") {
  Polytope hz = hull(vecs({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 2, 3}}));
  CHECK(lattice_width(hz).value == 2);
  CHECK(lattice_width(unit_square()).value == 1);
  CHECK(lattice_width(hull(vecs({{0, 0}, {2, 0}, {0, 2}}))).value == 2);
}

TEST_CASE("Reeve tetrahedra have width 1, cross-checked exhaustively for small r") {
  for (long r = 1; r <= 20; ++r) {
    WidthCertificate c = lattice_width(reeve(r));
    CHECK(c.value == 1);
  }
  for (long r = 1; r <= 8; ++r) {
    Polytope t = reeve(r);
    CHECK(lattice_width(t).value == oracles::width_exhaustive(t.vertices, 3, r + 1));
  }
}

TEST_CASE("degenerate polytopes get width 0 with an affine-hull normal") {
  Polytope seg = hull(vecs({{0, 0}, {3, 3}}));
  WidthCertificate c = lattice_width(seg);
  CHECK(c.value == 0);
  CHECK(dot(c.minimizer, vec({1, 1})) == 0); // orthogonal to the segment direction
  CHECK(c.candidate_count == 0);

  Polytope pt = hull(vecs({{4, 5}}));
  CHECK(lattice_width(pt).value == 0);
}

TEST_CASE("minimizer ties break lexicographically") {
  // the cube has width 1 along each coordinate; (0,0,1) is lex-smallest
  WidthCertificate c = lattice_width(unit_cube());
  CHECK(c.value == 1);
  CHECK(c.minimizer == vec({0, 0, 1}));
}

TEST_CASE("width is invariant under random unimodular maps") {
  std::mt19937_64 rng(41);
  for (const CatalogEntry& e : catalog()) {
    Int w = lattice_width(e.polytope).value;
    for (int trial = 0; trial < 10; ++trial) {
      AffUnimodMap f = random_unimodular(3, rng());
      CHECK(lattice_width(transform(e.polytope, f)).value == w);
    }
  }
}

TEST_CASE("width is monotone under subpolytopes") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope& p = catalog()[rng() % 12].polytope;
    std::vector<IntVec> pts;
    for (const IntVec& q : p.points)
      if (rng() % 3 != 0) pts.push_back(q);
    if (pts.empty()) continue;
    Polytope sub_p = hull(pts);
    Int w = sub_p.dim < sub_p.ambient ? Int(0) : lattice_width(sub_p).value;
    CHECK(w <= lattice_width(p).value);
  }
}

TEST_CASE("upper bound hint does not change the certificate") {
  for (const CatalogEntry& e : catalog()) {
    WidthCertificate base = lattice_width(e.polytope);
    WidthCertificate hinted = lattice_width(e.polytope, base.value);
    CHECK(hinted.value == base.value);
    CHECK(hinted.minimizer == base.minimizer);
  }
}

TEST_CASE("product law: width(P x [0, W]) = min(width(P), W)") {
  std::vector<Polytope> bases = {unit_square(), simplex2(), hull(vecs({{0, 0}, {2, 0}, {0, 2}})),
                                 hull(vecs({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}))};
  for (const Polytope& p : bases) {
    Int wp = lattice_width(p).value;
    for (long w = 1; w <= 3; ++w) {
      std::vector<IntVec> pts;
      for (const IntVec& v : p.vertices) {
        IntVec a = v, b = v;
        a.push_back(0);
        b.push_back(w);
        pts.push_back(a);
        pts.push_back(b);
      }
      Polytope prod = hull(pts);
      CHECK(lattice_width(prod).value == (wp < w ? wp : Int(w)));
    }
  }
}

TEST_CASE("lattice_width agrees with the exhaustive oracle on a random corpus") {
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 25) {
    std::vector<IntVec> pts;
    for (int i = 0; i < 5; ++i) {
      IntVec p(3);
      for (int j = 0; j < 3; ++j) p[j] = Int(static_cast<long>(rng() % 7)) - 3;
      pts.push_back(p);
    }
    Polytope p = hull(pts);
    if (p.dim != 3) continue;
    ++done;
    CHECK(lattice_width(p).value == oracles::width_exhaustive(p.vertices, 3, 6));
  }
}
