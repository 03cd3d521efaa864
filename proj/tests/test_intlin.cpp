#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latwidth/intlin.hpp"
#include "oracles.hpp"

#include <random>

using namespace latwidth;

namespace {

IntMat mat(std::vector<std::vector<long>> rows) {
  std::vector<IntVec> rs;
  for (auto& r : rows) rs.push_back(IntVec(r.begin(), r.end()));
  return IntMat::from_rows(rs);
}

IntVec vec(std::vector<long> v) { return IntVec(v.begin(), v.end()); }

} // namespace

TEST_CASE("hnf_column identity and diagonal fixed points") {
  CHECK(hnf_column(IntMat::identity(3)) == IntMat::identity(3));
  IntMat d23 = mat({{2, 0}, {0, 3}});
  CHECK(hnf_column(d23) == d23);
}

TEST_CASE("hnf_column preserves |det|") {
  IntMat m = mat({{1, 1}, {1, 3}});
  IntMat h = hnf_column(m);
  CHECK(oracles::det_cofactor(h) * oracles::det_cofactor(h) ==
        oracles::det_cofactor(m) * oracles::det_cofactor(m));
  CHECK(boost::multiprecision::abs(oracles::det_cofactor(h)) == 2);
  // echelon shape: zero above the first pivot
  CHECK(h.at(0, 1) == 0);
}

TEST_CASE("hnf_column invariant under right-unimodular factors") {
  std::mt19937_64 rng(7);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 100; ++trial) {
      IntMat m(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = Int(static_cast<long>(rng() % 9)) - 4;
      AffUnimodMap u = random_unimodular(dim, rng());
      CHECK(hnf_column(m * u.linear) == hnf_column(m));
      CHECK(boost::multiprecision::abs(determinant(hnf_column(m))) ==
            boost::multiprecision::abs(determinant(m)));
    }
  }
}

TEST_CASE("hnf_with_transform returns a unimodular right factor") {
  IntMat m = mat({{4, 6, 1}, {2, 0, -3}, {0, 5, 5}});
  HnfResult r = hnf_with_transform(m);
  CHECK(m * r.u == r.h);
  Int du = determinant(r.u);
  CHECK((du == 1 || du == -1));
}

TEST_CASE("determinant examples") {
  CHECK(determinant(IntMat::identity(4)) == 1);
  IntMat reeve = mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 7}});
  CHECK(determinant(reeve) == oracles::det_cofactor(reeve));
  CHECK(determinant(reeve) == 7);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Int(static_cast<long>(rng() % 11)) - 5;
    CHECK(determinant(m) == oracles::det_cofactor(m));
  }
}

TEST_CASE("make_primitive") {
  CHECK(make_primitive(vec({2, 4, 6})) == vec({1, 2, 3}));
  CHECK(make_primitive(vec({0, 0, 5})) == vec({0, 0, 1}));
  CHECK(make_primitive(vec({3, -6, 9})) == vec({1, -2, 3}));
  CHECK_THROWS_AS(make_primitive(vec({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("make_primitive is idempotent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntVec v(n);
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      v[i] = Int(static_cast<long>(rng() % 21)) - 10;
      if (v[i] != 0) all_zero = false;
    }
    if (all_zero) v[0] = 3;
    IntVec p = make_primitive(v);
    CHECK(make_primitive(p) == p);
    CHECK(content(p) == 1);
  }
}

TEST_CASE("rank and apply") {
  CHECK(rank(IntMat::identity(3)) == 3);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
  AffUnimodMap shift{IntMat::identity(3), vec({1, -2, 5})};
  CHECK(latwidth::apply(shift, vec({3, 3, 3})) == vec({4, 1, 8}));
}

TEST_CASE("random_unimodular has |det| = 1 for 100 seeds") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    AffUnimodMap f = random_unimodular(4, seed);
    Int d = determinant(f.linear);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("inverse_unimodular and map inverse") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    AffUnimodMap f = random_unimodular(3, seed);
    AffUnimodMap g = inverse(f);
    IntVec p = vec({2, -1, 4});
    CHECK(latwidth::apply(g, latwidth::apply(f, p)) == p);
    CHECK(latwidth::apply(f, latwidth::apply(g, p)) == p);
  }
}

TEST_CASE("integer_kernel_basis spans the saturated kernel") {
  // kernel of (2 4 6) is saturated of rank 2; every kernel vector must be an
  // integer combination of the basis
  IntMat m = mat({{2, 4, 6}});
  std::vector<IntVec> basis = integer_kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const IntVec& b : basis) CHECK(dot(m.row(0), b) == 0);
  // (1, 1, -1) lies in the kernel; solve for integer coefficients via rank
  IntVec target = vec({1, 1, -1});
  CHECK(dot(m.row(0), target) == 0);
  std::vector<IntVec> cols = basis;
  cols.push_back(target);
  CHECK(rank(IntMat::from_cols(cols)) == 2); // target is in the span
}

TEST_CASE("floor_div follows the floor convention") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(-2)) == -4);
  CHECK(floor_div(Int(-7), Int(-2)) == 3);
  CHECK(floor_div(Int(6), Int(2)) == 3);
  CHECK(floor_div(Int(-6), Int(2)) == -3);
}
