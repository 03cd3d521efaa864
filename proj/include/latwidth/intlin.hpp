// Exact integer and rational linear algebra for lattice-polytope work in
// dimensions 1-5: dense matrices over arbitrary-precision integers, Hermite
// normal forms, integer kernels, and affine unimodular maps.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latwidth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major integer matrix. Kept deliberately small and concrete:
// everything in this project lives in dimensions <= 5.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rs);
  static IntMat from_cols(const std::vector<IntVec>& cs);

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IntVec row(int r) const;
  IntVec col(int c) const;
  IntMat transposed() const;

  bool operator==(const IntMat&) const = default;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec mul(const IntMat& a, const IntVec& x);

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec neg(const IntVec& a);
IntVec scale(const IntVec& a, const Int& s);
bool is_zero(const IntVec& a);
bool lex_less(const IntVec& a, const IntVec& b);

// gcd of the entries, >= 0; 0 only for the zero vector
Int content(const IntVec& v);

// v divided by the (positive) gcd of its entries; rejects the zero vector
IntVec make_primitive(const IntVec& v);

// flips the sign so the first nonzero entry is positive; zero vector unchanged
IntVec sign_normalize(const IntVec& v);

// exact determinant (Bareiss fraction-free elimination); m square
Int determinant(const IntMat& m);

int rank(const IntMat& m);

// Column-style Hermite normal form: h = m * u with u unimodular.
// Convention used throughout the project: h is in column echelon form with
// pivot rows strictly increasing, pivots positive, entries to the left of
// each pivot reduced into [0, pivot), zero columns last. This form is the
// unique canonical representative of m under right multiplication by
// unimodular matrices.
struct HnfResult {
  IntMat h;
  IntMat u;                    // m * u = h
  std::vector<int> pivot_rows; // pivot of column j sits in row pivot_rows[j]
};
HnfResult hnf_with_transform(const IntMat& m);
IntMat hnf_column(const IntMat& m);

// basis of { x in Z^cols : m x = 0 }; the basis generates the full
// (saturated) integer kernel lattice
std::vector<IntVec> integer_kernel_basis(const IntMat& m);

// exact inverse of a matrix with det = +-1
IntMat inverse_unimodular(const IntMat& u);

// p |-> linear * p + translation, with |det(linear)| = 1
struct AffUnimodMap {
  IntMat linear;
  IntVec translation;
};

IntVec apply(const AffUnimodMap& f, const IntVec& p);
AffUnimodMap compose(const AffUnimodMap& f, const AffUnimodMap& g); // f after g
AffUnimodMap inverse(const AffUnimodMap& f);

// Deterministic pseudo-random affine unimodular map, built as a product of
// elementary integer row operations so |det| = 1 by construction. Entries
// stay small; meant for invariance testing, not for cryptographic mixing.
AffUnimodMap random_unimodular(int dim, uint64_t seed);

// floor division with sign convention floor(a/b), b != 0
Int floor_div(const Int& a, const Int& b);

// num/den as an exact rational; accepts negative denominators (the
// cpp_rational component constructor does not)
Rat make_rat(const Int& num, const Int& den);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

std::string to_string(const IntVec& v);

} // namespace latwidth
