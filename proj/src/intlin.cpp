#include "latwidth/intlin.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace latwidth {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rs) {
  if (rs.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rs[i].size()) != m.cols)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cs) {
  if (cs.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(cs[0].size()), static_cast<int>(cs.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cs[j].size()) != m.rows)
      throw std::invalid_argument("from_cols: ragged columns");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
  }
  return m;
}

IntVec IntMat::row(int r) const {
  IntVec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(r, j);
  return v;
}

IntVec IntMat::col(int c) const {
  IntVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
  IntMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec mul(const IntMat& a, const IntVec& x) {
  if (a.cols != static_cast<int>(x.size()))
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVec y(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec neg(const IntVec& a) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

IntVec scale(const IntVec& a, const Int& s) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

bool is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

IntVec make_primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("make_primitive: zero vector");
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

IntVec sign_normalize(const IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    return x < 0 ? neg(v) : v;
  }
  return v;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) return Rat(-num, -den);
  return Rat(num, den);
}

Int rat_floor(const Rat& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Int rat_ceil(const Rat& q) {
  return -floor_div(-boost::multiprecision::numerator(q),
                    boost::multiprecision::denominator(q));
}

Int determinant(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMat b = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (b.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
      b.at(i, k) = 0;
    }
    prev = b.at(k, k);
  }
  return sign > 0 ? b.at(n - 1, n - 1) : Int(-b.at(n - 1, n - 1));
}

int rank(const IntMat& m) {
  IntMat b = m;
  int r = 0;
  for (int c = 0; c < b.cols && r < b.rows; ++c) {
    int p = -1;
    for (int i = r; i < b.rows; ++i)
      if (b.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < b.cols; ++j) std::swap(b.at(r, j), b.at(p, j));
    for (int i = r + 1; i < b.rows; ++i) {
      if (b.at(i, c) == 0) continue;
      Int pr = b.at(r, c), pi = b.at(i, c);
      Int g = boost::multiprecision::gcd(pr, pi);
      Int fr = pi / g, fi = pr / g;
      for (int j = c; j < b.cols; ++j) b.at(i, j) = b.at(i, j) * fi - b.at(r, j) * fr;
    }
    ++r;
  }
  return r;
}

HnfResult hnf_with_transform(const IntMat& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMat::identity(m.cols);
  IntMat& h = res.h;
  IntMat& u = res.u;

  auto swap_cols = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < h.rows; ++i) std::swap(h.at(i, x), h.at(i, y));
    for (int i = 0; i < u.rows; ++i) std::swap(u.at(i, x), u.at(i, y));
  };
  auto addmul_col = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < h.rows; ++i) h.at(i, dst) -= q * h.at(i, src);
    for (int i = 0; i < u.rows; ++i) u.at(i, dst) -= q * u.at(i, src);
  };
  auto negate_col = [&](int c) {
    for (int i = 0; i < h.rows; ++i) h.at(i, c) = -h.at(i, c);
    for (int i = 0; i < u.rows; ++i) u.at(i, c) = -u.at(i, c);
  };

  int pc = 0;
  for (int r = 0; r < h.rows && pc < h.cols; ++r) {
    // collapse row r (columns pc..) to a single nonzero at pc by gcd steps
    for (;;) {
      int best = -1;
      for (int j = pc; j < h.cols; ++j) {
        if (h.at(r, j) == 0) continue;
        if (best < 0 || boost::multiprecision::abs(h.at(r, j)) <
                            boost::multiprecision::abs(h.at(r, best)))
          best = j;
      }
      if (best < 0) break;
      swap_cols(pc, best);
      bool clean = true;
      for (int j = pc + 1; j < h.cols; ++j) {
        if (h.at(r, j) == 0) continue;
        Int q = h.at(r, j) / h.at(r, pc);
        addmul_col(j, pc, q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, pc) == 0) continue; // no pivot in this row
    if (h.at(r, pc) < 0) negate_col(pc);
    for (int j = 0; j < pc; ++j) {
      Int q = floor_div(h.at(r, j), h.at(r, pc));
      addmul_col(j, pc, q);
    }
    res.pivot_rows.push_back(r);
    ++pc;
  }
  return res;
}

IntMat hnf_column(const IntMat& m) { return hnf_with_transform(m).h; }

std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
  HnfResult r = hnf_with_transform(m);
  int nz = static_cast<int>(r.pivot_rows.size());
  std::vector<IntVec> basis;
  for (int j = nz; j < m.cols; ++j) basis.push_back(r.u.col(j));
  return basis;
}

IntMat inverse_unimodular(const IntMat& u) {
  if (u.rows != u.cols) throw std::invalid_argument("inverse_unimodular: not square");
  const int n = u.rows;
  Int d = determinant(u);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: |det| != 1");
  // adjugate via cofactors; n <= 5 keeps this cheap
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = u.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = d == 1 ? cof : Int(-cof);
    }
  return inv;
}

IntVec apply(const AffUnimodMap& f, const IntVec& p) {
  return add(mul(f.linear, p), f.translation);
}

AffUnimodMap compose(const AffUnimodMap& f, const AffUnimodMap& g) {
  return AffUnimodMap{f.linear * g.linear, add(mul(f.linear, g.translation), f.translation)};
}

AffUnimodMap inverse(const AffUnimodMap& f) {
  IntMat inv = inverse_unimodular(f.linear);
  return AffUnimodMap{inv, neg(mul(inv, f.translation))};
}

AffUnimodMap random_unimodular(int dim, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  IntMat u = IntMat::identity(dim);
  const int ops = 6 + static_cast<int>(rng() % 3);
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng() % dim);
    int j = static_cast<int>(rng() % dim);
    switch (rng() % 4) {
      case 0:
      case 1: { // row_i += m * row_j, m in {-1, +1}
        if (i == j) break;
        Int mfac = (rng() % 2 == 0) ? 1 : -1;
        for (int c = 0; c < dim; ++c) u.at(i, c) += mfac * u.at(j, c);
        break;
      }
      case 2: { // swap rows
        if (i == j) break;
        for (int c = 0; c < dim; ++c) std::swap(u.at(i, c), u.at(j, c));
        break;
      }
      case 3: { // negate a row
        for (int c = 0; c < dim; ++c) u.at(i, c) = -u.at(i, c);
        break;
      }
    }
  }
  IntVec t(dim);
  for (int i = 0; i < dim; ++i) t[i] = Int(static_cast<long>(rng() % 9)) - 4;
  return AffUnimodMap{u, t};
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

} // namespace latwidth
