#include "latwidth/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latwidth {

namespace {

Int ceil_div(const Int& a, const Int& b) { // b > 0
  return -floor_div(-a, b);
}

// generalized cross product: the integer normal of k-1 vectors in Z^k,
// computed by cofactor expansion; zero iff the vectors are dependent
IntVec cross(const std::vector<IntVec>& vs, int k) {
  IntVec n(k);
  if (k == 1) {
    n[0] = 1;
    return n;
  }
  if (k == 2) {
    n[0] = -vs[0][1];
    n[1] = vs[0][0];
    return n;
  }
  if (k == 3) {
    n[0] = vs[0][1] * vs[1][2] - vs[0][2] * vs[1][1];
    n[1] = vs[0][2] * vs[1][0] - vs[0][0] * vs[1][2];
    n[2] = vs[0][0] * vs[1][1] - vs[0][1] * vs[1][0];
    return n;
  }
  for (int j = 0; j < k; ++j) {
    IntMat minor(k - 1, k - 1);
    for (int r = 0; r < k - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < k; ++c) {
        if (c == j) continue;
        minor.at(r, cc++) = vs[r][c];
      }
    }
    Int d = determinant(minor);
    n[j] = (j % 2 == 0) ? d : Int(-d);
  }
  return n;
}

bool independent_of(const std::vector<IntVec>& basis, const IntVec& v) {
  std::vector<IntVec> rows = basis;
  rows.push_back(v);
  return rank(IntMat::from_rows(rows)) == static_cast<int>(rows.size());
}

// next size-k index combination in lexicographic order
bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void enumerate_lattice_points(const Polytope& p, std::vector<IntVec>& out) {
  const int d = p.ambient;
  IntVec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = p.vertices[0][j];
    hi[j] = p.vertices[0][j];
    for (const IntVec& v : p.vertices) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  IntVec x = lo;
  const int last = d - 1;
  for (;;) {
    // last coordinate: exact interval from equations and facets
    bool feasible = true;
    bool has_zlo = false, has_zhi = false;
    Int zlo, zhi;
    auto tighten_lo = [&](const Int& v) {
      if (!has_zlo || v > zlo) { zlo = v; has_zlo = true; }
    };
    auto tighten_hi = [&](const Int& v) {
      if (!has_zhi || v < zhi) { zhi = v; has_zhi = true; }
    };
    for (const HullEq& e : p.equations) {
      Int partial = 0;
      for (int j = 0; j < last; ++j) partial += e.normal[j] * x[j];
      const Int& a = e.normal[last];
      if (a == 0) {
        if (partial != e.value) { feasible = false; break; }
      } else {
        Int num = e.value - partial;
        if (num % a != 0) { feasible = false; break; }
        Int z = num / a;
        tighten_lo(z);
        tighten_hi(z);
      }
    }
    if (feasible) {
      for (const Facet& f : p.facets) {
        Int partial = 0;
        for (int j = 0; j < last; ++j) partial += f.normal[j] * x[j];
        const Int& a = f.normal[last];
        if (a == 0) {
          if (partial > f.offset) { feasible = false; break; }
        } else if (a > 0) {
          tighten_hi(floor_div(f.offset - partial, a));
        } else {
          tighten_lo(ceil_div(partial - f.offset, -a));
        }
      }
    }
    if (feasible && has_zlo && has_zhi && zlo <= zhi) {
      for (Int z = zlo; z <= zhi; ++z) {
        IntVec q = x;
        q[last] = z;
        out.push_back(std::move(q));
      }
    }
    // odometer over the first d-1 axes
    int j = last - 1;
    while (j >= 0) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
}

} // namespace

Polytope hull(const std::vector<IntVec>& pts) {
  if (pts.empty()) throw std::invalid_argument("hull: empty point set");
  const int d = static_cast<int>(pts[0].size());
  if (d < 1 || d > 5) throw std::invalid_argument("hull: ambient dimension must be 1..5");
  std::set<IntVec> dedup;
  for (const IntVec& p : pts) {
    if (static_cast<int>(p.size()) != d) throw std::invalid_argument("hull: mixed dimensions");
    dedup.insert(p);
  }
  std::vector<IntVec> s(dedup.begin(), dedup.end());
  const int n = static_cast<int>(s.size());

  Polytope poly;
  poly.ambient = d;
  const IntVec& p0 = s[0];

  std::vector<IntVec> basis;
  for (int i = 1; i < n; ++i) {
    IntVec v = sub(s[i], p0);
    if (static_cast<int>(basis.size()) < d && independent_of(basis, v)) basis.push_back(v);
  }
  const int k = static_cast<int>(basis.size());
  poly.dim = k;

  if (k == 0) {
    poly.vertices = {p0};
    poly.points = {p0};
    for (int j = 0; j < d; ++j) {
      IntVec e(d);
      e[j] = 1;
      poly.equations.push_back(HullEq{e, p0[j]});
    }
    return poly;
  }

  // affine hull equations and restricted coordinates
  IntMat to_sub, from_sub;
  bool degenerate = k < d;
  if (degenerate) {
    std::vector<IntVec> normals = integer_kernel_basis(IntMat::from_rows(basis));
    for (IntVec& u : normals) {
      u = sign_normalize(u);
      poly.equations.push_back(HullEq{u, dot(u, p0)});
    }
    std::sort(poly.equations.begin(), poly.equations.end(),
              [](const HullEq& a, const HullEq& b) {
                return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.value < b.value;
              });
    std::vector<IntVec> eq_rows;
    for (const HullEq& e : poly.equations) eq_rows.push_back(e.normal);
    HnfResult hr = hnf_with_transform(IntMat::from_rows(eq_rows));
    const int nz = static_cast<int>(hr.pivot_rows.size());
    std::vector<IntVec> kernel_cols;
    for (int j = nz; j < d; ++j) kernel_cols.push_back(hr.u.col(j));
    from_sub = IntMat::from_cols(kernel_cols);
    IntMat uinv = inverse_unimodular(hr.u);
    to_sub = IntMat(k, d);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < d; ++j) to_sub.at(i, j) = uinv.at(nz + i, j);
  }

  auto to_work = [&](const IntVec& p) -> IntVec {
    return degenerate ? mul(to_sub, sub(p, p0)) : p;
  };
  std::vector<IntVec> work(n);
  for (int i = 0; i < n; ++i) work[i] = to_work(s[i]);

  // exhaustive supporting-hyperplane search over k-subsets
  struct Plane {
    IntVec normal;
    Int offset;
    bool operator<(const Plane& o) const {
      return normal != o.normal ? lex_less(normal, o.normal) : offset < o.offset;
    }
  };
  std::map<Plane, int> seen; // 0 rejected, 1 facet as-is, -1 facet negated
  std::vector<Plane> work_facets;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (n >= k) {
    do {
      std::vector<IntVec> diffs;
      diffs.reserve(k - 1);
      for (int i = 1; i < k; ++i) diffs.push_back(sub(work[idx[i]], work[idx[0]]));
      IntVec nrm = cross(diffs, k);
      if (is_zero(nrm)) continue;
      nrm = make_primitive(nrm);
      Int off = dot(nrm, work[idx[0]]);
      IntVec key_n = sign_normalize(nrm);
      Int key_off = (key_n == nrm) ? off : Int(-off);
      auto it = seen.find(Plane{key_n, key_off});
      if (it != seen.end()) continue;
      bool above = false, below = false;
      for (const IntVec& q : work) {
        Int v = dot(key_n, q) - key_off;
        if (v > 0) above = true;
        else if (v < 0) below = true;
        if (above && below) break;
      }
      int verdict = 0;
      if (!(above && below)) verdict = above ? -1 : 1;
      seen.emplace(Plane{key_n, key_off}, verdict);
      if (verdict == 1) work_facets.push_back(Plane{key_n, key_off});
      else if (verdict == -1) work_facets.push_back(Plane{neg(key_n), Int(-key_off)});
    } while (next_combination(idx, n));
  }

  // vertices: points whose tight facet normals span the restricted space
  std::vector<int> vertex_ids;
  for (int i = 0; i < n; ++i) {
    std::vector<IntVec> tight;
    for (const Plane& f : work_facets)
      if (dot(f.normal, work[i]) == f.offset) tight.push_back(f.normal);
    if (static_cast<int>(tight.size()) >= k && rank(IntMat::from_rows(tight)) == k)
      vertex_ids.push_back(i);
  }
  for (int i : vertex_ids) poly.vertices.push_back(s[i]);
  std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less);

  for (const Plane& f : work_facets) {
    IntVec amb(d);
    if (degenerate) {
      for (int j = 0; j < d; ++j) {
        Int v = 0;
        for (int i = 0; i < k; ++i) v += f.normal[i] * to_sub.at(i, j);
        amb[j] = v;
      }
      poly.facets.push_back(Facet{amb, dot(amb, p0) + f.offset});
    } else {
      poly.facets.push_back(Facet{f.normal, f.offset});
    }
  }
  std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.offset < b.offset;
  });

  enumerate_lattice_points(poly, poly.points);
  return poly;
}

const std::vector<IntVec>& lattice_points(const Polytope& p) { return p.points; }

std::vector<IntVec> interior_lattice_points(const Polytope& p) {
  std::vector<IntVec> out;
  for (const IntVec& q : p.points) {
    bool strict = true;
    for (const Facet& f : p.facets)
      if (dot(f.normal, q) == f.offset) { strict = false; break; }
    if (strict) out.push_back(q);
  }
  return out;
}

long size(const Polytope& p) { return static_cast<long>(p.points.size()); }

bool contains(const Polytope& p, const IntVec& x) {
  for (const HullEq& e : p.equations)
    if (dot(e.normal, x) != e.value) return false;
  for (const Facet& f : p.facets)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

bool in_relative_interior(const Polytope& p, const IntVec& x) {
  for (const HullEq& e : p.equations)
    if (dot(e.normal, x) != e.value) return false;
  for (const Facet& f : p.facets)
    if (dot(f.normal, x) >= f.offset) return false;
  return true;
}

std::vector<Face> faces(const Polytope& p, int k) {
  if (k < 0 || k >= p.dim) throw std::invalid_argument("faces: need 0 <= k < dim");
  const int nv = static_cast<int>(p.vertices.size());
  std::vector<std::vector<int>> facet_sets;
  for (const Facet& f : p.facets) {
    std::vector<int> t;
    for (int i = 0; i < nv; ++i)
      if (dot(f.normal, p.vertices[i]) == f.offset) t.push_back(i);
    facet_sets.push_back(std::move(t));
  }
  std::set<std::vector<int>> all(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<int>> queue(all.begin(), all.end());
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const std::vector<int>& fs : facet_sets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                            std::back_inserter(inter));
      if (inter.empty() || inter == cur) continue;
      if (all.insert(inter).second) queue.push_back(std::move(inter));
    }
  }
  std::vector<Face> out;
  for (const std::vector<int>& vs : all) {
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < vs.size(); ++i)
      diffs.push_back(sub(p.vertices[vs[i]], p.vertices[vs[0]]));
    int fdim = diffs.empty() ? 0 : rank(IntMat::from_rows(diffs));
    if (fdim == k) out.push_back(Face{vs, fdim});
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.vertex_ids < b.vertex_ids; });
  return out;
}

std::optional<PyramidInfo> pyramid_with_apex(const Polytope& p, const IntVec& apex) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), apex);
  if (it == p.vertices.end()) throw std::invalid_argument("pyramid_with_apex: not a vertex");
  if (p.dim <= 0) return std::nullopt;

  std::vector<IntVec> others;
  for (const IntVec& v : p.vertices)
    if (v != apex) others.push_back(v);

  const bool degenerate = p.dim < p.ambient;
  RestrictedCoords rc;
  if (degenerate) rc = restricted_coords(p);
  auto to_work = [&](const IntVec& q) -> IntVec {
    return degenerate ? mul(rc.to_sub, sub(q, rc.origin)) : q;
  };
  const int k = p.dim;

  std::vector<IntVec> diffs;
  IntVec o0 = to_work(others[0]);
  for (size_t i = 1; i < others.size(); ++i) diffs.push_back(sub(to_work(others[i]), o0));
  if (!diffs.empty() && rank(IntMat::from_rows(diffs)) != k - 1) return std::nullopt;
  if (diffs.empty() && k != 1) return std::nullopt;

  IntVec u;
  if (diffs.empty()) {
    u = IntVec(1);
    u[0] = 1;
  } else {
    std::vector<IntVec> kernel = integer_kernel_basis(IntMat::from_rows(diffs));
    if (kernel.size() != 1) return std::nullopt;
    u = kernel[0];
  }
  Int c = dot(u, o0);
  Int m = dot(u, to_work(apex)) - c;
  if (m == 0) return std::nullopt;
  if (m < 0) m = -m;
  return PyramidInfo{hull(others), m};
}

RestrictedCoords restricted_coords(const Polytope& p) {
  if (p.dim >= p.ambient)
    throw std::invalid_argument("restricted_coords: polytope is full-dimensional");
  const int d = p.ambient;
  const int k = p.dim;
  RestrictedCoords rc;
  rc.origin = p.vertices[0];
  if (k == 0) {
    rc.to_sub = IntMat(0, d);
    rc.from_sub = IntMat(d, 0);
    return rc;
  }
  std::vector<IntVec> eq_rows;
  for (const HullEq& e : p.equations) eq_rows.push_back(e.normal);
  HnfResult hr = hnf_with_transform(IntMat::from_rows(eq_rows));
  const int nz = static_cast<int>(hr.pivot_rows.size());
  std::vector<IntVec> kernel_cols;
  for (int j = nz; j < d; ++j) kernel_cols.push_back(hr.u.col(j));
  rc.from_sub = IntMat::from_cols(kernel_cols);
  IntMat uinv = inverse_unimodular(hr.u);
  rc.to_sub = IntMat(k, d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) rc.to_sub.at(i, j) = uinv.at(nz + i, j);
  return rc;
}

Polytope restrict_to_affine_hull(const Polytope& p) {
  RestrictedCoords rc = restricted_coords(p);
  if (p.dim == 0)
    throw std::invalid_argument("restrict_to_affine_hull: zero-dimensional polytope");
  std::vector<IntVec> ys;
  for (const IntVec& v : p.vertices) ys.push_back(mul(rc.to_sub, sub(v, rc.origin)));
  return hull(ys);
}

Polytope transform(const Polytope& p, const AffUnimodMap& f) {
  std::vector<IntVec> vs;
  for (const IntVec& v : p.vertices) vs.push_back(apply(f, v));
  return hull(vs);
}

Int normalized_volume(const Polytope& p) {
  if (p.dim == 0) return 1;
  if (p.dim < p.ambient) return normalized_volume(restrict_to_affine_hull(p));
  Int total = 0;
  for (const std::vector<IntVec>& simplex : triangulate(p)) {
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < simplex.size(); ++i) diffs.push_back(sub(simplex[i], simplex[0]));
    Int d = determinant(IntMat::from_cols(diffs));
    total += d < 0 ? Int(-d) : d;
  }
  return total;
}

std::vector<std::vector<IntVec>> triangulate(const Polytope& p) {
  if (static_cast<int>(p.vertices.size()) == p.dim + 1) return {p.vertices};
  const IntVec& v0 = p.vertices[0];
  std::vector<std::vector<IntVec>> out;
  for (const Facet& f : p.facets) {
    if (dot(f.normal, v0) == f.offset) continue;
    std::vector<IntVec> fverts;
    for (const IntVec& v : p.vertices)
      if (dot(f.normal, v) == f.offset) fverts.push_back(v);
    Polytope fp = hull(fverts);
    for (std::vector<IntVec> s : triangulate(fp)) {
      s.insert(s.begin(), v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Rat integrate_affine(const Polytope& p, const Rat& c0, const RatVec& c) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("integrate_affine: polytope must be full-dimensional");
  Int kfact = 1;
  for (int i = 2; i <= p.dim; ++i) kfact *= i;
  Rat total = 0;
  for (const std::vector<IntVec>& simplex : triangulate(p)) {
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < simplex.size(); ++i) diffs.push_back(sub(simplex[i], simplex[0]));
    Int det = determinant(IntMat::from_cols(diffs));
    if (det < 0) det = -det;
    if (det == 0) continue;
    Rat mean = 0;
    for (const IntVec& v : simplex) {
      Rat g = c0;
      for (size_t j = 0; j < c.size(); ++j) g += c[j] * Rat(v[j]);
      mean += g;
    }
    mean /= Rat(static_cast<int>(simplex.size()));
    total += Rat(det) / Rat(kfact) * mean;
  }
  return total;
}

} // namespace latwidth
