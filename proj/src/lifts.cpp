#include "latwidth/lifts.hpp"

#include "latwidth/canon.hpp"
#include "latwidth/width.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latwidth {

namespace {

IntVec with_last(const IntVec& x, const Int& y) {
  IntVec v = x;
  v.push_back(y);
  return v;
}

IntVec drop_last(const IntVec& x) { return IntVec(x.begin(), x.end() - 1); }

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::string face_label(const Polytope& face) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) os << " ";
    os << to_string(face.vertices[i]);
  }
  os << "}";
  return os.str();
}

} // namespace

Polytope project_last(const Polytope& p) {
  if (p.ambient < 2) throw std::invalid_argument("project_last: ambient dimension < 2");
  std::vector<IntVec> vs;
  vs.reserve(p.vertices.size());
  for (const IntVec& v : p.vertices) vs.push_back(drop_last(v));
  return hull(vs);
}

Lift lift_of(const Polytope& total) {
  Lift l;
  l.total = total;
  l.base = project_last(total);
  if (total.vertices.size() == l.base.vertices.size()) {
    std::vector<Int> heights(l.base.vertices.size());
    std::vector<int> cover(l.base.vertices.size(), 0);
    bool tight = true;
    for (const IntVec& w : total.vertices) {
      IntVec x = drop_last(w);
      auto it = std::find(l.base.vertices.begin(), l.base.vertices.end(), x);
      if (it == l.base.vertices.end()) {
        tight = false;
        break;
      }
      size_t i = it - l.base.vertices.begin();
      heights[i] = w.back();
      ++cover[i];
    }
    if (tight)
      for (int c : cover)
        if (c != 1) tight = false;
    if (tight) {
      l.tight = true;
      l.heights = std::move(heights);
    }
  }
  return l;
}

Lift tight_lift(const Polytope& base, const std::vector<Int>& heights) {
  if (heights.size() != base.vertices.size())
    throw std::invalid_argument("tight_lift: one height per base vertex required");
  std::vector<IntVec> pts;
  pts.reserve(heights.size());
  for (size_t i = 0; i < heights.size(); ++i)
    pts.push_back(with_last(base.vertices[i], heights[i]));
  Lift l;
  l.total = hull(pts);
  l.base = base;
  l.tight = true;
  l.heights = heights;
  return l;
}

PhLift construct_P_h(const Polytope& q, const IntVec& v, const Int& h) {
  if (h == 0) throw std::invalid_argument("construct_P_h: h must be nonzero");
  auto vit = std::find(q.vertices.begin(), q.vertices.end(), v);
  if (vit == q.vertices.end()) throw std::invalid_argument("construct_P_h: v is not a vertex");
  if (!interior_lattice_points(q).empty())
    throw std::invalid_argument("construct_P_h: base polytope is not hollow");

  std::vector<IntVec> others;
  for (const IntVec& w : q.vertices)
    if (w != v) others.push_back(w);
  Polytope qprime = hull(others);
  if (qprime.dim != q.dim)
    throw std::invalid_argument("construct_P_h: base is a pyramid with apex v");

  Int period = 1;
  for (int k = 1; k < q.dim; ++k) {
    for (const Face& f : faces(q, k)) {
      std::vector<IntVec> fverts;
      bool has_v = false;
      for (int id : f.vertex_ids) {
        fverts.push_back(q.vertices[id]);
        if (q.vertices[id] == v) has_v = true;
      }
      if (!has_v) continue;
      Polytope fp = hull(fverts);
      if (interior_lattice_points(fp).empty()) continue; // hollow face
      auto pyr = pyramid_with_apex(fp, v);
      if (!pyr)
        throw std::invalid_argument(
            "construct_P_h: face " + face_label(fp) +
            " containing v is neither hollow nor a pyramid with apex v");
      period = lcm_int(period, pyr->apex_distance);
    }
  }

  std::vector<Int> heights(q.vertices.size(), Int(0));
  heights[vit - q.vertices.begin()] = h;
  PhLift out{tight_lift(q, heights), period};
  if (size(out.lift.total) > size(q))
    throw std::logic_error("construct_P_h: lift gained lattice points over the base");
  return out;
}

Polytope family_reeve(const Int& r) {
  if (r < 1) throw std::invalid_argument("family_reeve: r >= 1 required");
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {Int(1), Int(1), r}});
}

Polytope family_hz_base() {
  return hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 2, 3}});
}

Polytope family_bbk(const Int& n, const Int& a) {
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument("family_bbk: N must be a positive multiple of 4");
  if (boost::multiprecision::gcd(a, n) != 1)
    throw std::invalid_argument("family_bbk: a must be coprime to N");
  Int half = n / 2;
  return hull({{1, 0, 0, 0},
               {0, 1, 0, 0},
               {0, 0, 1, 0},
               {0, 0, 0, 1},
               {Int(2), half - 1, a, half - a}});
}

Polytope product_with_segment(const Polytope& p, const Int& w) {
  if (w < 1) throw std::invalid_argument("product_with_segment: W >= 1 required");
  std::vector<IntVec> pts;
  for (const IntVec& v : p.vertices) {
    pts.push_back(with_last(v, 0));
    pts.push_back(with_last(v, w));
  }
  return hull(pts);
}

Polytope bipyramid_lift(const Polytope& q, const IntVec& u, const IntVec& v, const Int& h) {
  if (h < 1) throw std::invalid_argument("bipyramid_lift: h >= 1 required");
  if (!contains(q, u) || !contains(q, v))
    throw std::invalid_argument("bipyramid_lift: apexes must be lattice points of the base");
  for (const Facet& f : q.facets)
    if (dot(f.normal, u) == f.offset && dot(f.normal, v) == f.offset)
      throw std::invalid_argument("bipyramid_lift: apexes share a facet of the base");
  std::vector<IntVec> pts;
  for (const IntVec& w : q.vertices) pts.push_back(with_last(w, 0));
  pts.push_back(with_last(u, h));
  pts.push_back(with_last(v, -h));
  return hull(pts);
}

Polytope extend_by_one_point(const Polytope& p, const IntVec& width_functional) {
  if (p.ambient < 2)
    throw std::invalid_argument("extend_by_one_point: ambient dimension >= 2 required");
  if (is_zero(width_functional))
    throw std::invalid_argument("extend_by_one_point: zero functional");
  Int lo = dot(width_functional, p.vertices[0]);
  Int hi = lo;
  for (const IntVec& v : p.vertices) {
    Int s = dot(width_functional, v);
    if (s < lo) lo = s;
    if (s > hi) hi = s;
  }
  const int d = p.ambient;
  IntVec blo(d), bhi(d);
  for (int j = 0; j < d; ++j) {
    blo[j] = p.vertices[0][j];
    bhi[j] = p.vertices[0][j];
    for (const IntVec& v : p.vertices) {
      if (v[j] < blo[j]) blo[j] = v[j];
      if (v[j] > bhi[j]) bhi[j] = v[j];
    }
  }
  // deterministic: smallest box inflation, then lex order within the slab
  IntVec q;
  for (Int radius = 1; q.empty(); ++radius) {
    IntVec x(d);
    for (int j = 0; j < d; ++j) x[j] = blo[j] - radius;
    for (;;) {
      Int s = dot(width_functional, x);
      if (s >= lo && s <= hi && !contains(p, x)) {
        q = x;
        break;
      }
      int j = d - 1;
      while (j >= 0) {
        if (x[j] < bhi[j] + radius) {
          ++x[j];
          break;
        }
        x[j] = blo[j] - radius;
        --j;
      }
      if (j < 0) break;
    }
  }

  std::vector<IntVec> pts = p.points;
  pts.push_back(q);
  Polytope grown = hull(pts);
  const long target = size(p) + 1;
  while (size(grown) > target) {
    const IntVec* victim = nullptr;
    for (const IntVec& w : grown.vertices)
      if (!contains(p, w) && (victim == nullptr || lex_less(w, *victim))) victim = &w;
    if (victim == nullptr)
      throw std::logic_error("extend_by_one_point: no removable vertex outside the base");
    std::vector<IntVec> rest;
    for (const IntVec& w : grown.points)
      if (w != *victim) rest.push_back(w);
    grown = hull(rest);
  }
  return grown;
}

std::vector<TightLiftClass> enumerate_tight_lifts(const Polytope& q, const Int& height_bound,
                                                  long size_bound) {
  if (height_bound < 1) throw std::invalid_argument("enumerate_tight_lifts: H >= 1 required");
  const int nv = static_cast<int>(q.vertices.size());
  if (size_bound < nv)
    throw std::invalid_argument("enumerate_tight_lifts: size bound below vertex count");

  // integer-affine height shifts h_v + a.v + c form the column lattice of
  // [v_i | 1]; reduce against its column HNF, then quotient the sign flip
  std::vector<IntVec> rows;
  for (const IntVec& v : q.vertices) {
    IntVec r = v;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  HnfResult hr = hnf_with_transform(IntMat::from_rows(rows));
  const int npiv = static_cast<int>(hr.pivot_rows.size());
  auto reduce = [&](IntVec x) {
    for (int j = 0; j < npiv; ++j) {
      int r = hr.pivot_rows[j];
      Int piv = hr.h.at(r, j);
      Int qq = floor_div(x[r], piv);
      if (qq == 0) continue;
      for (int i = 0; i < nv; ++i) x[i] -= qq * hr.h.at(i, j);
    }
    return x;
  };
  auto rep_of = [&](const IntVec& x) {
    IntVec r1 = reduce(x);
    IntVec r2 = reduce(neg(x));
    return lex_less(r2, r1) ? r2 : r1;
  };

  std::map<IntVec, TightLiftClass> classes;
  IntVec hvec(nv, Int(0));
  for (int i = 1; i < nv; ++i) hvec[i] = -height_bound;
  for (;;) {
    IntVec rep = rep_of(hvec);
    if (classes.find(rep) == classes.end()) {
      Lift lift = tight_lift(q, std::vector<Int>(rep.begin(), rep.end()));
      long sz = size(lift.total);
      if (sz <= size_bound) {
        TightLiftClass cls;
        cls.size = sz;
        cls.width = lattice_width(lift.total).value;
        cls.dim = lift.total.dim;
        cls.rep = std::move(lift);
        classes.emplace(std::move(rep), std::move(cls));
      } else {
        classes.emplace(std::move(rep), TightLiftClass{Lift{}, -1, Int(0), -1});
      }
    }
    int i = nv - 1;
    while (i >= 1) {
      if (hvec[i] < height_bound) {
        ++hvec[i];
        break;
      }
      hvec[i] = -height_bound;
      --i;
    }
    if (i < 1) break;
  }

  std::vector<TightLiftClass> out;
  for (auto& [rep, cls] : classes)
    if (cls.size >= 0) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const TightLiftClass& a, const TightLiftClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.rep.heights.begin(), a.rep.heights.end(),
                                        b.rep.heights.begin(), b.rep.heights.end());
  });
  return out;
}

Int same_dimensional_lift_count(const Polytope& simplex) {
  if (static_cast<int>(simplex.vertices.size()) != simplex.dim + 1)
    throw std::invalid_argument("same_dimensional_lift_count: input is not a simplex");
  Polytope t = simplex.dim < simplex.ambient ? restrict_to_affine_hull(simplex) : simplex;
  std::vector<IntVec> diffs;
  for (size_t i = 1; i < t.vertices.size(); ++i)
    diffs.push_back(sub(t.vertices[i], t.vertices[0]));
  HnfResult hr = hnf_with_transform(IntMat::from_cols(diffs));
  Int index = 1;
  for (int j = 0; j < static_cast<int>(hr.pivot_rows.size()); ++j)
    index *= hr.h.at(hr.pivot_rows[j], j);
  return index;
}

Rat fiber_volume_constant(const Polytope& q, const IntVec& interior_point) {
  if (q.dim != q.ambient)
    throw std::invalid_argument("fiber_volume_constant: base must be full-dimensional");
  if (!in_relative_interior(q, interior_point))
    throw std::invalid_argument("fiber_volume_constant: point is not interior");
  const int k = q.ambient;
  Rat best = -1;
  for (const Facet& f : q.facets) {
    Int denom = f.offset - dot(f.normal, interior_point); // > 0
    RatVec w(k);
    for (int j = 0; j < k; ++j) w[j] = make_rat(f.normal[j], denom);
    Rat c0 = 1;
    RatVec coeff(k);
    for (int j = 0; j < k; ++j) {
      c0 += w[j] * Rat(interior_point[j]);
      coeff[j] = -w[j];
    }
    Rat val = integrate_affine(q, c0, coeff);
    if (val > best) best = val;
  }
  Int dfact = 1;
  for (int i = 2; i <= k + 1; ++i) dfact *= i;
  return best * Rat(dfact);
}

Rat fiber_length(const Polytope& total, const IntVec& base_point) {
  const int d = total.ambient;
  if (static_cast<int>(base_point.size()) != d - 1)
    throw std::invalid_argument("fiber_length: base point dimension mismatch");
  bool has_lo = false, has_hi = false;
  Rat ylo, yhi;
  for (const HullEq& e : total.equations) {
    Int partial = 0;
    for (int j = 0; j + 1 < d; ++j) partial += e.normal[j] * base_point[j];
    const Int& a = e.normal[d - 1];
    if (a == 0) {
      if (partial != e.value) return -1;
    } else {
      Rat y = make_rat(e.value - partial, a);
      if (!has_lo || y > ylo) { ylo = y; has_lo = true; }
      if (!has_hi || y < yhi) { yhi = y; has_hi = true; }
    }
  }
  for (const Facet& f : total.facets) {
    Int partial = 0;
    for (int j = 0; j + 1 < d; ++j) partial += f.normal[j] * base_point[j];
    const Int& a = f.normal[d - 1];
    if (a == 0) {
      if (partial > f.offset) return -1;
    } else {
      Rat y = make_rat(f.offset - partial, a);
      if (a > 0) {
        if (!has_hi || y < yhi) { yhi = y; has_hi = true; }
      } else {
        if (!has_lo || y > ylo) { ylo = y; has_lo = true; }
      }
    }
  }
  if (!has_lo || !has_hi || ylo > yhi) return -1;
  return yhi - ylo;
}

} // namespace latwidth
