#include "latwidth/width.hpp"

#include <algorithm>
#include <map>

namespace latwidth {

namespace {

Int ceil_div(const Int& a, const Int& b) { // b > 0
  return -floor_div(-a, b);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// deduplicated difference directions: one entry per primitive direction,
// scaled by the largest multiplier occurring among vertex differences
std::vector<IntVec> difference_directions(const Polytope& p) {
  std::map<IntVec, Int> longest;
  const auto& vs = p.vertices;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      IntVec d = sub(vs[i], vs[j]);
      Int m = content(d);
      IntVec prim = make_primitive(d);
      auto it = longest.find(prim);
      if (it == longest.end()) longest.emplace(std::move(prim), m);
      else if (m > it->second) it->second = m;
    }
  std::vector<IntVec> out;
  out.reserve(longest.size());
  for (const auto& [prim, m] : longest) out.push_back(scale(prim, m));
  return out;
}

// |l_j| <= w0 * sum_i |B^-1_ij| for d independent difference columns B,
// chosen greedily to maximize the Gram determinant
void analytic_box(const std::vector<IntVec>& dirs, int d, const Int& w0, IntVec& lo,
                  IntVec& hi) {
  std::vector<IntVec> chosen;
  for (int round = 0; round < d; ++round) {
    const IntVec* best = nullptr;
    Int best_gram = -1;
    for (const IntVec& c : dirs) {
      std::vector<IntVec> trial = chosen;
      trial.push_back(c);
      const int k = static_cast<int>(trial.size());
      IntMat gram(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram.at(i, j) = dot(trial[i], trial[j]);
      Int g = determinant(gram);
      if (g > best_gram) {
        best_gram = g;
        best = &c;
      }
    }
    chosen.push_back(*best);
  }
  IntMat b = IntMat::from_cols(chosen);
  Int det = determinant(b);
  Int adet = abs_int(det);
  lo.assign(d, 0);
  hi.assign(d, 0);
  for (int j = 0; j < d; ++j) {
    Int s = 0;
    for (int i = 0; i < d; ++i) {
      // |B^-1_ij| = |minor(j, i)| / |det|
      IntMat minor(d - 1, d - 1);
      for (int r = 0, rr = 0; r < d; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < d; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = b.at(r, c);
        }
        ++rr;
      }
      s += abs_int(determinant(minor));
    }
    hi[j] = floor_div(w0 * s, adet);
    lo[j] = -hi[j];
  }
}

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

// exact rational vertex enumeration of { a . l <= b } by facet-subset
// intersection; returns false when the subset count exceeds the cap
bool polar_vertex_box(const std::vector<std::pair<IntVec, Int>>& cons, int d, IntVec& lo,
                      IntVec& hi) {
  const int m = static_cast<int>(cons.size());
  if (m < d) return false;
  double subsets = 1;
  for (int i = 0; i < d; ++i) subsets = subsets * (m - i) / (i + 1);
  if (subsets > 300000.0) return false;

  bool any = false;
  RatVec vlo(d), vhi(d);
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  do {
    IntMat a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a.at(i, j) = cons[idx[i]].first[j];
    Int det = determinant(a);
    if (det == 0) continue;
    RatVec ell(d);
    for (int j = 0; j < d; ++j) {
      IntMat aj = a;
      for (int i = 0; i < d; ++i) aj.at(i, j) = cons[idx[i]].second;
      ell[j] = make_rat(determinant(aj), det);
    }
    bool feasible = true;
    for (const auto& [cv, cb] : cons) {
      Rat s = 0;
      for (int j = 0; j < d; ++j) s += Rat(cv[j]) * ell[j];
      if (s > Rat(cb)) { feasible = false; break; }
    }
    if (!feasible) continue;
    if (!any) {
      vlo = ell;
      vhi = ell;
      any = true;
    } else {
      for (int j = 0; j < d; ++j) {
        if (ell[j] < vlo[j]) vlo[j] = ell[j];
        if (ell[j] > vhi[j]) vhi[j] = ell[j];
      }
    }
  } while (next_combination(idx, m));

  if (!any) { // only l = 0 feasible or empty
    lo.assign(d, 0);
    hi.assign(d, 0);
    return true;
  }
  lo.resize(d);
  hi.resize(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = rat_ceil(vlo[j]);
    hi[j] = rat_floor(vhi[j]);
  }
  return true;
}

// integer points of { a . l <= b } inside [lo, hi]: odometer on the first
// d-1 coordinates, exact interval on the last
template <typename Fn>
void sweep_candidates(const std::vector<std::pair<IntVec, Int>>& cons, const IntVec& lo,
                      const IntVec& hi, Fn&& fn) {
  const int d = static_cast<int>(lo.size());
  for (int j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return;
  const int last = d - 1;
  IntVec x = lo;
  for (;;) {
    bool feasible = true;
    Int zlo = lo[last], zhi = hi[last];
    for (const auto& [a, b] : cons) {
      Int partial = 0;
      for (int j = 0; j < last; ++j) partial += a[j] * x[j];
      const Int& al = a[last];
      if (al == 0) {
        if (partial > b) { feasible = false; break; }
      } else if (al > 0) {
        Int ub = floor_div(b - partial, al);
        if (ub < zhi) zhi = ub;
      } else {
        Int lb = ceil_div(partial - b, -al);
        if (lb > zlo) zlo = lb;
      }
      if (zlo > zhi) { feasible = false; break; }
    }
    if (feasible) {
      for (Int z = zlo; z <= zhi; ++z) {
        x[last] = z;
        fn(x);
      }
    }
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
}

} // namespace

Int width_along(const Polytope& p, const IntVec& functional) {
  if (is_zero(functional)) throw std::invalid_argument("width_along: zero functional");
  if (static_cast<int>(functional.size()) != p.ambient)
    throw std::invalid_argument("width_along: dimension mismatch");
  Int mn, mx;
  bool first = true;
  for (const IntVec& v : p.vertices) {
    Int s = dot(functional, v);
    if (first) {
      mn = s;
      mx = s;
      first = false;
    } else {
      if (s < mn) mn = s;
      if (s > mx) mx = s;
    }
  }
  return mx - mn;
}

PolarBox difference_body_polar_box(const Polytope& p, const Int& w0) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("difference_body_polar_box: polytope not full-dimensional");
  if (w0 < 0) throw std::invalid_argument("difference_body_polar_box: negative bound");
  PolarBox pb;
  const int d = p.ambient;
  std::vector<IntVec> dirs = difference_directions(p);
  for (IntVec& a : dirs) pb.constraints.emplace_back(std::move(a), w0);

  std::vector<IntVec> raw;
  raw.reserve(pb.constraints.size());
  for (const auto& [a, b] : pb.constraints) raw.push_back(a);
  analytic_box(raw, d, w0, pb.box_lo, pb.box_hi);

  // fall back to the rational polar-vertex box only when the cheap bound
  // leaves too many points to sweep
  Int points = 1;
  for (int j = 0; j < d && points <= 4096; ++j)
    points *= pb.box_hi[j] - pb.box_lo[j] + 1;
  if (points > 4096) {
    IntVec plo, phi;
    if (polar_vertex_box(pb.constraints, d, plo, phi)) {
      for (int j = 0; j < d; ++j) {
        if (plo[j] > pb.box_lo[j]) pb.box_lo[j] = plo[j];
        if (phi[j] < pb.box_hi[j]) pb.box_hi[j] = phi[j];
      }
    }
  }
  return pb;
}

WidthCertificate lattice_width(const Polytope& p) { return lattice_width(p, Int(-1)); }

WidthCertificate lattice_width(const Polytope& p, const Int& upper_bound_hint) {
  WidthCertificate cert;
  if (p.dim < p.ambient) {
    // degenerate by convention: width 0 along an affine-hull normal
    cert.value = 0;
    cert.minimizer = p.equations.front().normal;
    for (const HullEq& e : p.equations)
      if (lex_less(e.normal, cert.minimizer)) cert.minimizer = e.normal;
    cert.upper_bound_used = 0;
    cert.candidate_count = 0;
    return cert;
  }

  const int d = p.ambient;
  Int w0;
  IntVec w0_func;
  bool have = false;
  auto consider = [&](const IntVec& f) {
    Int w = width_along(p, f);
    if (!have || w < w0) {
      w0 = w;
      w0_func = f;
      have = true;
    }
  };
  for (int j = 0; j < d; ++j) {
    IntVec e(d);
    e[j] = 1;
    consider(e);
  }
  for (const Facet& f : p.facets) consider(f.normal);
  if (upper_bound_hint >= 0 && upper_bound_hint < w0) w0 = upper_bound_hint;

  PolarBox pb = difference_body_polar_box(p, w0);

  bool best_set = false;
  Int best_value;
  IntVec best_func;
  long long count = 0;
  sweep_candidates(pb.constraints, pb.box_lo, pb.box_hi, [&](const IntVec& l) {
    // sign symmetry: first nonzero entry positive; only primitive functionals
    int fz = -1;
    for (int j = 0; j < d; ++j)
      if (l[j] != 0) { fz = j; break; }
    if (fz < 0 || l[fz] < 0) return;
    if (content(l) != 1) return;
    Int w = width_along(p, l);
    ++count;
    if (!best_set || w < best_value || (w == best_value && lex_less(l, best_func))) {
      best_value = w;
      best_func = l;
      best_set = true;
    }
  });

  if (!best_set)
    throw std::logic_error("lattice_width: empty candidate set (invalid upper bound hint?)");
  cert.value = best_value;
  cert.minimizer = best_func;
  cert.upper_bound_used = w0;
  cert.candidate_count = count;
  if (width_along(p, cert.minimizer) != cert.value)
    throw std::logic_error("lattice_width: certificate failed its soundness re-check");
  return cert;
}

} // namespace latwidth
