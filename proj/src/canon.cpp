#include "latwidth/canon.hpp"

#include "latwidth/lifts.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latwidth {

namespace {

// Incremental left-unimodular Hermite reduction: u accumulates the row
// transform, `pivots` counts staircase rows. Feeding columns one at a time
// yields, column by column, the canonical Hermite form of the fed prefix,
// which is what makes prefix pruning sound.
struct HermiteState {
  IntMat u;
  int pivots = 0;

  explicit HermiteState(int d) : u(IntMat::identity(d)) {}

  IntVec feed(const IntVec& raw) {
    const int d = u.rows;
    IntVec w = mul(u, raw);
    int t = pivots;
    if (t < d) {
      for (;;) {
        int best = -1;
        for (int i = t; i < d; ++i) {
          if (w[i] == 0) continue;
          if (best < 0 ||
              boost::multiprecision::abs(w[i]) < boost::multiprecision::abs(w[best]))
            best = i;
        }
        if (best < 0) break;
        swap_rows(t, best, w);
        bool clean = true;
        for (int i = t + 1; i < d; ++i) {
          if (w[i] == 0) continue;
          Int q = w[i] / w[t];
          addmul_row(i, t, q, w);
          if (w[i] != 0) clean = false;
        }
        if (clean) break;
      }
      if (w[t] != 0) {
        if (w[t] < 0) negate_row(t, w);
        for (int j = 0; j < t; ++j) {
          Int q = floor_div(w[j], w[t]);
          if (q != 0) addmul_row(j, t, q, w);
        }
        ++pivots;
      }
    }
    return w;
  }

private:
  void swap_rows(int x, int y, IntVec& w) {
    if (x == y) return;
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(x, c), u.at(y, c));
    std::swap(w[x], w[y]);
  }
  void addmul_row(int dst, int src, const Int& q, IntVec& w) {
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) -= q * u.at(src, c);
    w[dst] -= q * w[src];
  }
  void negate_row(int r, IntVec& w) {
    for (int c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
    w[r] = -w[r];
  }
};

struct BestForm {
  bool set = false;
  std::vector<IntVec> cols;
  int anchor = 0;
  std::vector<int> order;
  IntMat transform;
};

// -1 below the incumbent prefix column, 0 equal, +1 above
int compare_col(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

int compare_cols(const std::vector<IntVec>& a, const std::vector<IntVec>& b, size_t upto) {
  for (size_t j = 0; j < upto; ++j) {
    int c = compare_col(a[j], b[j]);
    if (c != 0) return c;
  }
  return 0;
}

// DFS over orderings of the remaining columns. Children are visited in
// ascending column order, pruning is re-derived against the incumbent at
// every node (the incumbent can be replaced mid-search), and leaves do a
// full lexicographic comparison, which keeps the search sound.
void search(const std::vector<IntVec>& diffs, int anchor, const HermiteState& state,
            std::vector<int>& chosen, std::vector<IntVec>& path, BestForm& best) {
  const size_t depth = chosen.size();
  if (depth == diffs.size()) {
    if (!best.set || compare_cols(path, best.cols, path.size()) < 0) {
      best.set = true;
      best.cols = path;
      best.anchor = anchor;
      best.order = chosen;
      best.transform = state.u;
    }
    return;
  }
  std::vector<bool> used(diffs.size(), false);
  for (int i : chosen) used[i] = true;

  struct Cand {
    IntVec col;
    HermiteState st;
    int idx;
  };
  std::vector<Cand> cands;
  for (size_t i = 0; i < diffs.size(); ++i) {
    if (used[i]) continue;
    HermiteState child = state;
    IntVec col = child.feed(diffs[i]);
    cands.push_back(Cand{std::move(col), std::move(child), static_cast<int>(i)});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    int c = compare_col(a.col, b.col);
    return c != 0 ? c < 0 : a.idx < b.idx;
  });

  for (Cand& cand : cands) {
    if (best.set) {
      int pc = compare_cols(path, best.cols, depth);
      if (pc > 0) break;
      if (pc == 0) {
        int c = compare_col(cand.col, best.cols[depth]);
        if (c > 0) break; // candidates are sorted, the rest only get larger
      }
    }
    chosen.push_back(cand.idx);
    path.push_back(std::move(cand.col));
    search(diffs, anchor, cand.st, chosen, path, best);
    path.pop_back();
    chosen.pop_back();
  }
}

void append_int(std::string& s, const Int& v) { s += v.str(); }

} // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char b : key) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

CanonicalData canonical_data(const Polytope& p) {
  const int d = p.ambient;
  const int n = static_cast<int>(p.vertices.size());

  BestForm best;
  if (n == 1) {
    best.set = true;
    best.transform = IntMat::identity(d);
  } else {
    for (int anchor = 0; anchor < n; ++anchor) {
      std::vector<IntVec> diffs;
      diffs.reserve(n - 1);
      for (int i = 0; i < n; ++i)
        if (i != anchor) diffs.push_back(sub(p.vertices[i], p.vertices[anchor]));
      std::vector<int> chosen;
      std::vector<IntVec> path;
      search(diffs, anchor, HermiteState(d), chosen, path, best);
    }
  }

  CanonicalData out;
  out.anchor = best.anchor;
  out.transform = best.transform;
  out.canonical_matrix = IntMat(d, n - 1);
  // best.order indexes the anchor-skipping diff list; convert to vertex ids
  out.order.reserve(best.order.size());
  for (int i : best.order) out.order.push_back(i < best.anchor ? i : i + 1);
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < d; ++i) out.canonical_matrix.at(i, j) = best.cols[j][i];

  std::string s;
  s += "d";
  append_int(s, Int(p.ambient));
  s += "k";
  append_int(s, Int(p.dim));
  s += "n";
  append_int(s, Int(n));
  s += "s";
  append_int(s, Int(static_cast<long>(p.points.size())));
  s += "m";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n - 1; ++j) {
      s += j == 0 && i == 0 ? ':' : ',';
      append_int(s, out.canonical_matrix.at(i, j));
    }
  out.form.key.assign(s.begin(), s.end());
  return out;
}

CanonicalForm canonical_form(const Polytope& p) { return canonical_data(p).form; }

EquivResult equivalent(const Polytope& p1, const Polytope& p2) {
  EquivResult res;
  if (p1.ambient != p2.ambient || p1.dim != p2.dim ||
      p1.vertices.size() != p2.vertices.size() || p1.points.size() != p2.points.size())
    return res;
  CanonicalData c1 = canonical_data(p1);
  CanonicalData c2 = canonical_data(p2);
  if (c1.form != c2.form) return res;

  // transform1 * D1 = H = transform2 * D2, so D2 = transform2^-1 transform1 D1
  IntMat a = inverse_unimodular(c2.transform) * c1.transform;
  IntVec t = sub(p2.vertices[c2.anchor], mul(a, p1.vertices[c1.anchor]));
  AffUnimodMap witness{a, t};

  auto mapped_equal = [&](const std::vector<IntVec>& from, const std::vector<IntVec>& to) {
    std::vector<IntVec> img;
    img.reserve(from.size());
    for (const IntVec& v : from) img.push_back(latwidth::apply(witness, v));
    std::sort(img.begin(), img.end(), lex_less);
    return img == to;
  };
  if (!mapped_equal(p1.vertices, p2.vertices) || !mapped_equal(p1.points, p2.points))
    throw std::logic_error("equivalent: witness failed post-hoc verification");
  res.equivalent = true;
  res.witness = witness;
  return res;
}

bool lift_equivalent(const Lift& l1, const Lift& l2) {
  if (!(l1.base == l2.base)) throw std::invalid_argument("lift_equivalent: bases differ");
  const Polytope& base = l1.base;
  const int bd = base.ambient;
  const int d = bd + 1;
  if (l1.total.ambient != d || l2.total.ambient != d)
    throw std::invalid_argument("lift_equivalent: totals do not live one dimension up");

  // fiber extremes over each base vertex
  auto fibers = [&](const Polytope& total) {
    std::vector<std::pair<Int, Int>> hb(base.vertices.size()); // (bottom, top)
    std::vector<bool> seen(base.vertices.size(), false);
    for (const IntVec& w : total.vertices) {
      IntVec x(w.begin(), w.end() - 1);
      auto it = std::find(base.vertices.begin(), base.vertices.end(), x);
      if (it == base.vertices.end()) continue;
      size_t i = it - base.vertices.begin();
      const Int& y = w.back();
      if (!seen[i]) {
        hb[i] = {y, y};
        seen[i] = true;
      } else {
        if (y < hb[i].first) hb[i].first = y;
        if (y > hb[i].second) hb[i].second = y;
      }
    }
    for (bool s : seen)
      if (!s) throw std::logic_error("lift_equivalent: vertex fiber missing");
    return hb;
  };
  auto f1 = fibers(l1.total);
  auto f2 = fibers(l2.total);

  // affinely independent base vertices spanning the base
  std::vector<int> span_ids{0};
  std::vector<IntVec> span_diffs;
  for (size_t i = 1; i < base.vertices.size() && static_cast<int>(span_diffs.size()) < bd;
       ++i) {
    IntVec v = sub(base.vertices[i], base.vertices[0]);
    std::vector<IntVec> trial = span_diffs;
    trial.push_back(v);
    if (rank(IntMat::from_rows(trial)) == static_cast<int>(trial.size())) {
      span_diffs.push_back(v);
      span_ids.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(span_diffs.size()) != bd)
    throw std::invalid_argument("lift_equivalent: base must be full-dimensional");

  for (int e : {1, -1}) {
    // g(v) = a.v + c from matching fiber ends, then a from the span system
    auto g = [&](size_t i) {
      return e == 1 ? Int(f2[i].second - f1[i].second) : Int(f2[i].first + f1[i].second);
    };
    auto g_low = [&](size_t i) {
      return e == 1 ? Int(f2[i].first - f1[i].first) : Int(f2[i].second + f1[i].first);
    };
    bool consistent = true;
    for (size_t i = 0; i < base.vertices.size() && consistent; ++i)
      if (g(i) != g_low(i)) consistent = false;
    if (!consistent) continue;

    IntMat m = IntMat::from_rows(span_diffs);
    Int det = determinant(m);
    IntVec rhs(bd);
    for (int i = 0; i < bd; ++i) rhs[i] = g(span_ids[i + 1]) - g(span_ids[0]);
    IntVec a(bd);
    bool integral = true;
    for (int j = 0; j < bd && integral; ++j) {
      IntMat mj = m;
      for (int i = 0; i < bd; ++i) mj.at(i, j) = rhs[i];
      Int num = determinant(mj);
      if (num % det != 0) integral = false;
      else a[j] = num / det;
    }
    if (!integral) continue;
    Int c = g(0) - dot(a, base.vertices[0]);
    bool all_match = true;
    for (size_t i = 0; i < base.vertices.size() && all_match; ++i)
      if (dot(a, base.vertices[i]) + c != g(i)) all_match = false;
    if (!all_match) continue;

    // verify on all lattice points
    std::vector<IntVec> img;
    img.reserve(l1.total.points.size());
    for (const IntVec& w : l1.total.points) {
      IntVec q = w;
      Int y = w.back();
      IntVec x(w.begin(), w.end() - 1);
      q.back() = Int(e) * y + dot(a, x) + c;
      img.push_back(std::move(q));
    }
    std::sort(img.begin(), img.end(), lex_less);
    if (img == l2.total.points) return true;
  }
  return false;
}

} // namespace latwidth
