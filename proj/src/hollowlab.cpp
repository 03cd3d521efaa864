#include "latwidth/hollowlab.hpp"

#include "latwidth/canon.hpp"
#include "latwidth/width.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace latwidth {

namespace {

Polytope from_rows_as_columns(std::vector<std::vector<long>> rows) {
  size_t ncols = rows[0].size();
  std::vector<IntVec> cols(ncols);
  for (size_t j = 0; j < ncols; ++j) {
    IntVec v(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) v[i] = rows[i][j];
    cols[j] = std::move(v);
  }
  return hull(cols);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](const std::string& name, std::vector<std::vector<long>> rows, long w) {
    cat.push_back(CatalogEntry{name, from_rows_as_columns(std::move(rows)), Int(w)});
  };
  add("M1", {{0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 6}}, 2);
  add("M2", {{0, 2, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}}, 2);
  add("M3", {{0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}, 3);
  add("M4", {{0, 1, 2, 3}, {0, 0, 4, 0}, {0, 0, 0, 4}}, 2);
  add("M5", {{0, 1, 2, 3}, {0, 0, 5, 0}, {0, 0, 0, 5}}, 3);
  add("M6", {{0, 3, 1, 2}, {0, 0, 3, 0}, {0, 0, 0, 3}}, 3);
  add("M7", {{0, 4, 1, 2}, {0, 0, 2, 0}, {0, 0, 0, 4}}, 2);
  add("M8", {{2, -2, 0, 0, 1}, {0, 0, 2, -2, 1}, {0, 0, 0, 0, 2}}, 2);
  add("M9", {{-1, 2, 0, 0, 1}, {0, 0, -1, 2, 1}, {0, 0, 0, 0, 3}}, 3);
  add("M10", {{1, 0, -1, 2, 1, 0}, {0, 1, -1, 2, 3, 1}, {0, 0, 0, 3, 3, 3}}, 3);
  add("M11", {{1, -1, 0, 2, 0, 1}, {0, 0, 2, 0, 0, 2}, {0, 0, 0, 2, 2, 2}}, 2);
  add("M12", {{0, -1, 1, 0, 1, 0, 2, 1}, {0, 1, 1, 2, 1, 2, 2, 3}, {0, 0, 0, 0, 2, 2, 2, 2}},
      2);
  return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const Polytope* catalog_lookup(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e.polytope;
  return nullptr;
}

void catalog_self_check() {
  for (const CatalogEntry& e : catalog()) {
    if (!is_hollow(e.polytope))
      throw std::logic_error("catalog self-check: " + e.name + " is not hollow");
    Int w = lattice_width(e.polytope).value;
    if (w != e.stated_width)
      throw std::logic_error("catalog self-check: " + e.name + " has width " + w.str() +
                             ", expected " + e.stated_width.str());
  }
}

bool is_hollow(const Polytope& p) { return interior_lattice_points(p).empty(); }

bool is_empty(const Polytope& p) { return p.points.size() == p.vertices.size(); }

std::vector<CensusRecord> census_subpolytopes(const Polytope& seed, const CensusOptions& opt) {
  std::vector<CensusRecord> records;

  Polytope root = hull(seed.points);
  WidthCertificate root_w = lattice_width(root);
  if (root_w.value < opt.min_width) return records;
  const bool seed_hollow = is_hollow(root);

  struct Node {
    Polytope poly;
    Int width;
    std::string key;
  };

  std::string root_key = canonical_form(root).hex();
  records.push_back(CensusRecord{root_key, size(root), root_w.value, root.dim, "", root.vertices});
  std::set<std::string> visited{root_key};
  std::vector<Node> frontier;
  frontier.push_back(Node{std::move(root), root_w.value, root_key});

  while (!frontier.empty()) {
    struct Discovery {
      Node node;
      std::string parent;
    };
    std::map<std::string, Discovery> level; // key -> representative + min parent
    std::mutex mu;

    auto expand = [&](const Node& node) {
      for (const IntVec& v : node.poly.vertices) {
        std::vector<IntVec> rest;
        rest.reserve(node.poly.points.size() - 1);
        for (const IntVec& q : node.poly.points)
          if (q != v) rest.push_back(q);
        if (rest.empty()) continue;
        Polytope child = hull(rest);
        if (child.dim < seed.dim && !opt.include_degenerate) continue;
        Int w = child.dim < child.ambient ? Int(0) : lattice_width(child, node.width).value;
        if (w > node.width)
          throw std::logic_error("census: child width exceeds parent width");
        if (seed_hollow && !is_hollow(child))
          throw std::logic_error("census: non-hollow subpolytope of a hollow seed");
        if (w < opt.min_width) continue;
        std::string key = canonical_form(child).hex();
        std::lock_guard<std::mutex> lock(mu);
        if (visited.count(key)) continue;
        auto it = level.find(key);
        if (it == level.end())
          level.emplace(key, Discovery{Node{std::move(child), w, key}, node.key});
        else if (node.key < it->second.parent)
          it->second.parent = node.key;
      }
    };

    if (opt.threads <= 1 || frontier.size() < 2) {
      for (const Node& n : frontier) expand(n);
    } else {
      const int nthreads = std::min<int>(opt.threads, static_cast<int>(frontier.size()));
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&]() {
          for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= frontier.size()) return;
            expand(frontier[i]);
          }
        });
      for (std::thread& th : pool) th.join();
    }

    std::vector<Node> next_frontier;
    for (auto& [key, disc] : level) { // std::map iterates keys in order
      visited.insert(key);
      records.push_back(CensusRecord{key, size(disc.node.poly), disc.node.width,
                                     disc.node.poly.dim, disc.parent,
                                     disc.node.poly.vertices});
      next_frontier.push_back(std::move(disc.node));
    }
    frontier = std::move(next_frontier);
  }
  return records;
}

std::vector<std::pair<IntVec, Int>> vertex_removal_widths(const Polytope& p) {
  std::vector<std::pair<IntVec, Int>> out;
  for (const IntVec& v : p.vertices) {
    std::vector<IntVec> rest;
    for (const IntVec& q : p.points)
      if (q != v) rest.push_back(q);
    if (rest.empty()) continue;
    Polytope child = hull(rest);
    Int w = child.dim < child.ambient ? Int(0) : lattice_width(child).value;
    out.emplace_back(v, w);
  }
  return out;
}

std::vector<HollowProjection> hollow_projection_directions(const Polytope& p) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("hollow_projection_directions: polytope not full-dimensional");
  const int d = p.ambient;

  std::vector<IntVec> diffs;
  for (const IntVec& a : p.vertices)
    for (const IntVec& b : p.vertices)
      if (a != b) diffs.push_back(sub(a, b));
  Polytope diffbody = hull(diffs);

  std::set<IntVec> dirs;
  for (const IntVec& u : diffbody.points) {
    if (is_zero(u)) continue;
    dirs.insert(sign_normalize(make_primitive(u)));
  }

  std::vector<HollowProjection> out;
  for (const IntVec& u : dirs) {
    // u^T * hr.u = (1, 0, ..., 0) for primitive u, so hr.u^T maps u to e_1;
    // dropping the first coordinate then projects along u onto Z^{d-1}
    HnfResult hr = hnf_with_transform(IntMat::from_rows({u}));
    IntMat w = hr.u.transposed();
    std::vector<IntVec> proj;
    for (const IntVec& v : p.vertices) {
      IntVec y = mul(w, v);
      proj.push_back(IntVec(y.begin() + 1, y.end()));
    }
    Polytope image = hull(proj);
    if (is_hollow(image)) out.push_back(HollowProjection{u, std::move(image)});
  }
  return out;
}

} // namespace latwidth
