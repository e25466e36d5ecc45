#include "ucon/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucon {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), count_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --count_;
  return true;
}

ConnectivityGraph build_connectivity_graph(const std::vector<Point2>& points, double alpha,
                                           double eps) {
  ConnectivityGraph g{points, alpha, {}};
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (dist(points[i], points[j]) <= 2.0 * alpha + eps) g.edges.emplace_back(i, j);
  return g;
}

bool is_connected(const ConnectivityGraph& g) {
  if (g.points.empty()) return true;
  DisjointSets ds(g.points.size());
  for (const auto& [i, j] : g.edges) ds.unite(i, j);
  return ds.count() == 1;
}

bool is_connected_at(const std::vector<Point2>& points, double alpha, double eps) {
  if (points.empty()) return true;
  return mst_bottleneck(points) <= 2.0 * alpha + eps;
}

namespace {

// Prim over the complete graph; calls on_edge(parent, child, length) per tree edge.
void prim(const std::vector<Point2>& pts,
          const std::function<void(std::size_t, std::size_t, double)>& on_edge) {
  const std::size_t n = pts.size();
  if (n < 2) return;
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> from(n, 0);
  std::vector<char> in(n, 0);
  in[0] = 1;
  for (std::size_t j = 1; j < n; ++j) best[j] = dist(pts[0], pts[j]);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!in[j] && (pick == n || best[j] < best[pick])) pick = j;
    in[pick] = 1;
    on_edge(from[pick], pick, best[pick]);
    for (std::size_t j = 0; j < n; ++j) {
      if (in[j]) continue;
      const double d = dist(pts[pick], pts[j]);
      if (d < best[j]) {
        best[j] = d;
        from[j] = pick;
      }
    }
  }
}

}  // namespace

SpanningSolution mbst(const std::vector<Point2>& points) {
  SpanningSolution sol;
  prim(points, [&](std::size_t a, std::size_t b, double len) {
    sol.edges.emplace_back(std::min(a, b), std::max(a, b));
    sol.lengths_desc.push_back(len);
  });
  std::sort(sol.lengths_desc.begin(), sol.lengths_desc.end(), std::greater<>());
  sol.bottleneck = sol.lengths_desc.empty() ? 0.0 : sol.lengths_desc.front();
  sol.alpha = sol.bottleneck / 2.0;
  return sol;
}

double mst_bottleneck(const std::vector<Point2>& points) {
  double worst = 0.0;
  prim(points, [&](std::size_t, std::size_t, double len) { worst = std::max(worst, len); });
  return worst;
}

Preference compare_edge_lists(const std::vector<double>& a, const std::vector<double>& b,
                              double eps) {
  if (a.size() != b.size())
    throw std::invalid_argument("compare_edge_lists: lengths differ (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - eps) return Preference::Preferred;
    if (a[i] > b[i] + eps) return Preference::Dispreferred;
  }
  return Preference::Tie;
}

JoinResult greedy_component_join(const std::vector<std::vector<Point2>>& components,
                                 double max_len, double eps) {
  if (components.empty()) throw std::invalid_argument("greedy_component_join: no components");
  JoinResult out;
  const std::size_t c = components.size();
  DisjointSets ds(c);
  while (ds.count() > 1) {
    double best = std::numeric_limits<double>::infinity();
    Point2 pa, pb;
    std::size_t ca = 0, cb = 0;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j) {
        if (ds.find(i) == ds.find(j)) continue;
        for (const auto& p : components[i])
          for (const auto& q : components[j]) {
            const double d = dist(p, q);
            if (d < best) {
              best = d;
              pa = p;
              pb = q;
              ca = i;
              cb = j;
            }
          }
      }
    if (best > max_len + eps) {
      out.ok = false;
      out.failed_distance = best;
      return out;
    }
    ds.unite(ca, cb);
    out.edges.emplace_back(pa, pb);
  }
  return out;
}

}  // namespace ucon
