#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ucon/geometry.hpp"

namespace ucon {

struct ConnectivityGraph {
  std::vector<Point2> points;
  double alpha = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};

/// Edges between every pair at distance <= 2*alpha + eps.
ConnectivityGraph build_connectivity_graph(const std::vector<Point2>& points, double alpha,
                                           double eps = 1e-12);

bool is_connected(const ConnectivityGraph& g);

/// Cheaper check that never materializes the edge list.
bool is_connected_at(const std::vector<Point2>& points, double alpha, double eps = 1e-12);

struct SpanningSolution {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<double> lengths_desc;
  double bottleneck = 0.0;
  double alpha = 0.0;
};

/// Euclidean MST by dense Prim; ties go to the lowest index.
SpanningSolution mbst(const std::vector<Point2>& points);

/// Longest MST edge only.
double mst_bottleneck(const std::vector<Point2>& points);

enum class Preference { Preferred, Tie, Dispreferred };

/// Lexicographic comparison of longest-first edge lists with absolute tolerance eps.
/// Throws std::invalid_argument on a length mismatch.
Preference compare_edge_lists(const std::vector<double>& a, const std::vector<double>& b,
                              double eps = 1e-9);

struct JoinResult {
  bool ok = true;
  std::vector<std::pair<Point2, Point2>> edges;
  double failed_distance = 0.0;  // set when !ok
};

JoinResult greedy_component_join(const std::vector<std::vector<Point2>>& components,
                                 double max_len, double eps = 1e-9);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t count() const { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t count_;
};

}  // namespace ucon
