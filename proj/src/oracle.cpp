#include "ucon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "ucon/connectivity.hpp"
#include "ucon/errors.hpp"

namespace ucon {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using BPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using Entry = std::pair<BPoint, std::uint32_t>;
using Tree = bgi::rtree<Entry, bgi::quadratic<16>>;

bool all_finite(const Instance& inst) {
  return std::all_of(inst.regions.begin(), inst.regions.end(), [](const Region& r) {
    return std::holds_alternative<FixedPoint>(r) || std::holds_alternative<PointPair>(r);
  });
}

std::vector<std::vector<Point2>> sample_all(const Instance& inst, int g) {
  std::vector<std::vector<Point2>> sets;
  sets.reserve(inst.regions.size());
  for (const auto& r : inst.regions) sets.push_back(discretize(r, g));
  return sets;
}

// Longest edge (squared) of a Prim MST over n points.
double bottleneck_sq(const Point2* pts, std::size_t n) {
  double best[64];
  bool in[64];
  for (std::size_t j = 0; j < n; ++j) in[j] = false;
  in[0] = true;
  for (std::size_t j = 1; j < n; ++j) {
    const double dx = pts[j].x - pts[0].x, dy = pts[j].y - pts[0].y;
    best[j] = dx * dx + dy * dy;
  }
  double worst = 0.0;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = 0;
    double pv = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < n; ++j)
      if (!in[j] && best[j] < pv) {
        pv = best[j];
        pick = j;
      }
    in[pick] = true;
    worst = std::max(worst, pv);
    for (std::size_t j = 1; j < n; ++j) {
      if (in[j]) continue;
      const double dx = pts[j].x - pts[pick].x, dy = pts[j].y - pts[pick].y;
      const double d = dx * dx + dy * dy;
      if (d < best[j]) best[j] = d;
    }
  }
  return worst;
}

struct Best {
  double value = 0.0;
  std::uint64_t flat = 0;
  bool set = false;
};

template <class Body>
void run_chunks(std::uint64_t total, unsigned threads, Body body) {
  const std::uint64_t t = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  if (t == 1) {
    body(0, 0, total);
    return;
  }
  const std::uint64_t chunk = (total + t - 1) / t;
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (std::uint64_t k = 0; k < t; ++k) {
    const std::uint64_t b = k * chunk, e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, k, b, e] {
      try {
        body(static_cast<std::size_t>(k), b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// Scans the Cartesian product; keeps the minimum (or maximum) squared bottleneck with
// the smallest flat index among equal values.
OracleResult product_scan(const Instance& inst, const OracleOptions& opts, bool maximize) {
  const auto sets = sample_all(inst, opts.grid);
  const std::size_t n = sets.size();
  if (n > 64) throw std::invalid_argument("oracle: at most 64 regions supported");
  const double total_d = sample_product(inst, opts.grid);
  if (total_d > opts.budget)
    throw BudgetExceeded("oracle: " + std::to_string(static_cast<long double>(total_d)) +
                             " evaluations required, budget is " + std::to_string(opts.budget),
                         total_d);
  const auto total = static_cast<std::uint64_t>(total_d);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<Best> partial(threads);

  run_chunks(total, threads, [&](std::size_t slot, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::size_t> idx(n);
    std::uint64_t rest = begin;
    for (std::size_t i = n; i-- > 0;) {
      idx[i] = static_cast<std::size_t>(rest % sets[i].size());
      rest /= sets[i].size();
    }
    Point2 pts[64];
    for (std::size_t i = 0; i < n; ++i) pts[i] = sets[i][idx[i]];
    Best best;
    for (std::uint64_t f = begin; f < end; ++f) {
      const double v = bottleneck_sq(pts, n);
      if (!best.set || (maximize ? v > best.value : v < best.value)) best = {v, f, true};
      for (std::size_t i = n; i-- > 0;) {
        if (++idx[i] < sets[i].size()) {
          pts[i] = sets[i][idx[i]];
          break;
        }
        idx[i] = 0;
        pts[i] = sets[i][0];
      }
    }
    partial[slot] = best;
  });

  Best best;
  for (const auto& b : partial) {
    if (!b.set) continue;
    if (!best.set || (maximize ? b.value > best.value : b.value < best.value) ||
        (b.value == best.value && b.flat < best.flat))
      best = b;
  }
  OracleResult out;
  out.alpha = std::sqrt(best.value) / 2.0;
  out.grid = opts.grid;
  out.exhaustive = all_finite(inst);
  out.evaluations = total_d;
  std::uint64_t rest = best.flat;
  out.selection.points.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    out.selection.points[i] = sets[i][rest % sets[i].size()];
    rest /= sets[i].size();
  }
  return out;
}

Tree build_tree(const std::vector<Point2>& pts) {
  std::vector<Entry> entries;
  entries.reserve(pts.size());
  for (std::uint32_t i = 0; i < pts.size(); ++i) entries.emplace_back(BPoint(pts[i].x, pts[i].y), i);
  return Tree(entries.begin(), entries.end());
}

std::pair<double, std::uint32_t> nearest(const Tree& tree, const std::vector<Point2>& pts,
                                         Point2 q) {
  std::vector<Entry> hit;
  tree.query(bgi::nearest(BPoint(q.x, q.y), 1), std::back_inserter(hit));
  const auto id = hit.front().second;
  return {dist(q, pts[id]), id};
}

// With at most three regions every spanning tree is a star: fix the centre sample and
// attach each other region through its nearest sample.
OracleResult star_scan(const Instance& inst, const OracleOptions& opts) {
  const auto sets = sample_all(inst, opts.grid);
  const std::size_t n = sets.size();
  double work = 0.0;
  for (const auto& s : sets) work += static_cast<double>(s.size()) * static_cast<double>(n - 1);
  if (work > opts.budget)
    throw BudgetExceeded("oracle: " + std::to_string(work) + " nearest-neighbour queries required, budget is " +
                             std::to_string(opts.budget),
                         work);
  std::vector<Tree> trees;
  for (const auto& s : sets) trees.push_back(build_tree(s));

  struct Cand {
    double value = std::numeric_limits<double>::infinity();
    std::size_t centre = 0;
    std::size_t idx = 0;
    bool set = false;
  };
  // n == 2 needs only one centre region.
  const std::size_t centres = n == 2 ? 1 : n;
  std::vector<std::uint64_t> offsets{0};
  for (std::size_t c = 0; c < centres; ++c) offsets.push_back(offsets.back() + sets[c].size());
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<Cand> partial(threads);
  run_chunks(offsets.back(), threads, [&](std::size_t slot, std::uint64_t begin, std::uint64_t end) {
    Cand best;
    for (std::uint64_t f = begin; f < end; ++f) {
      std::size_t c = 0;
      while (f >= offsets[c + 1]) ++c;
      const std::size_t i = static_cast<std::size_t>(f - offsets[c]);
      double v = 0.0;
      for (std::size_t j = 0; j < n && v < best.value; ++j)
        if (j != c) v = std::max(v, nearest(trees[j], sets[j], sets[c][i]).first);
      if (v < best.value) best = {v, c, i, true};
    }
    partial[slot] = best;
  });
  Cand best;
  for (const auto& b : partial)
    if (b.set && (!best.set || b.value < best.value)) best = b;

  OracleResult out;
  out.grid = opts.grid;
  out.exhaustive = all_finite(inst);
  out.evaluations = work;
  out.selection.points.resize(n);
  const Point2 centre = sets[best.centre][best.idx];
  out.selection.points[best.centre] = centre;
  for (std::size_t j = 0; j < n; ++j)
    if (j != best.centre) out.selection.points[j] = sets[j][nearest(trees[j], sets[j], centre).second];
  out.alpha = mbst(out.selection.points).alpha;
  return out;
}

}  // namespace

double sample_product(const Instance& inst, int g) {
  double total = 1.0;
  for (const auto& r : inst.regions) total *= static_cast<double>(discretize(r, g).size());
  return total;
}

OracleResult brute_force_bcu(const Instance& inst, const OracleOptions& opts) {
  check_instance(inst);
  if (opts.grid < 1) throw std::invalid_argument("oracle: grid must be >= 1");
  if (opts.star_shortcut && inst.size() <= 3) return star_scan(inst, opts);
  return product_scan(inst, opts, false);
}

OracleResult brute_force_wcu(const Instance& inst, const OracleOptions& opts) {
  if (inst.regions.size() == 1) {
    OracleResult out;
    out.grid = opts.grid;
    out.exhaustive = all_finite(inst);
    out.selection.points = {discretize(inst.regions[0], opts.grid).front()};
    return out;
  }
  check_instance(inst);
  if (opts.grid < 1) throw std::invalid_argument("oracle: grid must be >= 1");
  return product_scan(inst, opts, true);
}

const char* verdict_name(PairVerdict v) {
  switch (v) {
    case PairVerdict::ConnectableYes: return "yes";
    case PairVerdict::ConnectableNo: return "no";
    case PairVerdict::Unknown: return "unknown";
  }
  return "?";
}

PairDecision pair_decision(const Instance& inst, double alpha, std::uint64_t trials,
                           std::uint64_t seed, double eps) {
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    const auto* p = std::get_if<PointPair>(&inst.regions[i]);
    if (!p)
      throw std::invalid_argument("pair_decision: region " + std::to_string(i) + " is a " +
                                  region_kind(inst.regions[i]) + ", only pairs are allowed");
    pairs.push_back(*p);
  }
  const std::size_t n = pairs.size();
  PairDecision out;
  std::vector<Point2> pts(n);
  auto test = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < n; ++i) pts[i] = (mask >> i) & 1 ? pairs[i].b : pairs[i].a;
    ++out.tried;
    if (mst_bottleneck(pts) <= 2.0 * alpha + eps) {
      out.verdict = PairVerdict::ConnectableYes;
      out.witness = Selection{pts};
      return true;
    }
    return false;
  };
  if (trials == 0) {
    if (n > 20)
      throw std::invalid_argument("pair_decision: exhaustive mode supports at most 20 pairs, got " +
                                  std::to_string(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (test(mask)) return out;
    out.verdict = PairVerdict::ConnectableNo;
    return out;
  }
  if (n > 64) throw std::invalid_argument("pair_decision: at most 64 pairs in randomized mode");
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t mask = rng();
    if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
    if (test(mask)) return out;
  }
  out.verdict = PairVerdict::Unknown;
  return out;
}

}  // namespace ucon
