#include "ucon/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ucon/connectivity.hpp"
#include "ucon/errors.hpp"

namespace ucon {

namespace {

std::vector<Disk> disks_of(const Instance& inst, const char* who) {
  std::vector<Disk> out;
  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    const auto* d = std::get_if<Disk>(&inst.regions[i]);
    if (!d)
      throw std::invalid_argument(std::string(who) + ": region " + std::to_string(i) + " is a " +
                                  region_kind(inst.regions[i]) + ", expected a disk");
    out.push_back(*d);
  }
  if (out.empty()) throw std::invalid_argument(std::string(who) + ": empty instance");
  return out;
}

std::vector<Point2> centres(const std::vector<Disk>& disks) {
  std::vector<Point2> c;
  for (const auto& d : disks) c.push_back(d.center);
  return c;
}

bool all_unit(const std::vector<Disk>& disks) {
  return std::all_of(disks.begin(), disks.end(), [](const Disk& d) { return d.is_unit(); });
}

}  // namespace

ApproxResult bcu_center_heuristic(const Instance& inst) {
  const auto disks = disks_of(inst, "bcu_center_heuristic");
  ApproxResult r;
  r.method = "center";
  r.selection.points = centres(disks);
  r.alpha = mbst(r.selection.points).alpha;
  if (all_unit(disks)) r.certificates.push_back("<= OPT+1");
  return r;
}

ApproxResult cinch_up(const Instance& inst) {
  const auto disks = disks_of(inst, "cinch_up");
  ApproxResult r;
  r.method = "cinch";
  auto pts = centres(disks);
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(pts[i], pts[j]) < disks[i].radius + disks[j].radius - 1e-9)
        r.warnings.push_back("disks " + std::to_string(i) + " and " + std::to_string(j) +
                             " overlap; no approximation guarantee");

  const auto tree = mbst(pts);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> leaves;
  bool path = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() == 1) leaves.push_back(i);
    if (adj[i].size() > 2) path = false;
  }
  auto cinch = [&](std::size_t leaf) {
    const Point2 target = pts[adj[leaf].front()];
    pts[leaf] = containment_project(disks[leaf], target);
  };
  if (path && leaves.size() == 2) {
    cinch(leaves[0]);
    cinch(leaves[1]);
  } else {
    for (auto leaf : leaves) cinch(leaf);
  }
  r.selection.points = pts;
  r.alpha = mbst(pts).alpha;
  return r;
}

ApproxResult wcu_center_heuristic(const Instance& inst) {
  const auto disks = disks_of(inst, "wcu_center_heuristic");
  if (!all_unit(disks)) throw std::invalid_argument("wcu_center_heuristic: unit disks only");
  ApproxResult r;
  r.method = "wcu-center";
  r.selection.points = centres(disks);
  r.alpha = mbst(r.selection.points).bottleneck / 2.0 + 1.0;
  r.certificates.push_back("<= OPT+1");
  if (disks.size() >= 2) r.certificates.push_back("<= 2*OPT");
  return r;
}

FlowerInstance flower_instance(const FlowerParams& params) {
  const double L = params.spacing;
  const double eps = params.eps;
  if (!(L > 2.0)) throw std::invalid_argument("flower: spacing must exceed 2");
  if (!(eps > 0.0) || !(eps < (L - 2.0) / 10.0))
    throw std::invalid_argument("flower: eps must lie in (0, (L-2)/10)");

  int n = params.n;
  if (n <= 0) {
    const double big = params.big_radius > 0.0 ? params.big_radius : 200.0 * L;
    if (!(big > L / 2.0)) throw std::invalid_argument("flower: big radius too small");
    n = static_cast<int>(std::lround(std::numbers::pi / (2.0 * std::asin(L / (2.0 * big)))));
  }
  if (2 * n < 6) throw std::invalid_argument("flower: need at least 6 rim disks");
  const int rim = 2 * n;
  const double step = std::numbers::pi / n;
  const double R = L / (2.0 * std::sin(step / 2.0));

  FlowerInstance out;
  out.n = n;
  out.big_radius = R;
  out.rim_count = static_cast<std::size_t>(rim);
  out.sag = R * (1.0 - std::cos(step));
  out.sag_ok = out.sag < eps / 3.0;

  // D_0 at the bottom, counter-clockwise numbering.
  std::vector<Point2> rim_c(rim);
  for (int i = 0; i < rim; ++i) {
    const double th = -std::numbers::pi / 2 + i * step;
    rim_c[i] = {R * std::cos(th), R * std::sin(th)};
  }
  auto add = [&](Point2 c, Point2 l) {
    if (out.instance.regions.size() >= params.max_regions)
      throw BudgetExceeded("flower: more than " + std::to_string(params.max_regions) + " disks",
                           static_cast<double>(out.instance.regions.size() + 1));
    out.instance.regions.push_back(Disk{c, 1.0});
    out.lstar.points.push_back(l);
  };
  for (int i = 0; i < rim; ++i) {
    const Point2 u = (1.0 / R) * rim_c[i];
    add(rim_c[i], i % 2 == 0 ? rim_c[i] - u : rim_c[i] + u);
  }
  out.min_clearance = std::numeric_limits<double>::infinity();
  if (!params.with_chains) return out;

  std::vector<std::pair<Point2, int>> chain;  // centre, owning rim disk
  for (int j = 0; j < rim; j += 2) {
    const Point2 u = (1.0 / R) * rim_c[j];
    for (int k = 1; k * eps < R; ++k) chain.emplace_back(rim_c[j] - (k * eps) * u, j);
  }
  chain.emplace_back(Point2{0.0, 0.0}, -1);
  const double h = 1.5 * L;
  for (int i = 1; i < rim; i += 2) {
    const int to = (i + 2) % rim;
    const Point2 ui = (1.0 / R) * rim_c[i];
    const Point2 uo = (1.0 / R) * rim_c[to];
    for (int k = 1; k * eps < h; ++k) chain.emplace_back(rim_c[i] + (k * eps) * ui, i);
    const double th0 = -std::numbers::pi / 2 + i * step;
    const double dth = 2.0 * std::asin(eps / (2.0 * (R + h)));
    for (double t = 0.0; t <= 2.0 * step; t += dth)
      chain.emplace_back(Point2{(R + h) * std::cos(th0 + t), (R + h) * std::sin(th0 + t)}, i);
    for (int k = static_cast<int>(std::ceil(h / eps)) - 1; k >= 1; --k)
      chain.emplace_back(rim_c[to] + (k * eps) * uo, to);
  }

  for (const auto& [c, owner] : chain) {
    // Only rim disks near this centre can be within L of it.
    const double ang = std::atan2(c.y, c.x) + std::numbers::pi / 2;
    const int near = static_cast<int>(std::lround(ang / step));
    for (int d = -3; d <= 3; ++d) {
      const int k = ((near + d) % rim + rim) % rim;
      if (k == owner || (owner >= 0 && owner % 2 == 1 && (k == owner || k == (owner + 2) % rim)))
        continue;
      out.min_clearance = std::min(out.min_clearance, dist(c, rim_c[k]));
    }
    if (owner < 0) {
      for (const auto& rc : rim_c) out.min_clearance = std::min(out.min_clearance, dist(c, rc));
    }
  }
  if (!(out.min_clearance > L))
    throw std::invalid_argument("flower: a chain centre comes within L of a foreign rim disk (clearance " +
                                std::to_string(out.min_clearance) + "); needs big radius > L^2/eps");
  for (const auto& [c, owner] : chain) add(c, c);
  return out;
}

}  // namespace ucon
