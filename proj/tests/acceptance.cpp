// Acceptance checks, one PASS/FAIL line per criterion. Pass criterion numbers to run a subset.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "ucon/approx.hpp"
#include "ucon/connectivity.hpp"
#include "ucon/exact_solver.hpp"
#include "ucon/gadgets.hpp"
#include "ucon/io.hpp"
#include "ucon/oracle.hpp"
#include "ucon/testing/grid_connectivity.hpp"
#include "ucon/testing/spanning_trees.hpp"

using namespace ucon;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct SegInstance {
  Instance inst;
  double max_len = 0.0;
};

// Fixed points and segments in [0,10]^2; shared by criteria 1 and 10.
std::vector<SegInstance> segment_instances() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 10);
  std::vector<SegInstance> out;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + int(rng() % 5), k = 1 + int(rng() % 3);
    SegInstance s;
    for (int i = 0; i < n; ++i) s.inst.regions.push_back(FixedPoint{{u(rng), u(rng)}});
    for (int i = 0; i < k; ++i) {
      Segment2 seg{{u(rng), u(rng)}, {u(rng), u(rng)}};
      s.max_len = std::max(s.max_len, seg.length());
      s.inst.regions.push_back(SegmentRegion{seg});
    }
    out.push_back(std::move(s));
  }
  return out;
}

Instance unit_disks(std::mt19937_64& rng, int n, double span) {
  std::uniform_real_distribution<double> u(0, span);
  Instance inst;
  for (int i = 0; i < n; ++i) inst.regions.push_back(Disk{{u(rng), u(rng)}, 1.0});
  return inst;
}

Point2 uniform_in_disk(std::mt19937_64& rng, const Disk& d) {
  std::uniform_real_distribution<double> u(0, 1);
  const double r = d.radius * std::sqrt(u(rng));
  const double t = 2 * std::numbers::pi * u(rng);
  return {d.center.x + r * std::cos(t), d.center.y + r * std::sin(t)};
}

// Largest grid whose sample product stays within the budget.
int grid_within(const Instance& inst, int cap, double budget) {
  int g = cap;
  while (g > 1 && sample_product(inst, g) > budget) --g;
  return g;
}

Verdict criterion1() {
  constexpr double delta = 1e-9;
  constexpr int g = 400;
  Verdict o;
  double worst = 0.0;
  int bad = 0;
  for (const auto& s : segment_instances()) {
    ExactOptions eo;
    eo.delta = delta;
    const double exact = solve_exact(s.inst, eo).solution.alpha;
    OracleOptions oo;
    oo.grid = g;
    const double oracle = brute_force_bcu(s.inst, oo).alpha;
    const double slack = s.max_len / (2.0 * g);
    const double diff = std::abs(exact - oracle);
    worst = std::max(worst, diff - slack);
    if (diff > delta + slack) ++bad;
  }
  o.pass = bad == 0;
  o.detail = fmt("%d/100 outside delta + grid slack; worst excess over slack %.3g", bad, worst);
  return o;
}

Verdict criterion2() {
  Instance sym;
  sym.regions = {FixedPoint{{0, 0}}, FixedPoint{{4, 0}}, SegmentRegion{{{2, -1}, {2, 1}}}};
  const double alpha = solve_exact(sym).solution.alpha;
  const auto cp = critical_path({Element::fixed({0, 0}, 0), Element::seg({{2, -1}, {2, 1}}, 1),
                                 Element::fixed({4, 0}, 2)},
                                1e-12, 1e-9);
  const bool beta = cp.outcome == ucon::Outcome::Beta && cp.points.size() == 3;
  const double mx = beta ? cp.points[1].x : NAN, my = beta ? cp.points[1].y : NAN;
  Verdict o;
  o.pass = std::abs(alpha - 1.0) <= 1e-6 && beta && std::abs(cp.lambda - 2.0) <= 1e-6 &&
           std::abs(mx - 2.0) <= 1e-6 && std::abs(my) <= 1e-6;
  o.detail = fmt("alpha %.9f, lambda %.9f, midpoint (%.9f, %.9f)", alpha, cp.lambda, mx, my);
  return o;
}

Verdict criterion3() {
  std::mt19937_64 rng(31);
  int bad = 0, coarse = 0, min_g = 200;
  double worst = -1e9;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + int(rng() % 4);
    const Instance inst = unit_disks(rng, n, 6.0);
    OracleOptions oo;
    oo.grid = n <= 3 ? 200 : grid_within(inst, 200, 2e6);
    oo.budget = 1e9;
    if (oo.grid < 200) ++coarse;
    min_g = std::min(min_g, oo.grid);
    const double opt = brute_force_bcu(inst, oo).alpha;
    const double a = bcu_center_heuristic(inst).alpha;
    worst = std::max(worst, a - opt);
    if (a > opt + 1.0 + 0.05) ++bad;
  }
  Verdict o;
  o.pass = bad == 0;
  o.detail = fmt("%d/200 violations; max(center - oracle) %.4f; %d instances with n>3 used grid >= %d", bad, worst,
                 coarse, min_g);
  return o;
}

Verdict criterion4() {
  std::mt19937_64 rng(41);
  int disconnected = 0, bad_add = 0, bad_mul = 0, checked_mul = 0, min_g = 60;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + int(rng() % 2);
    const Instance inst = unit_disks(rng, n, 6.0);
    const auto h = wcu_center_heuristic(inst);
    std::vector<Point2> pts(inst.size());
    for (int s = 0; s < 1000; ++s) {
      for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = uniform_in_disk(rng, std::get<Disk>(inst.regions[i]));
      if (!is_connected_at(pts, h.alpha)) ++disconnected;
    }
    OracleOptions oo;
    oo.grid = grid_within(inst, 60, 2e7);
    oo.budget = 1e9;
    min_g = std::min(min_g, oo.grid);
    const double wcu = brute_force_wcu(inst, oo).alpha;
    const double slack = 2.0 / oo.grid;
    if (h.alpha > wcu + 1.0 + slack) ++bad_add;
    if (wcu >= 1.0) {
      ++checked_mul;
      if (h.alpha > 2.0 * wcu + slack) ++bad_mul;
    }
  }
  Verdict o;
  o.pass = disconnected == 0 && bad_add == 0 && bad_mul == 0;
  o.detail = fmt("%d disconnected of 50000; %d over OPT+1; %d/%d over 2*OPT; grid >= %d", disconnected, bad_add,
                 bad_mul, checked_mul, min_g);
  return o;
}

Verdict criterion5() {
  Verdict o;
  std::string d;
  for (double L : {2.01, 2.5, 3.0, 5.0}) {
    FlowerParams fp;
    fp.spacing = L;
    fp.eps = (L - 2.0) / 20.0;
    fp.with_chains = false;
    const auto fl = flower_instance(fp);
    const double b = mbst(fl.lstar.points).bottleneck;
    const double target = std::sqrt(L * L + 4.0);
    const double rel = std::abs(b - target) / target;
    if (rel > 0.01) o.pass = false;
    d += fmt("L=%.2f rel %.2e; ", L, rel);
    if (L == 2.01) {
      const double ratio = (L / 2 + 1) / (b / 2);
      if (ratio < 1.40) o.pass = false;
      d += fmt("ratio %.4f; ", ratio);
    }
  }
  o.detail = d + "rim only";
  return o;
}

Verdict criterion6() {
  Instance inst;
  inst.regions = {Disk{{0, 0}, 1.0}, Disk{{2, 0}, 1.0}, Disk{{1, std::sqrt(3.0)}, 1.0}};
  const double cinch = cinch_up(inst).alpha;
  OracleOptions oo;
  oo.grid = 600;
  oo.budget = 1e9;
  const double opt = brute_force_bcu(inst, oo).alpha;
  Verdict o;
  o.pass = std::abs(cinch - 0.5) <= 1e-6 && std::abs(opt - 0.12) <= 0.01;
  o.detail = fmt("cinch %.9f, oracle %.5f", cinch, opt);
  return o;
}

Verdict criterion7() {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0, 10);
  int mbst_bad = 0, law_bad = 0, mono_bad = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<Point2> pts(2 + rng() % 6);
    for (auto& p : pts) p = {u(rng), u(rng)};
    if (mbst(pts).bottleneck != ucon::testing_support::minimax_spanning_tree(pts)) ++mbst_bad;
    const double b = mbst(pts).bottleneck;
    if (!is_connected_at(pts, b / 2) || (b > 0 && is_connected_at(pts, b / 2 * (1 - 1e-9), 0.0))) ++mono_bad;
  }
  auto sorted_list = [&](std::size_t n) {
    std::vector<double> v(n);
    // Coarse values so ties occur.
    for (auto& x : v) x = std::floor(u(rng)) / 2;
    std::sort(v.rbegin(), v.rend());
    return v;
  };
  auto flip = [](Preference p) {
    return p == Preference::Preferred ? Preference::Dispreferred
           : p == Preference::Dispreferred ? Preference::Preferred
                                           : Preference::Tie;
  };
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = sorted_list(n), b = sorted_list(n), c = sorted_list(n);
    const auto ab = compare_edge_lists(a, b), bc = compare_edge_lists(b, c), ac = compare_edge_lists(a, c);
    if (compare_edge_lists(a, a) != Preference::Tie) ++law_bad;
    if (compare_edge_lists(b, a) != flip(ab)) ++law_bad;
    if (ab == Preference::Tie && bc == Preference::Tie && ac != Preference::Tie) ++law_bad;
    if (ab != Preference::Dispreferred && bc != Preference::Dispreferred && ac == Preference::Dispreferred) ++law_bad;
    // Shortening the last edge never makes a list worse.
    auto shorter = a;
    shorter.back() = std::max(0.0, shorter.back() - 0.5);
    if (compare_edge_lists(shorter, a) == Preference::Dispreferred) ++law_bad;
  }
  // Graph edges only grow with alpha.
  std::vector<Point2> pts(15);
  for (auto& p : pts) p = {u(rng), u(rng)};
  auto prev = build_connectivity_graph(pts, 0.0).edges;
  for (double a = 0.25; a < 8; a += 0.25) {
    auto cur = build_connectivity_graph(pts, a).edges;
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) ++mono_bad;
    prev = cur;
  }
  Verdict o;
  o.pass = mbst_bad == 0 && law_bad == 0 && mono_bad == 0;
  o.detail = fmt("%d mbst mismatches of 50; %d comparator law violations; %d monotonicity violations", mbst_bad,
                 law_bad, mono_bad);
  return o;
}

Verdict criterion8() {
  using ucon::testing_support::grid_connected;
  int forward_bad = 0, forward_runs = 0, separation_bad = 0, audit_bad = 0;
  for (auto fam : {GadgetFamily::Pairs, GadgetFamily::Segments, GadgetFamily::Squares})
    for (const auto& b : bundled_layouts()) {
      const auto g = build_gadget_instance(fam, b.formula, b.layout);
      audit_bad += static_cast<int>(audit_geometry(g).violations.size());
      for (const auto& a : satisfying_assignments(b.formula)) {
        ++forward_runs;
        if (!is_connected_at(assignment_to_selection(g, b.formula, a).points, g.alpha_star)) ++forward_bad;
      }
      // All gates closed: clause gadgets must not touch connectors.
      auto sel = assignment_to_selection(g, b.formula, std::vector<bool>(std::size_t(b.formula.num_vars), true));
      for (std::size_t i = 0; i < g.tags.size(); ++i) {
        const auto& r = g.tags[i].rule;
        if (r.kind == SelectionRule::Kind::Literal) sel.points[i] = g.tags[i].marks[std::size_t(r.mark_false)];
        if (r.kind == SelectionRule::Kind::Core) sel.points[i] = g.tags[i].marks[std::size_t(r.idle_mark)];
      }
      for (std::size_t i = 0; i < g.tags.size(); ++i) {
        const auto& role = g.tags[i].role;
        const bool inner = fam == GadgetFamily::Squares ? role == "core-square"
                                                        : (role == "clause" || role == "clause-gate");
        if (!inner) continue;
        for (std::size_t j = 0; j < g.tags.size(); ++j)
          if ((g.tags[j].role == "connector" || g.tags[j].role == "loose") &&
              dist(sel.points[i], sel.points[j]) <= 2 * g.alpha_star + 1e-9)
            ++separation_bad;
      }
    }
  const auto& c = bundled_layout("contradiction");
  std::mt19937_64 rng(81);
  int smoke_connected = 0;
  for (auto fam : {GadgetFamily::Pairs, GadgetFamily::Squares}) {
    const auto g = build_gadget_instance(fam, c.formula, c.layout);
    std::vector<Point2> pts(g.tags.size());
    for (int t = 0; t < 50000; ++t) {
      for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = g.tags[i].marks[std::uniform_int_distribution<std::size_t>(0, g.tags[i].marks.size() - 1)(rng)];
      smoke_connected += grid_connected(pts, 2 * g.alpha_star);
    }
  }
  Verdict o;
  o.pass = forward_bad == 0 && separation_bad == 0 && audit_bad == 0 && smoke_connected == 0;
  o.detail = fmt("%d/%d satisfying runs disconnected; %d gate contacts; %d audit violations; %d/100000 random "
                 "selections connected",
                 forward_bad, forward_runs, separation_bad, audit_bad, smoke_connected);
  return o;
}

Verdict criterion9() {
  constexpr double eps = 1e-9;
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(0, 10);
  auto element = [&](std::size_t i) {
    if (rng() % 2) return Element::fixed({u(rng), u(rng)}, i);
    return Element::seg({{u(rng), u(rng)}, {u(rng), u(rng)}}, i);
  };
  int steps = 0, sampled = 0, off = 0, mono_bad = 0, traces = 0;
  double worst = 0.0;
  while (steps < 500) {
    SupportSequence seq;
    const std::size_t len = 2 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) seq.push_back(element(i));
    const double lambda = std::uniform_real_distribution<double>(1.0, 8.0)(rng);
    auto state = initial_reach(seq[0], lambda);
    for (std::size_t i = 1; i < seq.size() && steps < 500; ++i) {
      ++steps;
      auto next = propagate_reach(state, seq[i], lambda, eps);
      if (!next) break;
      state = *next;
      for (Point2 q : sample_exact_reach(state, 24)) {
        ++sampled;
        const double e = std::abs(state.capsule.distance_to_base(q) - state.capsule.radius);
        worst = std::max(worst, e);
        if (e > eps * std::max(1.0, lambda)) ++off;
      }
    }
    ++traces;
    const auto b = min_lambda(seq, 1e-9);
    for (const auto& [l1, f1] : b.trace)
      for (const auto& [l2, f2] : b.trace)
        if (f1 && !f2 && l1 <= l2) ++mono_bad;
  }
  Verdict o;
  o.pass = off == 0 && mono_bad == 0 && sampled > 0;
  o.detail = fmt("%d steps, %d samples, %d off the boundary (worst %.2e); %d non-monotone pairs over %d traces",
                 steps, sampled, off, worst, mono_bad, traces);
  return o;
}

Verdict criterion10() {
  int exact_diff = 0, oracle_diff = 0;
  for (const auto& s : segment_instances()) {
    std::string ref_e, ref_o;
    for (unsigned threads : {1u, 4u, 8u}) {
      ExactOptions eo;
      eo.threads = threads;
      const auto e = solve_exact(s.inst, eo);
      const std::string je = dump(selection_to_json(e.selection)) + dump(solution_to_json(e.solution));
      OracleOptions oo;
      oo.grid = 100;
      oo.threads = threads;
      const auto r = brute_force_bcu(s.inst, oo);
      const std::string jo = dump(selection_to_json(r.selection)) + fmt("%.17g", r.alpha);
      if (threads == 1) {
        ref_e = je;
        ref_o = jo;
      } else {
        exact_diff += je != ref_e;
        oracle_diff += jo != ref_o;
      }
    }
  }
  Verdict o;
  o.pass = exact_diff == 0 && oracle_diff == 0;
  o.detail = fmt("%d exact and %d oracle results differ across threads {1,4,8} (oracle grid 100)", exact_diff,
                 oracle_diff);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> checks = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                        criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const int id = int(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = checks[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %s  [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
