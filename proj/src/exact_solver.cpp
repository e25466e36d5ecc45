#include "ucon/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <mutex>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "ucon/errors.hpp"
#include "ucon/log.hpp"

namespace ucon {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Point2 unit(Point2 v) {
  const double n = norm(v);
  return n > 0.0 ? (1.0 / n) * v : Point2{0.0, 0.0};
}

CapsuleBase base_of(Point2 a, Point2 b) {
  if (a == b) return a;
  return Segment2{a, b};
}

// Overlap of the capsule with the element as a base for the next step (no classification).
std::optional<CapsuleBase> advance(const Capsule& c, const Element& e, double eps) {
  if (!e.is_seg()) {
    if (c.distance_to_base(e.p) <= c.radius + eps) return CapsuleBase{e.p};
    return std::nullopt;
  }
  const auto iv = capsule_segment_interval(c, e.s, eps);
  if (!iv) return std::nullopt;
  return base_of(e.s.at(iv->t0), e.s.at(iv->t1));
}

bool on_half_circle(Point2 center, Point2 dir, double lambda, Point2 q, double tol) {
  return std::abs(dist(q, center) - lambda) <= tol && dot(q - center, dir) >= -tol;
}

}  // namespace

std::vector<std::size_t> sequence_key(const SupportSequence& seq) {
  std::vector<std::size_t> key;
  key.reserve(seq.size());
  for (const auto& e : seq) key.push_back(e.index);
  return key;
}

ReachState initial_reach(const Element& first, double lambda) {
  if (!first.is_seg() || first.s.a == first.s.b) {
    const Point2 p = first.is_seg() ? first.s.a : first.p;
    return {Capsule{p, lambda}, CaseB{p}, SinglePoint{p, 0.0}};
  }
  return {Capsule{first.s, lambda}, FullBoundary{}, Subsegment{first.s, 0.0, 1.0}};
}

bool on_exact_reach(const ReachState& state, Point2 q, double tol) {
  const double lambda = state.capsule.radius;
  return std::visit(
      overloaded{
          [](const CaseA&) { return false; },
          [&](const CaseB& b) { return std::abs(dist(q, b.p) - lambda) <= tol; },
          [&](const CaseC& c) { return on_half_circle(c.extremity, c.direction, lambda, q, tol); },
          [&](const CaseD& d) {
            return on_half_circle(d.ext1, unit(d.ext1 - d.ext2), lambda, q, tol) ||
                   on_half_circle(d.ext2, unit(d.ext2 - d.ext1), lambda, q, tol);
          },
          [&](const FullBoundary&) {
            return std::abs(state.capsule.distance_to_base(q) - lambda) <= tol;
          },
      },
      state.s_case);
}

std::optional<ReachState> propagate_reach(const ReachState& state, const Element& next,
                                          double lambda, double eps, double point_tol) {
  point_tol = std::max(point_tol, eps);
  const double tol = point_tol;
  if (!next.is_seg() || next.s.a == next.s.b) {
    const Point2 q = next.is_seg() ? next.s.a : next.p;
    if (state.capsule.distance_to_base(q) > state.capsule.radius + eps) return std::nullopt;
    SCase sc = on_exact_reach(state, q, tol) ? SCase{CaseB{q}} : SCase{CaseA{}};
    return ReachState{Capsule{q, lambda}, sc, SinglePoint{q, 0.0}};
  }
  const auto iv = capsule_segment_interval(state.capsule, next.s, eps);
  if (!iv) return std::nullopt;
  const Point2 a = next.s.at(iv->t0);
  const Point2 b = next.s.at(iv->t1);
  ReachState out{Capsule{base_of(a, b), lambda}, CaseA{}, EmptyOverlap{}};
  if ((iv->t1 - iv->t0) * next.s.length() <= point_tol) {
    const double tm = 0.5 * (iv->t0 + iv->t1);
    const Point2 m = next.s.at(tm);
    out.overlap = SinglePoint{m, tm};
    if (on_exact_reach(state, a, tol) || on_exact_reach(state, b, tol) ||
        on_exact_reach(state, m, tol))
      out.s_case = CaseB{m};
    return out;
  }
  out.overlap = Subsegment{{a, b}, iv->t0, iv->t1};
  const bool fa = on_exact_reach(state, a, tol);
  const bool fb = on_exact_reach(state, b, tol);
  if (fa && fb) out.s_case = CaseD{a, b};
  else if (fa) out.s_case = CaseC{a, unit(a - b)};
  else if (fb) out.s_case = CaseC{b, unit(b - a)};
  return out;
}

std::vector<Point2> sample_exact_reach(const ReachState& state, int count) {
  std::vector<Point2> out;
  if (count <= 0) return out;
  const double lambda = state.capsule.radius;
  auto arc = [&](Point2 c, double from, double span, int k) {
    for (int i = 0; i < k; ++i) {
      const double th = from + span * (k == 1 ? 0.5 : static_cast<double>(i) / (k - 1));
      out.push_back({c.x + lambda * std::cos(th), c.y + lambda * std::sin(th)});
    }
  };
  auto half = [&](Point2 c, Point2 dir, int k) {
    const double mid = std::atan2(dir.y, dir.x);
    arc(c, mid - std::numbers::pi / 2, std::numbers::pi, k);
  };
  std::visit(overloaded{
                 [](const CaseA&) {},
                 [&](const CaseB& b) {
                   for (int i = 0; i < count; ++i) {
                     const double th = 2.0 * std::numbers::pi * i / count;
                     out.push_back({b.p.x + lambda * std::cos(th), b.p.y + lambda * std::sin(th)});
                   }
                 },
                 [&](const CaseC& c) { half(c.extremity, c.direction, count); },
                 [&](const CaseD& d) {
                   half(d.ext1, unit(d.ext1 - d.ext2), count / 2);
                   half(d.ext2, unit(d.ext2 - d.ext1), count - count / 2);
                 },
                 [&](const FullBoundary&) {
                   if (const auto* p = std::get_if<Point2>(&state.capsule.base)) {
                     for (int i = 0; i < count; ++i) {
                       const double th = 2.0 * std::numbers::pi * i / count;
                       out.push_back({p->x + lambda * std::cos(th), p->y + lambda * std::sin(th)});
                     }
                     return;
                   }
                   const auto& s = std::get<Segment2>(state.capsule.base);
                   const Point2 u = unit(s.direction());
                   const Point2 n{-u.y, u.x};
                   const double len = s.length();
                   const double perim = 2.0 * len + 2.0 * std::numbers::pi * lambda;
                   for (int i = 0; i < count; ++i) {
                     double t = perim * i / count;
                     if (t < len) {
                       out.push_back(s.a + t * u + lambda * n);
                       continue;
                     }
                     t -= len;
                     if (t < std::numbers::pi * lambda) {
                       const double th = std::atan2(n.y, n.x) - t / lambda;
                       out.push_back(s.b + lambda * Point2{std::cos(th), std::sin(th)});
                       continue;
                     }
                     t -= std::numbers::pi * lambda;
                     if (t < len) {
                       out.push_back(s.b - t * u - lambda * n);
                       continue;
                     }
                     t -= len;
                     const double th = std::atan2(-n.y, -n.x) - t / lambda;
                     out.push_back(s.a + lambda * Point2{std::cos(th), std::sin(th)});
                   }
                 },
             },
             state.s_case);
  return out;
}

bool reach_feasible(const SupportSequence& seq, double lambda) {
  if (seq.size() < 2) throw std::invalid_argument("support sequence needs >= 2 elements");
  Capsule c = initial_reach(seq.front(), lambda).capsule;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto base = advance(c, seq[i], 0.0);
    if (!base) return false;
    c = Capsule{*base, lambda};
  }
  return true;
}

namespace {

double element_min_distance(const Element& a, const Element& b) {
  if (!a.is_seg() && !b.is_seg()) return dist(a.p, b.p);
  if (!a.is_seg()) return point_segment_distance(a.p, b.s).distance;
  if (!b.is_seg()) return point_segment_distance(b.p, a.s).distance;
  return segment_segment_distance(a.s, b.s).distance;
}

double element_max_distance(const Element& a, const Element& b) {
  const Segment2 sa = a.is_seg() ? a.s : Segment2{a.p, a.p};
  const Segment2 sb = b.is_seg() ? b.s : Segment2{b.p, b.p};
  return segment_segment_max_distance(sa, sb);
}

}  // namespace

LambdaBracket min_lambda(const SupportSequence& seq, double delta, int max_iter) {
  if (!(delta > 0.0)) throw std::invalid_argument("min_lambda: delta must be positive");
  LambdaBracket br;
  double lo = 0.0;
  double cap = 0.0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    lo = std::max(lo, element_min_distance(seq[i], seq[i + 1]));
    cap = std::max(cap, element_max_distance(seq[i], seq[i + 1]));
  }
  auto test = [&](double lambda) {
    const bool ok = reach_feasible(seq, lambda);
    br.trace.emplace_back(lambda, ok);
    return ok;
  };
  if (test(lo)) {
    br.lo = br.hi = lo;
    return br;
  }
  // Every point of each element is within `cap` of every point of the next one.
  cap = std::max(cap, lo);
  double step = std::max(lo * 1e-3, delta);
  double hi = std::min(lo + step, cap);
  while (hi < cap && !test(hi)) {
    lo = hi;
    step *= 2.0;
    hi = std::min(lo + step, cap);
    if (++br.iterations > max_iter)
      throw PrecisionExhausted("min_lambda: bracketing did not terminate", lo, hi);
  }
  if (hi >= cap && !reach_feasible(seq, hi)) {
    // Rounding at the cap; nudge upward until feasible.
    double bump = std::max(delta, std::abs(hi) * 1e-15);
    while (!test(hi + bump)) {
      bump *= 2.0;
      if (++br.iterations > max_iter)
        throw PrecisionExhausted("min_lambda: upper bound infeasible", lo, hi + bump);
    }
    hi += bump;
  }
  while (hi - lo > delta) {
    if (++br.iterations > max_iter)
      throw PrecisionExhausted("min_lambda: iteration cap reached", lo, hi);
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi)
      throw PrecisionExhausted("min_lambda: bracket below floating resolution", lo, hi);
    if (test(mid)) hi = mid;
    else lo = mid;
  }
  br.lo = lo;
  br.hi = hi;
  return br;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Beta: return "beta";
    case Outcome::AlphaFail: return "alpha";
    case Outcome::GammaFail: return "gamma";
    case Outcome::DeltaFail: return "delta";
    case Outcome::EmptyFail: return "empty";
  }
  return "?";
}

CriticalPath critical_path(const SupportSequence& seq, double delta, double eps) {
  CriticalPath cp;
  cp.sequence = seq;
  const auto br = min_lambda(seq, delta);
  const double lambda = br.hi;
  cp.lambda = lambda;
  // A tangency evaluated `width` above its true Λ spreads into a chord of length
  // ~sqrt(Λ*width); rounding alone contributes a few ulps of Λ to the width.
  const double width = std::max(br.hi - br.lo, 8.0 * std::numeric_limits<double>::epsilon() * lambda);
  const double point_tol = std::max(eps, 16.0 * std::sqrt(std::max(lambda, eps) * width));
  const double edge_tol = std::max(100.0 * eps, 100.0 * width);

  const std::size_t m = seq.size();
  std::vector<ReachState> states;
  states.reserve(m - 1);
  states.push_back(initial_reach(seq[0], lambda));
  for (std::size_t i = 1; i + 1 < m; ++i) {
    auto next = propagate_reach(states.back(), seq[i], lambda, eps, point_tol);
    if (!next) return cp;
    states.push_back(std::move(*next));
  }

  const Capsule& last = states.back().capsule;
  const Element& em = seq[m - 1];
  Point2 touch;
  double gap = 0.0;
  if (!em.is_seg()) {
    touch = em.p;
    gap = last.distance_to_base(touch);
  } else {
    const auto iv = capsule_segment_interval(last, em.s, eps);
    if (!iv) return cp;
    if (const auto* p = std::get_if<Point2>(&last.base)) {
      const auto n = point_segment_distance(*p, em.s);
      touch = n.point;
      gap = n.distance;
    } else {
      const auto sp = segment_segment_distance(em.s, std::get<Segment2>(last.base));
      touch = em.s.at(sp.t_first);
      gap = sp.distance;
    }
    if (gap >= lambda - point_tol && (iv->t1 - iv->t0) * em.s.length() > point_tol) {
      cp.outcome = Outcome::DeltaFail;
      return cp;
    }
  }
  if (gap > lambda + point_tol) return cp;
  if (gap < lambda - point_tol) {
    cp.outcome = Outcome::AlphaFail;
    return cp;
  }

  // The touch point is in S exactly when walking back through nearest base points keeps
  // every edge at length Λ; a slack edge means the touch is not reachable by a tight path.
  std::vector<Point2> pts(m);
  pts[m - 1] = touch;
  for (std::size_t i = m - 1; i-- > 0;) pts[i] = states[i].capsule.nearest_on_base(pts[i + 1]);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (std::abs(dist(pts[i], pts[i + 1]) - lambda) > edge_tol) {
      cp.outcome = Outcome::GammaFail;
      return cp;
    }
  }
  cp.outcome = Outcome::Beta;
  cp.points = std::move(pts);
  return cp;
}

const char* point_type_name(PointType t) {
  switch (t) {
    case PointType::Type1: return "type1";
    case PointType::Type2: return "type2";
    case PointType::Type3: return "type3";
    case PointType::NotLocallyOptimal: return "not-locally-optimal";
  }
  return "?";
}

PointType classify_point_type(Point2 p, const Segment2& seg,
                              const std::vector<Point2>& incident_longest, double eps) {
  if (incident_longest.empty())
    throw std::invalid_argument("classify_point_type: no incident edges given");
  const Point2 u = unit(seg.direction());
  const bool at_a = dist(p, seg.a) <= eps;
  const bool at_b = dist(p, seg.b) <= eps;
  if (at_a || at_b || seg.a == seg.b) {
    const Point2 out = at_a ? -1.0 * u : u;
    for (const auto& q : incident_longest)
      if (seg.a == seg.b || dot(unit(q - p), out) >= -eps) return PointType::Type1;
    return PointType::NotLocallyOptimal;
  }
  bool plus = false, minus = false;
  for (const auto& q : incident_longest) {
    const double c = dot(unit(q - p), u);
    if (std::abs(c) <= eps) return PointType::Type2;
    (c > 0.0 ? plus : minus) = true;
  }
  return plus && minus ? PointType::Type3 : PointType::NotLocallyOptimal;
}

std::vector<SupportSequence> enumerate_sequences(const std::vector<Element>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::size_t> segs;
  for (std::size_t i = 0; i < n; ++i)
    if (elements[i].is_seg()) segs.push_back(i);

  std::vector<std::pair<std::vector<std::size_t>, SupportSequence>> keyed;
  std::vector<std::size_t> interior;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    for (std::size_t a = 0; a < n; ++a) {
      if (used[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || used[b] || elements[a].index >= elements[b].index) continue;
        SupportSequence seq;
        seq.push_back(elements[a]);
        for (auto i : interior) seq.push_back(elements[i]);
        seq.push_back(elements[b]);
        std::vector<std::size_t> key{interior.size()};
        for (const auto& e : seq) key.push_back(e.index);
        keyed.emplace_back(std::move(key), std::move(seq));
      }
    }
    for (auto s : segs) {
      if (used[s]) continue;
      used[s] = 1;
      interior.push_back(s);
      rec();
      interior.pop_back();
      used[s] = 0;
    }
  };
  rec();
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SupportSequence> out;
  out.reserve(keyed.size());
  for (auto& [k, s] : keyed) out.push_back(std::move(s));
  return out;
}

namespace {

struct SearchContext {
  std::vector<Element> originals;  // Fixed or Seg per region, in instance order
  double delta_internal = 0.0;
  double eps = 0.0;
  double tol = 0.0;
  std::size_t budget = 0;
  unsigned threads = 1;

  std::size_t nodes = 0;
  std::size_t sequences = 0;
  std::map<std::vector<long long>, double> seen;  // largest bound searched per subproblem

  bool have_best = false;
  SpanningSolution best;
  std::vector<Point2> best_points;
  std::vector<LevelRecord> best_levels;
};

using Placement = std::vector<std::optional<Point2>>;

void consider_leaf(SearchContext& ctx, const std::vector<Point2>& pts,
                   const std::vector<LevelRecord>& levels) {
  auto sol = mbst(pts);
  if (ctx.have_best &&
      compare_edge_lists(sol.lengths_desc, ctx.best.lengths_desc, ctx.tol) != Preference::Preferred)
    return;
  ctx.have_best = true;
  ctx.best = std::move(sol);
  ctx.best_points = pts;
  ctx.best_levels = levels;
}

// Remaining segments placed one at a time at the point nearest to what is already placed.
std::vector<Point2> greedy_completion(const SearchContext& ctx, const Placement& placed) {
  std::vector<Point2> pts(placed.size());
  std::vector<Point2> have;
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (placed[i]) {
      pts[i] = *placed[i];
      have.push_back(*placed[i]);
    } else {
      todo.push_back(i);
    }
  }
  if (have.empty() && !todo.empty()) {
    const auto& s = ctx.originals[todo.front()].s;
    pts[todo.front()] = s.at(0.5);
    have.push_back(pts[todo.front()]);
    todo.erase(todo.begin());
  }
  while (!todo.empty()) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = 0;
    Point2 where;
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const auto& s = ctx.originals[todo[k]].s;
      for (const auto& h : have) {
        const auto n = point_segment_distance(h, s);
        if (n.distance < best) {
          best = n.distance;
          pick = k;
          where = n.point;
        }
      }
    }
    pts[todo[pick]] = where;
    have.push_back(where);
    todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return pts;
}

std::vector<long long> memo_key(const SearchContext& ctx, const Placement& placed) {
  std::vector<long long> key;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!ctx.originals[i].is_seg()) continue;
    if (!placed[i]) {
      key.push_back(-1);
      continue;
    }
    key.push_back(std::llround(placed[i]->x / ctx.tol));
    key.push_back(std::llround(placed[i]->y / ctx.tol));
  }
  return key;
}

std::vector<CriticalPath> evaluate_all(const SearchContext& ctx,
                                       const std::vector<SupportSequence>& seqs) {
  std::vector<CriticalPath> out(seqs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out[i] = critical_path(seqs[i], ctx.delta_internal, ctx.eps);
  };
  const std::size_t t = std::min<std::size_t>(std::max(1u, ctx.threads), seqs.size());
  if (t <= 1) {
    work(0, seqs.size());
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  const std::size_t chunk = (seqs.size() + t - 1) / t;
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t b = k * chunk, e = std::min(seqs.size(), b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      try {
        work(b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void search(SearchContext& ctx, const Placement& placed, double bound,
            std::vector<LevelRecord>& levels) {
  if (++ctx.nodes > ctx.budget)
    throw BudgetExceeded("solve_exact: node budget of " + std::to_string(ctx.budget) +
                             " exceeded",
                         static_cast<double>(ctx.nodes));
  {
    const auto [it, fresh] = ctx.seen.try_emplace(memo_key(ctx, placed), bound);
    if (!fresh) {
      if (it->second >= bound) return;
      it->second = bound;
    }
  }

  consider_leaf(ctx, greedy_completion(ctx, placed), levels);

  std::vector<Element> elems;
  bool any_seg = false;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (placed[i]) {
      elems.push_back(Element::fixed(*placed[i], i));
    } else {
      elems.push_back(ctx.originals[i]);
      any_seg = true;
    }
  }
  if (!any_seg) return;

  auto seqs = enumerate_sequences(elems);
  std::erase_if(seqs, [](const SupportSequence& s) {
    return std::none_of(s.begin(), s.end(), [](const Element& e) { return e.is_seg(); });
  });
  ctx.sequences += seqs.size();
  auto paths = evaluate_all(ctx, seqs);

  std::vector<const CriticalPath*> cands;
  for (const auto& cp : paths)
    if (cp.outcome == Outcome::Beta && cp.lambda <= bound + ctx.tol &&
        cp.lambda <= ctx.best.bottleneck + ctx.tol)
      cands.push_back(&cp);
  std::stable_sort(cands.begin(), cands.end(), [](const CriticalPath* a, const CriticalPath* b) {
    if (a->lambda != b->lambda) return a->lambda < b->lambda;
    return sequence_key(a->sequence) < sequence_key(b->sequence);
  });
  log_debug("node " + std::to_string(ctx.nodes) + ": " + std::to_string(seqs.size()) +
            " sequences, " + std::to_string(cands.size()) + " candidates");

  for (const CriticalPath* cp : cands) {
    if (cp->lambda > ctx.best.bottleneck + ctx.tol) continue;
    Placement child = placed;
    for (std::size_t j = 0; j < cp->sequence.size(); ++j)
      if (cp->sequence[j].is_seg()) child[cp->sequence[j].index] = cp->points[j];
    levels.push_back({sequence_key(cp->sequence), cp->lambda, cp->points});
    search(ctx, child, cp->lambda, levels);
    levels.pop_back();
  }
}

ExactResult solve_points_and_segments(const std::vector<Element>& originals, double scale,
                                      const ExactOptions& opts, std::size_t budget) {
  SearchContext ctx;
  ctx.originals = originals;
  const double delta = opts.delta > 0.0 ? opts.delta : 1e-9 * scale;
  ctx.eps = opts.eps > 0.0 ? opts.eps : 1e-9 * scale;
  // Bisect well past delta: witness points on tangent steps are only accurate to sqrt(width).
  ctx.delta_internal = std::min(delta, 1e-3 * ctx.eps);
  ctx.tol = std::max(1e-7 * scale, 100.0 * ctx.eps);
  ctx.budget = budget;
  ctx.threads = opts.threads;

  Placement placed(originals.size());
  for (std::size_t i = 0; i < originals.size(); ++i)
    if (!originals[i].is_seg()) placed[i] = originals[i].p;
  std::vector<LevelRecord> levels;
  search(ctx, placed, std::numeric_limits<double>::infinity(), levels);

  ExactResult res;
  res.selection.points = ctx.best_points;
  res.solution = ctx.best;
  res.levels = ctx.best_levels;
  res.nodes = ctx.nodes;
  res.sequences_evaluated = ctx.sequences;
  return res;
}

}  // namespace

ExactResult solve_exact(const Instance& inst, const ExactOptions& opts) {
  if (inst.regions.empty()) throw std::invalid_argument("solve_exact: empty instance");
  std::vector<std::size_t> pair_ids;
  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    const auto& r = inst.regions[i];
    if (std::holds_alternative<PointPair>(r)) pair_ids.push_back(i);
    else if (!std::holds_alternative<FixedPoint>(r) && !std::holds_alternative<SegmentRegion>(r))
      throw std::invalid_argument(std::string("solve_exact: unsupported region type '") +
                                  region_kind(r) + "' at index " + std::to_string(i));
  }
  if (pair_ids.size() > 20)
    throw BudgetExceeded("solve_exact: " + std::to_string(pair_ids.size()) +
                             " point pairs exceed the 2^20 branch cap",
                         std::ldexp(1.0, static_cast<int>(pair_ids.size())));
  double scale = inst.bounds().diameter();
  if (!(scale > 0.0)) scale = 1.0;

  std::vector<Element> base;
  for (std::size_t i = 0; i < inst.regions.size(); ++i) {
    const auto& r = inst.regions[i];
    if (const auto* f = std::get_if<FixedPoint>(&r)) base.push_back(Element::fixed(f->p, i));
    else if (const auto* s = std::get_if<SegmentRegion>(&r))
      base.push_back(s->s.a == s->s.b ? Element::fixed(s->s.a, i) : Element::seg(s->s, i));
    else base.push_back(Element::fixed(std::get<PointPair>(r).a, i));
  }

  const double eps = opts.eps > 0.0 ? opts.eps : 1e-9 * scale;
  std::optional<ExactResult> best;
  std::size_t used = 0;
  std::size_t seqs = 0;
  const std::size_t branches = std::size_t{1} << pair_ids.size();
  for (std::size_t mask = 0; mask < branches; ++mask) {
    auto elems = base;
    for (std::size_t k = 0; k < pair_ids.size(); ++k) {
      const auto& pr = std::get<PointPair>(inst.regions[pair_ids[k]]);
      elems[pair_ids[k]].p = (mask >> k) & 1 ? pr.b : pr.a;
    }
    if (opts.node_budget <= used)
      throw BudgetExceeded("solve_exact: node budget of " + std::to_string(opts.node_budget) +
                               " exceeded",
                           static_cast<double>(used + 1));
    auto res = solve_points_and_segments(elems, scale, opts, opts.node_budget - used);
    used += res.nodes;
    seqs += res.sequences_evaluated;
    if (!best || compare_edge_lists(res.solution.lengths_desc, best->solution.lengths_desc,
                                    std::max(1e-7 * scale, 100.0 * eps)) == Preference::Preferred)
      best = std::move(res);
  }
  best->nodes = used;
  best->sequences_evaluated = seqs;
  return std::move(*best);
}

}  // namespace ucon
