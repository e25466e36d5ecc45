#include <algorithm>
#include <map>
#include <stdexcept>

#include "ucon/gadgets.hpp"

namespace ucon {

namespace {

constexpr int kRowPitch = 40;
constexpr int kCopyPitch = 20;
constexpr int kLow = 0;
constexpr int kHigh = 1;

struct Cell {
  int dx, dy, blue;
};

// One period of a variable: a rail, two rows and a loop closing over the right side.
constexpr Cell kPeriod[] = {
    {0, 6, kHigh},   {2, 6, kHigh},   {4, 6, kHigh},   {6, 6, kHigh},   {6, 3, kLow},    {8, 3, kLow},
    {10, 3, kLow},   {12, 3, kLow},   {14, 3, kLow},   {6, 9, kLow},    {8, 9, kLow},    {10, 9, kLow},
    {12, 9, kLow},   {14, 9, kLow},   {14, 0, kHigh},  {16, 0, kHigh},  {18, 0, kHigh},  {18, 2, kHigh},
    {18, 4, kHigh},  {18, 6, kHigh},  {18, 8, kHigh},  {18, 10, kHigh}, {18, 12, kHigh}, {16, 12, kHigh},
    {14, 12, kHigh}, {14, 6, kHigh},  {16, 6, kHigh},
};

SelectionRule variable_rule(int var, int mark_true) {
  SelectionRule r;
  r.kind = SelectionRule::Kind::Variable;
  r.index = var;
  r.mark_true = mark_true;
  r.mark_false = 1 - mark_true;
  return r;
}

SelectionRule fixed_rule(int mark) {
  SelectionRule r;
  r.mark_true = r.mark_false = mark;
  return r;
}

class PairEmitter {
 public:
  explicit PairEmitter(bool segments) : segments_(segments) {
    out_.family = segments ? GadgetFamily::Segments : GadgetFamily::Pairs;
    out_.alpha_star = 1.0;
  }

  void add(int x, int y, std::string role, int owner, std::vector<std::string> colors, SelectionRule rule) {
    const Point2 lo{double(x), double(y)}, hi{double(x), double(y + 1)};
    if (segments_)
      out_.instance.regions.push_back(SegmentRegion{{lo, hi}});
    else
      out_.instance.regions.push_back(PointPair{lo, hi});
    out_.tags.push_back({std::move(role), owner, {lo, hi}, std::move(colors), rule});
  }

  GadgetInstance take() { return std::move(out_); }

 private:
  bool segments_;
  GadgetInstance out_;
};

std::vector<std::string> two_tone(int blue) {
  std::vector<std::string> c(2);
  c[static_cast<std::size_t>(blue)] = "blue";
  c[static_cast<std::size_t>(1 - blue)] = "red";
  return c;
}

// Chain from the pair at (x, ya) to a stub whose low point is at y = target; returns the stub x.
int route_chain(PairEmitter& em, int x, int ya, int target, int owner, SelectionRule rule) {
  const int dir = target > ya ? 1 : -1;
  const int delta = (target - ya) * dir;
  if (delta < 2) throw std::logic_error("pair chain too short");
  int y;
  if (delta % 2 == 0) {
    y = ya + 2 * dir;
  } else {
    ++x;
    y = ya + dir;
  }
  em.add(x, y, "connector", owner, {"gray", "gray"}, rule);
  while (y != target) {
    y += 2 * dir;
    em.add(x, y, "connector", owner, {"gray", "gray"}, rule);
  }
  return x;
}

struct Gate {
  int x;
  bool bottom;
  int slot;
};

void emit_ring(PairEmitter& em, int clause, int row, std::vector<Gate> gates) {
  const int yb = kRowPitch * row + 12;
  const int yt = yb + 6;
  std::vector<Gate> bottom, top;
  for (const auto& g : gates) (g.bottom ? bottom : top).push_back(g);
  std::sort(bottom.begin(), bottom.end(), [](auto& a, auto& b) { return a.x < b.x; });
  std::sort(top.begin(), top.end(), [](auto& a, auto& b) { return a.x > b.x; });
  int xl = gates.front().x, xr = xl;
  for (const auto& g : gates) {
    xl = std::min(xl, g.x);
    xr = std::max(xr, g.x);
  }
  xl -= 4;
  xr += 4;

  struct Elem {
    int x, y;
    int gate = -1;  // slot
    bool bottom = false;
  };
  std::vector<Elem> ring;
  int cx = xl;
  ring.push_back({xl, yb + 1});
  for (const auto& g : bottom) {
    while (cx + 2 <= g.x - 2) ring.push_back({cx += 2, yb + 1});
    if (cx == g.x - 3) ring.push_back({cx = g.x - 2, yb + 1});
    ring.push_back({g.x - 1, yb});
    ring.push_back({g.x, yb, g.slot, true});
    ring.push_back({cx = g.x + 2, yb + 1});
  }
  while (cx + 2 <= xr) ring.push_back({cx += 2, yb + 1});
  if (cx == xr - 1) ring.push_back({cx = xr, yb + 1});
  ring.push_back({xr, yb + 3});
  ring.push_back({xr, yt - 1});
  for (const auto& g : top) {
    while (cx - 2 >= g.x + 2) ring.push_back({cx -= 2, yt - 1});
    if (cx == g.x + 3) ring.push_back({cx = g.x + 2, yt - 1});
    ring.push_back({g.x + 1, yt});
    ring.push_back({g.x, yt, g.slot, false});
    ring.push_back({cx = g.x - 2, yt - 1});
  }
  while (cx - 2 >= xl) ring.push_back({cx -= 2, yt - 1});
  if (cx == xl + 1) ring.push_back({cx = xl, yt - 1});
  ring.push_back({xl, yb + 3});

  bool last_bottom = false;
  for (const auto& e : ring)
    if (e.gate >= 0) last_bottom = e.bottom;
  bool prev_bottom = last_bottom;
  for (const auto& e : ring) {
    if (e.gate >= 0) {
      SelectionRule r;
      r.kind = SelectionRule::Kind::Literal;
      r.index = clause;
      r.slot = e.gate;
      r.mark_true = e.bottom ? kLow : kHigh;
      r.mark_false = 1 - r.mark_true;
      em.add(e.x, e.y, "clause-gate", clause,
             e.bottom ? std::vector<std::string>{"green", "brown"} : std::vector<std::string>{"brown", "green"}, r);
      prev_bottom = e.bottom;
    } else {
      em.add(e.x, e.y, "clause", clause, {"brown", "brown"}, fixed_rule(prev_bottom ? kLow : kHigh));
    }
  }
}

}  // namespace

GadgetInstance build_pair_instance(const Formula& f, const FormulaLayout& layout, bool segments) {
  check_layout(f, layout);
  PairEmitter em(segments);
  const int n = f.num_vars;

  for (int v = 0; v < n; ++v) {
    const int yv = kRowPitch * layout.variable_rows[static_cast<std::size_t>(v)];
    const int last = variable_last_column(layout, f, v);
    for (int c = 0; c <= last; ++c)
      for (const auto& cell : kPeriod) {
        const bool ref = c == 0 && cell.dx == 0 && cell.dy == 6;
        em.add(kCopyPitch * c + cell.dx, yv + cell.dy, ref ? "reference" : "variable", v, two_tone(cell.blue),
               variable_rule(v, cell.blue));
      }
  }

  std::vector<int> by_row(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_row[static_cast<std::size_t>(v)] = v;
  std::sort(by_row.begin(), by_row.end(), [&](int a, int b) {
    return layout.variable_rows[static_cast<std::size_t>(a)] < layout.variable_rows[static_cast<std::size_t>(b)];
  });
  for (std::size_t i = 0; i + 1 < by_row.size(); ++i) {
    const int lo = by_row[i], up = by_row[i + 1];
    const int yl = kRowPitch * layout.variable_rows[static_cast<std::size_t>(lo)];
    const int yu = kRowPitch * layout.variable_rows[static_cast<std::size_t>(up)];
    const int y1 = yl + 20;
    for (int y = yl + 8; y <= y1; y += 2) em.add(0, y, "loose", -1, {"gray", "gray"}, variable_rule(lo, kHigh));
    em.add(1, y1, "loose", -1, {"gray", "gray"}, variable_rule(up, kHigh));
    em.add(2, y1, "loose", -1, {"gray", "gray"}, variable_rule(up, kHigh));
    for (int y = y1 + 2; y <= yu + 4; y += 2) em.add(2, y, "loose", -1, {"gray", "gray"}, variable_rule(up, kHigh));
  }

  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    const auto& node = layout.clauses[k];
    const int yb = kRowPitch * node.row + 12;
    const int yt = yb + 6;
    std::vector<Gate> gates;
    for (int j = 0; j < 3; ++j) {
      const Literal lit = f.clauses[k][static_cast<std::size_t>(j)];
      const int rv = layout.variable_rows[static_cast<std::size_t>(lit.var)];
      const int yv = kRowPitch * rv;
      const int x0 = kCopyPitch * node.columns[static_cast<std::size_t>(j)];
      const bool above = node.row > rv;
      int ax, ay, mark;
      if (above) {
        if (!lit.negated) ax = x0 + 2, ay = yv + 6, mark = kHigh;
        else ax = x0 + 10, ay = yv + 9, mark = kLow;
      } else {
        if (!lit.negated) ax = x0 + 10, ay = yv + 3, mark = kLow;
        else ax = x0 + 2, ay = yv + 6, mark = kHigh;
      }
      const int target = above ? yb - 3 : yt + 3;
      const int gx = route_chain(em, ax, ay, target, static_cast<int>(k), variable_rule(lit.var, mark));
      gates.push_back({gx, above, j});
    }
    emit_ring(em, static_cast<int>(k), node.row, gates);
  }
  return em.take();
}

}  // namespace ucon
