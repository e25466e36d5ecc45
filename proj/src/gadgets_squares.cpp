#include <algorithm>
#include <stdexcept>

#include "ucon/gadgets.hpp"

namespace ucon {

namespace {

constexpr int kRowPitch = 120;
constexpr int kClauseOffset = 60;
constexpr int kCopyPitch = 45;
constexpr int kLow = 0;
constexpr int kHigh = 1;

struct Cell {
  int x, y;
  int bx, by;  // blue corner
  int rx, ry;  // red corner
};

constexpr Cell kPeriod[] = {
    {13, 0, 13, 1, 13, 0},     {23, 0, 24, 0, 24, 1},     {4, 3, 4, 4, 5, 4},        {9, 3, 9, 4, 10, 4},
    {27, 3, 27, 4, 28, 4},     {32, 3, 32, 4, 33, 4},     {0, 7, 1, 8, 1, 7},        {13, 7, 13, 7, 14, 7},
    {18, 7, 18, 7, 19, 7},     {23, 7, 23, 7, 24, 7},     {36, 7, 36, 7, 36, 8},     {0, 12, 1, 13, 1, 12},
    {36, 12, 36, 12, 36, 13},  {4, 17, 4, 17, 5, 18},     {13, 17, 14, 18, 13, 18},  {18, 17, 19, 18, 18, 18},
    {23, 17, 24, 18, 23, 18},  {36, 17, 36, 17, 36, 18},  {9, 21, 10, 21, 9, 21},    {27, 21, 28, 21, 27, 21},
    {32, 21, 33, 21, 32, 21},  {13, 24, 13, 25, 13, 24},  {23, 24, 24, 24, 24, 25},
};

struct Attach {
  int x, y;     // designated low corner, relative to the copy
  int blue;     // kLow or kHigh
  bool up;
};
constexpr Attach kTL{13, 24, kHigh, true};
constexpr Attach kTR{24, 24, kLow, true};
constexpr Attach kBL{13, 0, kHigh, false};
constexpr Attach kBR{24, 0, kLow, false};

SelectionRule variable_rule(int var, int mark_true) {
  SelectionRule r;
  r.kind = SelectionRule::Kind::Variable;
  r.index = var;
  r.mark_true = mark_true;
  r.mark_false = 1 - mark_true;
  return r;
}

SelectionRule literal_rule(int clause, int slot, int mark_true) {
  SelectionRule r;
  r.kind = SelectionRule::Kind::Literal;
  r.index = clause;
  r.slot = slot;
  r.mark_true = mark_true;
  r.mark_false = 1 - mark_true;
  return r;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

class SquareEmitter {
 public:
  SquareEmitter() {
    out_.family = GadgetFamily::Squares;
    out_.alpha_star = 2.5;
  }

  void add(int x, int y, std::vector<Point2> marks, std::string role, int owner, std::vector<std::string> colors,
           SelectionRule rule) {
    out_.instance.regions.push_back(Square{{double(x), double(y)}, 1.0});
    out_.tags.push_back({std::move(role), owner, std::move(marks), std::move(colors), rule});
  }

  // Square whose left side carries the designated corners (x, y) and (x, y+1).
  void vertical(int x, int y, std::string role, int owner, SelectionRule rule) {
    add(x, y, {{double(x), double(y)}, {double(x), double(y + 1)}}, std::move(role), owner, {"gray", "gray"}, rule);
  }

  GadgetInstance take() { return std::move(out_); }

 private:
  GadgetInstance out_;
};

// Chain of vertical squares from the attach corner (xa, ya) to a final square at (xt, yt).
void route_chain(SquareEmitter& em, int xa, int ya, int xt, int yt, int owner, SelectionRule rule) {
  const int dir = yt > ya ? 1 : -1;
  const int dy = (yt - ya) * dir - 5;
  const int dx = xt - xa;
  if (dx % 3 != 0) throw std::logic_error("square chain: horizontal offset not a multiple of 3");
  const int diff = dx / 3;
  int s = -1;
  for (int c = std::abs(diff); c <= 20; ++c)
    if ((c - diff) % 2 == 0 && dy - 4 * c >= 0 && (dy - 4 * c) % 5 == 0) {
      s = c;
      break;
    }
  if (s < 0) throw std::logic_error("square chain: no route of " + std::to_string(dy + 5) + " rows");
  int x = xa, y = ya + 5 * dir;
  em.vertical(x, y, "connector", owner, rule);
  const int sign = diff >= 0 ? 1 : -1;
  for (int i = 0; i < s; ++i) {
    const int step = i < std::abs(diff) ? sign : ((i - std::abs(diff)) % 2 == 0 ? 1 : -1);
    x += 3 * step;
    y += 4 * dir;
    em.vertical(x, y, "connector", owner, rule);
  }
  while (y != yt) {
    y += 5 * dir;
    em.vertical(x, y, "connector", owner, rule);
  }
  if (x != xt) throw std::logic_error("square chain missed its column");
}

int pick_offset(int x, int residue) {
  for (int d : {0, 3, -3, 6, -6})
    if (mod(x + d, 5) == mod(residue, 5)) return x + d;
  throw std::logic_error("unreachable residue");
}

struct Slot {
  int slot;
  int x, y;  // attach corner, absolute
  bool from_below;
  int var;
  int true_when_var;  // chain mark when the variable is true
};

}  // namespace

GadgetInstance build_square_instance(const Formula& f, const FormulaLayout& layout) {
  check_layout(f, layout);
  SquareEmitter em;
  const int n = f.num_vars;

  for (int v = 0; v < n; ++v) {
    const int yv = kRowPitch * layout.variable_rows[static_cast<std::size_t>(v)];
    const int last = variable_last_column(layout, f, v);
    for (int c = 0; c <= last; ++c) {
      const int x0 = kCopyPitch * c;
      const int blue_true = c % 2 == 0 ? 0 : 1;
      for (const auto& cell : kPeriod) {
        const bool ref = c == 0 && cell.x == 4 && cell.y == 17;
        em.add(x0 + cell.x, yv + cell.y,
               {{double(x0 + cell.bx), double(yv + cell.by)}, {double(x0 + cell.rx), double(yv + cell.ry)}},
               ref ? "reference" : "variable", v, {"blue", "red"}, variable_rule(v, blue_true));
      }
      if (c < last) em.vertical(x0 + 41, yv + 12, "variable", v, variable_rule(v, blue_true));
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
    const int y1 = yl + 44;
    for (int y = yl + 29; y <= y1; y += 5) em.vertical(13, y, "loose", -1, variable_rule(lo, kHigh));
    int d = -2;
    while (mod(yu - 5 - (y1 + d), 5) != 0) ++d;
    for (int x : {17, 21, 24}) em.vertical(x, y1 + d, "loose", -1, variable_rule(up, kLow));
    for (int y = y1 + d + 5; y <= yu - 5; y += 5) em.vertical(24, y, "loose", -1, variable_rule(up, kLow));
  }

  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    const int ck = static_cast<int>(k);
    const auto& node = layout.clauses[k];
    std::vector<Slot> slots;
    for (int j = 0; j < 3; ++j) {
      const Literal lit = f.clauses[k][static_cast<std::size_t>(j)];
      const int rv = layout.variable_rows[static_cast<std::size_t>(lit.var)];
      const int col = node.columns[static_cast<std::size_t>(j)];
      const int p = col % 2;
      const bool from_below = node.row > rv;
      Attach a;
      if (from_below) a = (lit.negated != (p == 1)) ? kTR : kTL;
      else a = (lit.negated != (p == 1)) ? kBL : kBR;
      const int chosen = p == 0 ? a.blue : 1 - a.blue;  // mark when the variable is true
      slots.push_back({j, kCopyPitch * col + a.x, kRowPitch * rv + a.y, from_below,
                       lit.var, chosen});
    }
    std::sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
      return node.columns[static_cast<std::size_t>(a.slot)] < node.columns[static_cast<std::size_t>(b.slot)];
    });
    const Slot& left = slots[0];
    const Slot& mid = slots[1];
    const Slot& right = slots[2];
    const int cy = kRowPitch * node.row + kClauseOffset;
    const int cx = mid.x + 3;
    const bool variant_a = mid.from_below;
    const int yrun = variant_a ? cy + 4 : cy - 3;
    auto rule_of = [](const Slot& s) { return variable_rule(s.var, s.true_when_var); };

    route_chain(em, mid.x, mid.y, mid.x, variant_a ? cy - 5 : cy + 5, ck, rule_of(mid));

    const int xl = pick_offset(left.x, cx + 2);
    route_chain(em, left.x, left.y, xl, left.from_below ? yrun - 4 : yrun + 3, ck, rule_of(left));
    bool first = true;
    for (int a = xl + 3; a <= cx - 5; a += 5) {
      // marks: near (right) corner, far (left) corner
      em.add(a, yrun, {{double(a + 1), double(yrun)}, {double(a), double(yrun)}}, first ? "corner" : "arm", ck,
             {"green", "brown"}, literal_rule(ck, left.slot, 0));
      first = false;
    }

    const int xr = pick_offset(right.x, cx + 4);
    route_chain(em, right.x, right.y, xr, right.from_below ? yrun - 4 : yrun + 3, ck, rule_of(right));
    first = true;
    for (int a = xr - 4; a >= cx + 5; a -= 5) {
      em.add(a, yrun, {{double(a), double(yrun)}, {double(a + 1), double(yrun)}}, first ? "corner" : "arm", ck,
             {"green", "brown"}, literal_rule(ck, right.slot, 0));
      first = false;
    }

    std::vector<Point2> corners(4);
    const double lo = cy, hi = cy + 1;
    const Point2 p_mid{double(cx), variant_a ? lo : hi};
    const Point2 p_left{double(cx), variant_a ? hi : lo};
    const Point2 p_right{double(cx + 1), variant_a ? hi : lo};
    const Point2 p_idle{double(cx + 1), variant_a ? lo : hi};
    corners[static_cast<std::size_t>(left.slot)] = p_left;
    corners[static_cast<std::size_t>(mid.slot)] = p_mid;
    corners[static_cast<std::size_t>(right.slot)] = p_right;
    corners[3] = p_idle;
    SelectionRule core;
    core.kind = SelectionRule::Kind::Core;
    core.index = ck;
    core.core_marks = {0, 1, 2};
    core.idle_mark = 3;
    em.add(cx, cy, std::move(corners), "core-square", ck, {"green", "green", "green", "brown"}, core);
  }
  return em.take();
}

}  // namespace ucon
