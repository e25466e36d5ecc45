#include "ucon/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ucon {

using nlohmann::json;

void check_formula(const Formula& f) {
  if (f.num_vars < 1) throw std::invalid_argument("formula: needs at least one variable");
  if (f.clauses.empty()) throw std::invalid_argument("formula: needs at least one clause");
  for (std::size_t k = 0; k < f.clauses.size(); ++k)
    for (const auto& l : f.clauses[k])
      if (l.var < 0 || l.var >= f.num_vars)
        throw std::invalid_argument("formula: clause " + std::to_string(k) +
                                    " refers to variable " + std::to_string(l.var + 1) +
                                    " of " + std::to_string(f.num_vars));
}

bool literal_value(const Literal& l, const std::vector<bool>& assignment) {
  return assignment.at(static_cast<std::size_t>(l.var)) != l.negated;
}

bool satisfies(const Formula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.num_vars))
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " values for " + std::to_string(f.num_vars) + " variables");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_value(l, assignment); });
  });
}

std::vector<std::vector<bool>> satisfying_assignments(const Formula& f) {
  check_formula(f);
  if (f.num_vars > 20) throw std::invalid_argument("satisfying_assignments: at most 20 variables");
  std::vector<std::vector<bool>> out;
  std::vector<bool> a(static_cast<std::size_t>(f.num_vars));
  for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
    for (int i = 0; i < f.num_vars; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    if (satisfies(f, a)) out.push_back(a);
  }
  return out;
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Formula f;
  long declared = -1;
  std::vector<Literal> pending;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> f.num_vars >> declared) || kind != "cnf")
        throw std::invalid_argument("dimacs: malformed problem line '" + line + "'");
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("dimacs: clause before the problem line");
    std::istringstream toks(line);
    long v;
    while (toks >> v) {
      if (v == 0) {
        if (pending.size() != 3)
          throw std::invalid_argument("dimacs: clause " + std::to_string(f.clauses.size() + 1) +
                                      " has " + std::to_string(pending.size()) + " literals, expected 3");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::labs(v) > f.num_vars)
        throw std::invalid_argument("dimacs: literal " + std::to_string(v) + " out of range");
      pending.push_back({static_cast<int>(std::labs(v)) - 1, v < 0});
    }
    if (!toks.eof()) throw std::invalid_argument("dimacs: non-numeric token in '" + line + "'");
  }
  if (!header) throw std::invalid_argument("dimacs: missing problem line");
  if (!pending.empty()) throw std::invalid_argument("dimacs: last clause not terminated by 0");
  if (declared != static_cast<long>(f.clauses.size()))
    throw std::invalid_argument("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(f.clauses.size()));
  check_formula(f);
  return f;
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

int variable_last_column(const FormulaLayout& layout, const Formula& f, int var) {
  int last = 0;
  for (std::size_t k = 0; k < f.clauses.size() && k < layout.clauses.size(); ++k)
    for (int j = 0; j < 3; ++j)
      if (f.clauses[k][static_cast<std::size_t>(j)].var == var)
        last = std::max(last, layout.clauses[k].columns[static_cast<std::size_t>(j)]);
  return last;
}

LayoutExtent layout_extent(const FormulaLayout& layout) {
  int lo = 0, hi = 0, cols = 0;
  bool any = false;
  auto row = [&](int r) {
    lo = any ? std::min(lo, r) : r;
    hi = any ? std::max(hi, r) : r;
    any = true;
  };
  for (int r : layout.variable_rows) row(r);
  for (const auto& c : layout.clauses) {
    row(c.row);
    for (int col : c.columns) cols = std::max(cols, col);
  }
  return {any ? hi - lo + 1 : 0, cols + 1};
}

void check_layout(const Formula& f, const FormulaLayout& layout) {
  check_formula(f);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  auto fail = [](const std::string& msg) { throw std::invalid_argument("layout: " + msg); };
  if (static_cast<int>(layout.variable_rows.size()) != n)
    fail(std::to_string(layout.variable_rows.size()) + " variable rows for " + std::to_string(n) + " variables");
  if (static_cast<int>(layout.clauses.size()) != m)
    fail(std::to_string(layout.clauses.size()) + " clause nodes for " + std::to_string(m) + " clauses");

  struct Node {
    int row, lo, hi;
    std::string name;
  };
  std::vector<Node> nodes;
  for (int v = 0; v < n; ++v) {
    const int r = layout.variable_rows[static_cast<std::size_t>(v)];
    if (r < 0 || r >= n + m) fail("variable " + std::to_string(v + 1) + " row out of [0, n+m)");
    nodes.push_back({r, 0, variable_last_column(layout, f, v), "variable " + std::to_string(v + 1)});
  }
  struct Edge {
    int col, r0, r1;
  };
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;  // (variable, column)
  for (int k = 0; k < m; ++k) {
    const auto& c = layout.clauses[static_cast<std::size_t>(k)];
    if (c.row < 0 || c.row >= n + m) fail("clause " + std::to_string(k + 1) + " row out of [0, n+m)");
    std::set<int> cols(c.columns.begin(), c.columns.end());
    if (cols.size() != 3) fail("clause " + std::to_string(k + 1) + " repeats a column");
    for (int j = 0; j < 3; ++j) {
      const int col = c.columns[static_cast<std::size_t>(j)];
      if (col < 1 || col > 3 * m) fail("clause " + std::to_string(k + 1) + " column out of [1, 3m]");
      const int v = f.clauses[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].var;
      const int rv = layout.variable_rows[static_cast<std::size_t>(v)];
      if (rv == c.row) fail("clause " + std::to_string(k + 1) + " shares a row with variable " + std::to_string(v + 1));
      if (!used.insert({v, col}).second)
        fail("variable " + std::to_string(v + 1) + " has two edges at column " + std::to_string(col));
      edges.push_back({col, std::min(rv, c.row), std::max(rv, c.row)});
    }
    nodes.push_back({c.row, *cols.begin(), *cols.rbegin(), "clause " + std::to_string(k + 1)});
  }
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (nodes[a].row == nodes[b].row && nodes[a].lo <= nodes[b].hi + 1 && nodes[b].lo <= nodes[a].hi + 1)
        fail(nodes[a].name + " and " + nodes[b].name + " overlap on row " + std::to_string(nodes[a].row));
  for (const auto& e : edges)
    for (const auto& nd : nodes)
      if (nd.row > e.r0 && nd.row < e.r1 && nd.lo <= e.col && e.col <= nd.hi)
        fail("edge at column " + std::to_string(e.col) + " crosses " + nd.name);
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (edges[a].col == edges[b].col && edges[a].r0 <= edges[b].r1 && edges[b].r0 <= edges[a].r1)
        fail("two edges overlap at column " + std::to_string(edges[a].col));
}

json layout_to_json(const FormulaLayout& layout) {
  json vars = json::array();
  for (int r : layout.variable_rows) vars.push_back({{"row", r}});
  json clauses = json::array();
  for (const auto& c : layout.clauses) clauses.push_back({{"row", c.row}, {"columns", c.columns}});
  return {{"variables", vars}, {"clauses", clauses}};
}

FormulaLayout layout_from_json(const json& j) {
  try {
    FormulaLayout out;
    for (const auto& v : j.at("variables")) out.variable_rows.push_back(v.at("row").get<int>());
    for (const auto& c : j.at("clauses")) {
      FormulaLayout::ClauseNode node;
      node.row = c.at("row").get<int>();
      const auto& cols = c.at("columns");
      if (!cols.is_array() || cols.size() != 3)
        throw std::invalid_argument("layout: every clause needs exactly 3 columns");
      for (std::size_t i = 0; i < 3; ++i) node.columns[i] = cols[i].get<int>();
      out.clauses.push_back(node);
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("layout: ") + e.what());
  }
}

namespace {

Formula make_formula(int n, std::initializer_list<std::array<int, 3>> clauses) {
  Formula f;
  f.num_vars = n;
  for (const auto& c : clauses) {
    std::array<Literal, 3> lits;
    for (std::size_t i = 0; i < 3; ++i) lits[i] = {std::abs(c[i]) - 1, c[i] < 0};
    f.clauses.push_back(lits);
  }
  return f;
}

}  // namespace

std::vector<BundledLayout> bundled_layouts() {
  std::vector<BundledLayout> out;
  out.push_back({"single", make_formula(1, {{1, 1, 1}}), {{0}, {{1, {1, 2, 3}}}}});
  out.push_back({"pair", make_formula(2, {{1, -2, 1}}), {{0, 2}, {{1, {1, 2, 3}}}}});
  out.push_back({"chain3", make_formula(3, {{1, -2, 1}, {2, 3, 3}}),
                 {{0, 2, 4}, {{1, {1, 2, 3}}, {3, {1, 2, 3}}}}});
  out.push_back({"contradiction", make_formula(1, {{1, 1, 1}, {-1, -1, -1}}),
                 {{1}, {{2, {1, 2, 3}}, {0, {4, 5, 6}}}}});
  return out;
}

const BundledLayout& bundled_layout(std::string_view name) {
  static const std::vector<BundledLayout> all = bundled_layouts();
  for (const auto& b : all)
    if (b.name == name) return b;
  std::string names;
  for (const auto& b : all) names += (names.empty() ? "" : ", ") + b.name;
  throw std::invalid_argument("unknown bundled layout '" + std::string(name) + "' (have " + names + ")");
}

const char* family_name(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::Pairs: return "pairs";
    case GadgetFamily::Segments: return "segments";
    case GadgetFamily::Squares: return "squares";
  }
  return "?";
}

GadgetFamily parse_family(std::string_view name) {
  if (name == "pairs") return GadgetFamily::Pairs;
  if (name == "segments") return GadgetFamily::Segments;
  if (name == "squares") return GadgetFamily::Squares;
  throw std::invalid_argument("unknown gadget family '" + std::string(name) + "'");
}

GadgetInstance build_gadget_instance(GadgetFamily family, const Formula& f, const FormulaLayout& layout) {
  switch (family) {
    case GadgetFamily::Pairs: return build_pair_instance(f, layout, false);
    case GadgetFamily::Segments: return build_pair_instance(f, layout, true);
    case GadgetFamily::Squares: return build_square_instance(f, layout);
  }
  throw std::invalid_argument("unknown gadget family");
}

Selection assignment_to_selection(const GadgetInstance& g, const Formula& f,
                                  const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.num_vars))
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " values for " + std::to_string(f.num_vars) + " variables");
  auto lit = [&](int clause, int slot) {
    return literal_value(f.clauses.at(static_cast<std::size_t>(clause)).at(static_cast<std::size_t>(slot)),
                         assignment);
  };
  Selection sel;
  sel.points.reserve(g.tags.size());
  for (const auto& t : g.tags) {
    const auto& r = t.rule;
    int mark = r.mark_true;
    switch (r.kind) {
      case SelectionRule::Kind::Fixed: break;
      case SelectionRule::Kind::Variable:
        mark = assignment.at(static_cast<std::size_t>(r.index)) ? r.mark_true : r.mark_false;
        break;
      case SelectionRule::Kind::Literal: mark = lit(r.index, r.slot) ? r.mark_true : r.mark_false; break;
      case SelectionRule::Kind::Core:
        mark = r.idle_mark;
        for (int j = 0; j < 3; ++j)
          if (lit(r.index, j)) {
            mark = r.core_marks[static_cast<std::size_t>(j)];
            break;
          }
        break;
    }
    sel.points.push_back(t.marks.at(static_cast<std::size_t>(mark)));
  }
  return sel;
}

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }
bool is_integer(Point2 p) { return is_integer(p.x) && is_integer(p.y); }

}  // namespace

GeometryAudit audit_geometry(const GadgetInstance& g) {
  GeometryAudit out;
  auto bad = [&](std::size_t i, const std::string& msg) {
    out.violations.push_back("region " + std::to_string(i) + ": " + msg);
  };
  if (g.tags.size() != g.instance.regions.size())
    out.violations.push_back("tag count differs from region count");
  std::map<std::pair<double, double>, std::size_t> seen;
  std::vector<Point2> corners;
  for (std::size_t i = 0; i < g.instance.regions.size(); ++i) {
    const auto& r = g.instance.regions[i];
    if (g.family == GadgetFamily::Squares) {
      const auto* q = std::get_if<Square>(&r);
      if (!q) {
        bad(i, "not a square");
        continue;
      }
      if (q->side != 1.0) bad(i, "side is not 1");
      if (!is_integer(q->corner)) bad(i, "corner not on the integer grid");
      corners.push_back(q->corner);
      continue;
    }
    Point2 a, b;
    if (const auto* p = std::get_if<PointPair>(&r)) {
      a = p->a;
      b = p->b;
    } else if (const auto* s = std::get_if<SegmentRegion>(&r)) {
      a = s->s.a;
      b = s->s.b;
    } else {
      bad(i, "not a pair or segment");
      continue;
    }
    if (a.x != b.x) bad(i, "not vertical");
    if (std::abs(b.y - a.y) != 1.0) bad(i, "length is not 1");
    if (!is_integer(a) || !is_integer(b)) bad(i, "endpoint not on the integer grid");
    for (Point2 p : {a, b}) {
      const auto [it, fresh] = seen.try_emplace({p.x, p.y}, i);
      if (!fresh) bad(i, "shares a point with region " + std::to_string(it->second));
    }
  }
  if (g.family == GadgetFamily::Squares) {
    std::vector<std::size_t> order(corners.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return corners[a].x < corners[b].x; });
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size() && corners[order[b]].x < corners[order[a]].x + 1.0; ++b)
        if (std::abs(corners[order[a]].y - corners[order[b]].y) < 1.0)
          bad(order[b], "overlaps region " + std::to_string(order[a]));
  }
  return out;
}

json tags_to_json(const GadgetInstance& g) {
  json out = json::array();
  for (std::size_t i = 0; i < g.tags.size(); ++i) {
    const auto& t = g.tags[i];
    json marks = json::array();
    for (const auto& p : t.marks) marks.push_back(json::array({p.x, p.y}));
    out.push_back({{"index", i}, {"role", t.role}, {"owner", t.owner}, {"marks", marks}, {"colors", t.colors}});
  }
  return out;
}

}  // namespace ucon
