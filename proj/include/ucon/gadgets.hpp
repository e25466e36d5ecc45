#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ucon/instance.hpp"

namespace ucon {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

struct Formula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

void check_formula(const Formula& f);
bool literal_value(const Literal& l, const std::vector<bool>& assignment);
bool satisfies(const Formula& f, const std::vector<bool>& assignment);
/// Every satisfying assignment, by exhaustive enumeration (at most 20 variables).
std::vector<std::vector<bool>> satisfying_assignments(const Formula& f);

/// DIMACS CNF; every clause must have exactly three literals.
Formula parse_dimacs(std::string_view text);
std::string to_dimacs(const Formula& f);

/// Rectilinear embedding on an integer grid. Every variable is a horizontal segment on its
/// own row spanning columns [0, last edge column]; clause k spans its three edge columns.
/// Literal j of clause k is a vertical segment at columns[j] between the two rows.
/// Column 0 is reserved for the variable-variable connections.
struct FormulaLayout {
  struct ClauseNode {
    int row = 0;
    std::array<int, 3> columns{};
  };
  std::vector<int> variable_rows;
  std::vector<ClauseNode> clauses;
};

struct LayoutExtent {
  int rows = 0;
  int columns = 0;
};

/// Throws std::invalid_argument when the layout does not match the formula, leaves the
/// grid (rows < n+m, columns <= 3m), or is not planar.
void check_layout(const Formula& f, const FormulaLayout& layout);
LayoutExtent layout_extent(const FormulaLayout& layout);
/// Last column used by a variable (0 when it has no edges).
int variable_last_column(const FormulaLayout& layout, const Formula& f, int var);

nlohmann::json layout_to_json(const FormulaLayout& layout);
FormulaLayout layout_from_json(const nlohmann::json& j);

struct BundledLayout {
  std::string name;
  Formula formula;
  FormulaLayout layout;
};
std::vector<BundledLayout> bundled_layouts();
const BundledLayout& bundled_layout(std::string_view name);

enum class GadgetFamily { Pairs, Segments, Squares };
const char* family_name(GadgetFamily f);
GadgetFamily parse_family(std::string_view name);

/// How assignment_to_selection picks one of a region's marks.
struct SelectionRule {
  enum class Kind { Fixed, Variable, Literal, Core };
  Kind kind = Kind::Fixed;
  int index = -1;  // variable (Variable) or clause (Literal, Core)
  int slot = -1;   // literal slot (Literal)
  int mark_true = 0;
  int mark_false = 0;
  std::array<int, 3> core_marks{};  // Core: mark used to reach each literal slot
  int idle_mark = 0;                // Core: no literal true
};

struct RegionTag {
  std::string role;  // variable, reference, connector, loose, clause, clause-gate, core-square, arm, corner
  int owner = -1;    // variable or clause index; -1 for loose connections
  std::vector<Point2> marks;  // candidate points named by the colors below
  std::vector<std::string> colors;
  SelectionRule rule;
};

struct GadgetInstance {
  Instance instance;
  double alpha_star = 1.0;
  GadgetFamily family = GadgetFamily::Pairs;
  std::vector<RegionTag> tags;
};

/// Pairs (or unit vertical segments) at integer coordinates; decision threshold alpha = 1.
GadgetInstance build_pair_instance(const Formula& f, const FormulaLayout& layout,
                                   bool segments = false);
/// Unit squares at integer corners; decision threshold alpha = 5/2.
GadgetInstance build_square_instance(const Formula& f, const FormulaLayout& layout);
GadgetInstance build_gadget_instance(GadgetFamily family, const Formula& f,
                                     const FormulaLayout& layout);

Selection assignment_to_selection(const GadgetInstance& g, const Formula& f,
                                  const std::vector<bool>& assignment);

struct GeometryAudit {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
/// Pairs/segments: vertical, length 1, integer endpoints, no shared points.
/// Squares: unit, integer corners, disjoint interiors.
GeometryAudit audit_geometry(const GadgetInstance& g);

nlohmann::json tags_to_json(const GadgetInstance& g);

}  // namespace ucon
