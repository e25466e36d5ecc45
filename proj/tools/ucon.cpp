// Command-line front end. Reports are JSON on stdout unless --out is given.
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucon/approx.hpp"
#include "ucon/connectivity.hpp"
#include "ucon/errors.hpp"
#include "ucon/exact_solver.hpp"
#include "ucon/gadgets.hpp"
#include "ucon/io.hpp"
#include "ucon/log.hpp"
#include "ucon/oracle.hpp"
#include "ucon/render.hpp"

using nlohmann::json;
using namespace ucon;

namespace {

enum Exit { kOk = 0, kUsage = 2, kBudget = 3, kPrecision = 4, kIo = 5 };

struct Common {
  std::string out;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

json digest(const Instance& inst) {
  std::map<std::string, int> counts;
  for (const auto& r : inst.regions) ++counts[region_kind(r)];
  const auto box = inst.bounds();
  return {{"regions", inst.size()},
          {"counts", counts},
          {"bbox", {point_to_json(box.lo), point_to_json(box.hi)}}};
}

void emit(const Common& c, json report) {
  const std::string text = dump(report) + "\n";
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

json report(const std::string& command, json params, const Instance* inst, json result, double seconds) {
  json r{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)},
         {"wall_time_s", seconds}};
  if (inst) r["instance"] = digest(*inst);
  return r;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Accepts a bare instance or a gen-* report that embeds one.
Instance load_instance(const std::string& path, json* tags = nullptr) {
  json j = read_json_file(path);
  if (j.contains("result") && j["result"].contains("instance_data")) {
    if (tags && j["result"].contains("tags")) *tags = j["result"]["tags"];
    j = j["result"]["instance_data"];
  }
  return instance_from_json(j);
}

std::vector<RegionTag> tags_from_json(const json& j) {
  std::vector<RegionTag> out;
  for (const auto& t : j) {
    RegionTag tag;
    tag.role = t.at("role").get<std::string>();
    tag.owner = t.at("owner").get<int>();
    for (const auto& m : t.at("marks")) tag.marks.push_back({m.at(0).get<double>(), m.at(1).get<double>()});
    tag.colors = t.at("colors").get<std::vector<std::string>>();
    out.push_back(std::move(tag));
  }
  return out;
}

json approx_json(const ApproxResult& r) {
  return {{"method", r.method},
          {"alpha", r.alpha},
          {"selection", selection_to_json(r.selection)},
          {"certificates", r.certificates},
          {"warnings", r.warnings}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottleneck connectivity under uncertainty: solvers, oracles and generators"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the report to this file instead of stdout");
    sub->add_option("--seed", common.seed, "Seed for randomized steps");
    sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string input;
  // solve-exact
  auto* exact = app.add_subcommand("solve-exact", "Exact BCU for points, segments and pairs");
  double delta = 0.0, epsilon = 0.0;
  std::size_t node_budget = 200000;
  std::string selection_out;
  exact->add_option("input", input, "Instance JSON")->required();
  exact->add_option("--delta", delta, "Target width of the bottleneck bracket (0: scale default)");
  exact->add_option("--epsilon", epsilon, "Geometric tolerance (0: scale default)");
  exact->add_option("--budget", node_budget, "Search node budget");
  exact->add_option("--selection-out", selection_out, "Also write the selection JSON here");
  add_common(exact);

  // approx
  auto* approx = app.add_subcommand("approx", "Approximations for disk instances");
  std::string method = "center";
  approx->add_option("input", input, "Instance JSON")->required();
  approx->add_option("--method", method, "center | cinch | wcu-center")
      ->check(CLI::IsMember({"center", "cinch", "wcu-center"}));
  add_common(approx);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Grid brute force for BCU or WCU");
  std::string mode = "bcu";
  int grid = 40;
  double oracle_budget = 1e8;
  bool no_star = false;
  oracle->add_option("input", input, "Instance JSON")->required();
  oracle->add_option("--mode", mode, "bcu | wcu")->check(CLI::IsMember({"bcu", "wcu"}));
  oracle->add_option("--grid", grid, "Samples per region axis")->check(CLI::PositiveNumber);
  oracle->add_option("--budget", oracle_budget, "Maximum evaluations");
  oracle->add_flag("--no-star", no_star, "Always scan the full product");
  add_common(oracle);

  // pair-decision
  auto* pair = app.add_subcommand("pair-decision", "Is there a choice of pair points connected at alpha?");
  double alpha = 1.0;
  std::uint64_t trials = 0;
  pair->add_option("input", input, "Instance JSON")->required();
  pair->add_option("--alpha", alpha, "Radius")->required();
  pair->add_option("--trials", trials, "Random choices instead of exhaustive search (0: exhaustive)");
  add_common(pair);

  // gen-gadget
  auto* gen = app.add_subcommand("gen-gadget", "Build a gadget instance from a 3-CNF formula");
  std::string family = "pairs", bundled, dimacs, layout_path, assignment, instance_out, tags_out;
  gen->add_option("--family", family, "pairs | segments | squares")
      ->check(CLI::IsMember({"pairs", "segments", "squares"}));
  gen->add_option("--bundled", bundled, "Bundled formula and layout by name");
  gen->add_option("--formula", dimacs, "DIMACS file (needs --layout)");
  gen->add_option("--layout", layout_path, "Layout JSON file");
  gen->add_option("--assignment", assignment, "0/1 string; adds the induced selection to the report");
  gen->add_option("--instance-out", instance_out, "Also write the bare instance JSON here");
  gen->add_option("--tags-out", tags_out, "Also write the role tags JSON here");
  add_common(gen);

  // gen-flower
  auto* flower = app.add_subcommand("gen-flower", "Build the flower disk instance");
  FlowerParams fp;
  bool rim_only = false;
  flower->add_option("--spacing", fp.spacing, "Distance between consecutive rim centres")->required();
  flower->add_option("--eps", fp.eps, "Chain spacing")->required();
  flower->add_option("--big-radius", fp.big_radius, "Rim radius (default 200 x spacing)");
  flower->add_option("--n", fp.n, "Half the number of rim disks (overrides --big-radius)");
  flower->add_option("--max-regions", fp.max_regions, "Region cap");
  flower->add_flag("--rim-only", rim_only, "Omit spokes and chains");
  add_common(flower);

  // render
  auto* render = app.add_subcommand("render", "Draw an instance as SVG");
  std::string selection_path, svg_path, tags_path;
  std::optional<double> render_alpha;
  double width = 800.0;
  render->add_option("input", input, "Instance JSON or gen-gadget report")->required();
  render->add_option("--selection", selection_path, "Selection JSON");
  render->add_option("--tags", tags_path, "Role tags JSON (colors for marks)");
  render->add_option("--out", svg_path, "SVG output path")->required();
  render->add_option("--alpha", render_alpha, "Draw disks of this radius at the selection");
  render->add_option("--width", width, "Width in pixels");
  render->add_option("--seed", common.seed, "Unused; accepted for uniformity");
  render->add_option("--threads", common.threads, "Unused; accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Timer timer;
    log_info("command " + app.get_subcommands().front()->get_name());
    if (*exact) {
      const Instance inst = load_instance(input);
      ExactOptions opts;
      opts.delta = delta;
      opts.eps = epsilon;
      opts.node_budget = node_budget;
      opts.threads = common.threads;
      const auto r = solve_exact(inst, opts);
      json levels = json::array();
      for (const auto& l : r.levels)
        levels.push_back({{"sequence", l.sequence}, {"lambda", l.lambda}});
      json result{{"alpha", r.solution.alpha},
                  {"selection", selection_to_json(r.selection)},
                  {"solution", solution_to_json(r.solution)},
                  {"levels", levels},
                  {"nodes", r.nodes},
                  {"sequences_evaluated", r.sequences_evaluated}};
      if (!selection_out.empty()) write_text_file(selection_out, dump(selection_to_json(r.selection)) + "\n");
      emit(common, report("solve-exact",
                          {{"input", input}, {"delta", delta}, {"epsilon", epsilon}, {"budget", node_budget},
                           {"threads", common.threads}, {"seed", common.seed}},
                          &inst, result, timer.seconds()));
    } else if (*approx) {
      const Instance inst = load_instance(input);
      const ApproxResult r = method == "center" ? bcu_center_heuristic(inst)
                             : method == "cinch" ? cinch_up(inst)
                                                 : wcu_center_heuristic(inst);
      emit(common, report("approx", {{"input", input}, {"method", method}, {"seed", common.seed}}, &inst,
                          approx_json(r), timer.seconds()));
    } else if (*oracle) {
      const Instance inst = load_instance(input);
      OracleOptions opts;
      opts.grid = grid;
      opts.budget = oracle_budget;
      opts.threads = common.threads;
      opts.star_shortcut = !no_star;
      const auto r = mode == "bcu" ? brute_force_bcu(inst, opts) : brute_force_wcu(inst, opts);
      json result{{"alpha", r.alpha},
                  {"selection", selection_to_json(r.selection)},
                  {"grid", r.grid},
                  {"exhaustive", r.exhaustive},
                  {"evaluations", r.evaluations}};
      emit(common, report("oracle",
                          {{"input", input}, {"mode", mode}, {"grid", grid}, {"budget", oracle_budget},
                           {"star_shortcut", !no_star}, {"threads", common.threads}, {"seed", common.seed}},
                          &inst, result, timer.seconds()));
    } else if (*pair) {
      const Instance inst = load_instance(input);
      const auto d = pair_decision(inst, alpha, trials, common.seed);
      json result{{"verdict", verdict_name(d.verdict)}, {"tried", d.tried}};
      if (d.witness) result["witness"] = selection_to_json(*d.witness);
      emit(common, report("pair-decision",
                          {{"input", input}, {"alpha", alpha}, {"trials", trials}, {"seed", common.seed}}, &inst,
                          result, timer.seconds()));
    } else if (*gen) {
      Formula f;
      FormulaLayout layout;
      if (!bundled.empty()) {
        const auto& b = bundled_layout(bundled);
        f = b.formula;
        layout = b.layout;
      } else {
        if (dimacs.empty() || layout_path.empty())
          throw std::invalid_argument("gen-gadget: give --bundled, or --formula with --layout");
        std::ifstream in(dimacs);
        if (!in) throw IoError("cannot read " + dimacs);
        std::stringstream ss;
        ss << in.rdbuf();
        f = parse_dimacs(ss.str());
        layout = layout_from_json(read_json_file(layout_path));
      }
      const auto g = build_gadget_instance(parse_family(family), f, layout);
      const auto audit = audit_geometry(g);
      json result{{"family", family_name(g.family)},
                  {"alpha_star", g.alpha_star},
                  {"formula", to_dimacs(f)},
                  {"layout", layout_to_json(layout)},
                  {"audit", audit.violations},
                  {"instance_data", instance_to_json(g.instance)},
                  {"tags", tags_to_json(g)}};
      if (!instance_out.empty()) write_text_file(instance_out, dump(instance_to_json(g.instance)) + "\n");
      if (!tags_out.empty()) write_text_file(tags_out, dump(tags_to_json(g)) + "\n");
      if (!assignment.empty()) {
        std::vector<bool> a;
        for (char ch : assignment) {
          if (ch != '0' && ch != '1') throw std::invalid_argument("--assignment takes a 0/1 string");
          a.push_back(ch == '1');
        }
        const auto sel = assignment_to_selection(g, f, a);
        result["assignment"] = assignment;
        result["satisfies"] = satisfies(f, a);
        result["selection"] = selection_to_json(sel);
        result["connected"] = is_connected_at(sel.points, g.alpha_star);
      }
      emit(common, report("gen-gadget",
                          {{"family", family}, {"bundled", bundled}, {"formula", dimacs}, {"layout", layout_path},
                           {"seed", common.seed}},
                          &g.instance, result, timer.seconds()));
    } else if (*flower) {
      fp.with_chains = !rim_only;
      const auto fl = flower_instance(fp);
      // Dense MST; skipped on very large constructions.
      constexpr std::size_t kBottleneckLimit = 20000;
      const json bottleneck =
          fl.instance.size() <= kBottleneckLimit ? json(mbst(fl.lstar.points).bottleneck) : json();
      json result{{"n", fl.n},
                  {"big_radius", fl.big_radius},
                  {"rim_count", fl.rim_count},
                  {"sag", fl.sag},
                  {"sag_ok", fl.sag_ok},
                  {"min_clearance", fl.min_clearance},
                  {"lstar_bottleneck", bottleneck},
                  {"instance_data", instance_to_json(fl.instance)},
                  {"lstar", selection_to_json(fl.lstar)}};
      emit(common, report("gen-flower",
                          {{"spacing", fp.spacing}, {"eps", fp.eps}, {"big_radius", fp.big_radius}, {"n", fp.n},
                           {"rim_only", rim_only}, {"seed", common.seed}},
                          &fl.instance, result, timer.seconds()));
    } else if (*render) {
      json tag_json;
      const Instance inst = load_instance(input, &tag_json);
      if (!tags_path.empty()) tag_json = read_json_file(tags_path);
      std::vector<RegionTag> tags;
      RenderOptions opts;
      opts.width_px = width;
      opts.alpha = render_alpha;
      if (!tag_json.is_null()) {
        tags = tags_from_json(tag_json);
        opts.tags = &tags;
      }
      Selection sel;
      if (!selection_path.empty()) {
        json sj = read_json_file(selection_path);
        if (sj.contains("result") && sj["result"].contains("selection")) sj = sj["result"]["selection"];
        sel = selection_from_json(sj);
        opts.selection = &sel;
      }
      write_text_file(svg_path, render_svg(inst, opts));
      emit(common, report("render",
                          {{"input", input}, {"selection", selection_path}, {"svg", svg_path},
                           {"alpha", render_alpha ? json(*render_alpha) : json()}, {"seed", common.seed}},
                          &inst, {{"svg", svg_path}}, timer.seconds()));
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (required " << e.required() << ")\n";
    return kBudget;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << " [" << e.lo() << ", " << e.hi() << "]\n";
    return kPrecision;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
}
