#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ucon/instance.hpp"

namespace ucon {

struct ApproxResult {
  Selection selection;
  double alpha = 0.0;
  std::string method;
  std::vector<std::string> certificates;
  std::vector<std::string> warnings;
};

/// Broadcast from the disk centres. Certificate only when every radius is 1.
ApproxResult bcu_center_heuristic(const Instance& inst);

/// Centres plus MST, then leaves pulled toward their parents (both ends of a path, in turn).
/// Overlapping disks produce a warning, not an error.
ApproxResult cinch_up(const Instance& inst);

/// alpha = L/2 + 1 over the centre MST; unit disks only.
ApproxResult wcu_center_heuristic(const Instance& inst);

struct FlowerParams {
  int n = 0;                 // 2n disks on the big circle; derived from big_radius when 0
  double spacing = 0.0;      // L, distance between consecutive rim centres
  double eps = 0.0;          // chain spacing
  double big_radius = 0.0;   // <= 0: 200 * L
  bool with_chains = true;
  std::size_t max_regions = 2'000'000;
};

struct FlowerInstance {
  Instance instance;
  Selection lstar;  // radial extremes on the rim, centres on the chains
  int n = 0;
  double big_radius = 0.0;
  std::size_t rim_count = 0;  // the first rim_count regions are the rim disks
  double sag = 0.0;           // height of D_1 above the tangent at D_0
  bool sag_ok = false;        // sag < eps / 3
  double min_clearance = 0.0; // smallest chain-centre distance to a foreign rim centre
};

/// Throws std::invalid_argument on parameter violations (including a chain that comes
/// within L of a foreign rim disk) and BudgetExceeded above max_regions.
FlowerInstance flower_instance(const FlowerParams& params);

}  // namespace ucon
