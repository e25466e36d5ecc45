#pragma once

#include <cstdint>
#include <optional>

#include "ucon/instance.hpp"

namespace ucon {

struct OracleOptions {
  int grid = 40;
  double budget = 1e8;  // max MBST evaluations (or star-mode sample work)
  unsigned threads = 1;
  /// For BCU with at most three regions, evaluate every star exactly with
  /// nearest-neighbour queries instead of scanning the product.
  bool star_shortcut = true;
};

struct OracleResult {
  double alpha = 0.0;
  Selection selection;  // witness
  int grid = 0;
  bool exhaustive = false;  // true when every region is finite (points and pairs)
  double evaluations = 0.0;
};

/// Number of samples per region at grid g and their product.
double sample_product(const Instance& inst, int g);

/// Minimum over the sampled selections of the MBST bottleneck / 2.
/// Throws BudgetExceeded naming the required budget.
OracleResult brute_force_bcu(const Instance& inst, const OracleOptions& opts = {});

/// Maximum over the sampled selections of the MBST bottleneck / 2.
OracleResult brute_force_wcu(const Instance& inst, const OracleOptions& opts = {});

enum class PairVerdict { ConnectableYes, ConnectableNo, Unknown };
const char* verdict_name(PairVerdict v);

struct PairDecision {
  PairVerdict verdict = PairVerdict::Unknown;
  std::optional<Selection> witness;
  std::uint64_t tried = 0;
};

/// Exhaustive over all 2^n choices (n <= 20), or `trials` random choices when trials > 0.
/// Throws std::invalid_argument for non-pair regions or exhaustive mode with n > 20.
PairDecision pair_decision(const Instance& inst, double alpha, std::uint64_t trials = 0,
                           std::uint64_t seed = 1, double eps = 1e-9);

}  // namespace ucon
