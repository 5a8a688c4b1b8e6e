#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cfkit/cfn.hpp"
#include "cfkit/distance.hpp"

namespace cfkit {

struct EpsilonBounds {
  double lo;
  double hi;
};

/// Largest interval of eps for which <u + eps, v - eps, j> stays a valid CFN:
/// [max(j - u, v - 1), min(1 - u, v - j)].
EpsilonBounds epsilon_bounds(const Cfn& f);

/// <u + eps, v - eps, j>. Preserves u + v and j, hence hesitancy.
/// Throws Error{OutOfEpsilonRange} when eps leaves epsilon_bounds(f) by more
/// than the clamp tolerance.
Cfn perturb(const Cfn& f, double epsilon);

struct PerturbationConfig {
  Cfn first = Cfn::make(0.8, 0.4, 0.32);
  Cfn second = Cfn::make(0.1, 0.9, 0.09);
  std::size_t trials = 100;
  std::uint64_t seed = 2024;
  std::vector<Order> p_values{Order{1}, Order{2}, Order{3}};
  std::vector<double> lambda_values{0.5};

  /// Throws Error{InvalidParams} on zero trials, empty grids or lambda
  /// outside [0, 1].
  void validate() const;
};

/// Distances on the perturbed pair and their absolute deviations from the
/// unperturbed values, for one (p, lambda) cell of one trial.
struct CellRecord {
  Order p;
  double lambda;
  double d_m;
  double d_h;
  double d_c;
  double delta_d_m;
  double delta_d_h;
  double delta_d_c;
};

struct TrialRecord {
  std::size_t trial;
  double epsilon;
  std::vector<CellRecord> cells;  // ordered by (p, lambda) as configured
};

struct CellSummary {
  Order p;
  double lambda;
  double mean_delta_d_m = 0.0;
  double mean_delta_d_h = 0.0;
  double mean_delta_d_c = 0.0;
  double max_delta_d_m = 0.0;
  double max_delta_d_h = 0.0;
  double max_delta_d_c = 0.0;
  std::size_t count_m_ge_h = 0;       // trials with delta_m >= delta_h
  std::size_t count_m_ge_c_ge_h = 0;  // trials with delta_m >= delta_c >= delta_h
};

struct PerturbationStudy {
  PerturbationConfig config;
  std::vector<TrialRecord> trials;  // ordered by trial index
  std::vector<CellSummary> summary;

  /// Summary cell for (p, lambda); throws Error{InvalidParams} if absent.
  const CellSummary& cell(Order p, double lambda) const;
};

/// Uniform draw in [0, 1) for `trial` under `seed`. Depends only on the two
/// integers, so trials can be evaluated in any order.
double trial_uniform(std::uint64_t seed, std::uint64_t trial) noexcept;

/// Evaluates a single trial; run_study is the ordered collection of these.
TrialRecord run_trial(const PerturbationConfig& config, std::size_t trial);

PerturbationStudy run_study(const PerturbationConfig& config);

struct TrendRow {
  double lambda;
  double d_m;
  double d_h;
  double d_c;
};

/// Distances of the pair for each lambda in the grid at a fixed order.
std::vector<TrendRow> lambda_trend(const Cfn& a, const Cfn& b, Order p,
                                   const std::vector<double>& lambda_grid);

/// {0, 1/steps, ..., 1}, each point computed as k / steps.
std::vector<double> uniform_grid(int steps);

}  // namespace cfkit
