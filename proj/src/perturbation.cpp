#include "cfkit/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cfkit/error.hpp"

namespace cfkit {

EpsilonBounds epsilon_bounds(const Cfn& f) {
  const EpsilonBounds b{std::max(f.j() - f.u(), f.v() - 1.0), std::min(1.0 - f.u(), f.v() - f.j())};
  if (b.lo > b.hi) {
    throw Error(ErrorCode::EmptyRange, "no admissible perturbation for this CFN");
  }
  return b;
}

Cfn perturb(const Cfn& f, double epsilon) {
  const auto [lo, hi] = epsilon_bounds(f);
  if (!std::isfinite(epsilon) || epsilon < lo - kClampTolerance || epsilon > hi + kClampTolerance) {
    std::ostringstream msg;
    msg << "perturbation " << epsilon << " outside admissible range [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::OutOfEpsilonRange, msg.str());
  }
  epsilon = std::clamp(epsilon, lo, hi);
  return Cfn::make(f.u() + epsilon, f.v() - epsilon, f.j());
}

void PerturbationConfig::validate() const {
  if (trials == 0) throw Error(ErrorCode::InvalidParams, "trials must be at least 1");
  if (p_values.empty()) throw Error(ErrorCode::InvalidParams, "at least one Minkowski order is required");
  if (lambda_values.empty()) throw Error(ErrorCode::InvalidParams, "at least one lambda is required");
  for (double lambda : lambda_values) DistanceParams(Order{1}, lambda);
}

const CellSummary& PerturbationStudy::cell(Order p, double lambda) const {
  for (const auto& c : summary) {
    if (c.p == p && c.lambda == lambda) return c;
  }
  throw Error(ErrorCode::InvalidParams, "no summary for p = " + p.to_string() + ", lambda = " +
                                            std::to_string(lambda));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double trial_uniform(std::uint64_t seed, std::uint64_t trial) noexcept {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ trial);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

TrialRecord run_trial(const PerturbationConfig& config, std::size_t trial) {
  const auto [lo, hi] = epsilon_bounds(config.first);
  const double epsilon = lo + (hi - lo) * trial_uniform(config.seed, trial);
  const Cfn moved = perturb(config.first, epsilon);
  const Cfn& other = config.second;

  TrialRecord record{trial, epsilon, {}};
  record.cells.reserve(config.p_values.size() * config.lambda_values.size());
  const double base_h = cf_h(config.first, other);
  const double d_h = cf_h(moved, other);
  for (Order p : config.p_values) {
    const double base_m = cf_im(config.first, other, p);
    const double d_m = cf_im(moved, other, p);
    for (double lambda : config.lambda_values) {
      const DistanceParams params{p, lambda};
      const double base_c = cf_c(config.first, other, params);
      const double d_c = cf_c(moved, other, params);
      record.cells.push_back({p, lambda, d_m, d_h, d_c, std::abs(d_m - base_m), std::abs(d_h - base_h),
                              std::abs(d_c - base_c)});
    }
  }
  return record;
}

PerturbationStudy run_study(const PerturbationConfig& config) {
  config.validate();
  PerturbationStudy study{config, {}, {}};
  study.trials.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) study.trials.push_back(run_trial(config, t));

  for (Order p : config.p_values) {
    for (double lambda : config.lambda_values) study.summary.push_back({p, lambda});
  }
  for (const auto& trial : study.trials) {
    for (std::size_t k = 0; k < trial.cells.size(); ++k) {
      const auto& c = trial.cells[k];
      auto& s = study.summary[k];
      s.mean_delta_d_m += c.delta_d_m;
      s.mean_delta_d_h += c.delta_d_h;
      s.mean_delta_d_c += c.delta_d_c;
      s.max_delta_d_m = std::max(s.max_delta_d_m, c.delta_d_m);
      s.max_delta_d_h = std::max(s.max_delta_d_h, c.delta_d_h);
      s.max_delta_d_c = std::max(s.max_delta_d_c, c.delta_d_c);
      if (c.delta_d_m >= c.delta_d_h) ++s.count_m_ge_h;
      if (c.delta_d_m >= c.delta_d_c && c.delta_d_c >= c.delta_d_h) ++s.count_m_ge_c_ge_h;
    }
  }
  const auto n = static_cast<double>(config.trials);
  for (auto& s : study.summary) {
    s.mean_delta_d_m /= n;
    s.mean_delta_d_h /= n;
    s.mean_delta_d_c /= n;
  }
  return study;
}

std::vector<TrendRow> lambda_trend(const Cfn& a, const Cfn& b, Order p,
                                   const std::vector<double>& lambda_grid) {
  const double d_m = cf_im(a, b, p);
  const double d_h = cf_h(a, b);
  std::vector<TrendRow> rows;
  rows.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    rows.push_back({lambda, d_m, d_h, cf_c(a, b, DistanceParams{p, lambda})});
  }
  return rows;
}

std::vector<double> uniform_grid(int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidParams, "grid needs at least one step");
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) grid[k] = static_cast<double>(k) / steps;
  return grid;
}

}  // namespace cfkit
