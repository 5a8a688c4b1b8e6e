#include "cfkit/pain_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cfkit/error.hpp"

namespace cfkit::pain {

const char* to_string(Recommendation r) noexcept {
  switch (r) {
    case Recommendation::AcceptNurseScore: return "accept_nurse_score";
    case Recommendation::SecondNurseSuggested: return "second_nurse_suggested";
  }
  return "unknown";
}

double normalize_patient_score(std::span<const int> items) {
  if (items.size() != kItemCount) {
    throw Error(ErrorCode::BadItemCount, "expected " + std::to_string(kItemCount) +
                                             " questionnaire items, got " + std::to_string(items.size()));
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] < 0 || items[i] > kItemMax) {
      throw Error(ErrorCode::ItemOutOfRange, std::string("item '") + kItemNames[i] + "' = " +
                                                 std::to_string(items[i]) + " is outside 0..10");
    }
  }
  const int total = std::accumulate(items.begin(), items.end(), 0);
  return static_cast<double>(total) / static_cast<double>(kItemCount * kItemMax);
}

void PainAssessment::validate() const {
  normalize_patient_score(patient_items);
  joint_bounds(sim_to_scale0, sim_to_scale10);
}

ScalarMinimum minimize_bounded(const std::function<double(double)>& objective, double lo, double hi,
                               std::size_t grid_points, double tolerance) {
  if (!(lo <= hi)) throw Error(ErrorCode::EmptyFeasibleRegion, "search interval is empty");
  if (hi == lo) return {lo, objective(lo)};
  grid_points = std::max<std::size_t>(grid_points, 2);

  const double span = hi - lo;
  const auto at = [&](std::size_t k) {
    return k + 1 == grid_points ? hi : lo + span * static_cast<double>(k) / static_cast<double>(grid_points - 1);
  };

  std::size_t best_k = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double value = objective(at(k));
    if (value < best_value) {
      best_value = value;
      best_k = k;
    }
  }
  ScalarMinimum best{at(best_k), best_value};

  double a = at(best_k == 0 ? 0 : best_k - 1);
  double b = at(std::min(best_k + 1, grid_points - 1));
  while (b - a > tolerance) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    const double f1 = objective(m1);
    const double f2 = objective(m2);
    if (f1 < best.value) best = {m1, f1};
    if (f2 < best.value) best = {m2, f2};
    if (f1 <= f2) {
      b = m2;
    } else {
      a = m1;
    }
  }
  const double mid = 0.5 * (a + b);
  const double f_mid = objective(mid);
  if (f_mid < best.value) best = {mid, f_mid};
  return best;
}

PainSolution solve_with_score(double u, double v, double patient_pain, const ScoreOfJoint& score_of_j,
                              std::size_t grid_points) {
  const JointBounds bounds = joint_bounds(u, v);
  if (bounds.lo > bounds.hi) {
    throw Error(ErrorCode::EmptyFeasibleRegion, "joint degree has no feasible value");
  }
  if (!std::isfinite(patient_pain) || patient_pain < 0.0 || patient_pain > 1.0) {
    throw Error(ErrorCode::OutOfRange, "patient pain must lie in [0, 1]");
  }
  if (grid_points < kMinGridPoints) {
    throw Error(ErrorCode::InvalidParams, "grid_points must be at least " + std::to_string(kMinGridPoints));
  }

  const double target = 1.0 - patient_pain;
  const auto objective = [&](double j) {
    const double diff = target - score_of_j(j);
    return diff * diff;
  };
  const ScalarMinimum best = minimize_bounded(objective, bounds.lo, bounds.hi, grid_points, kRefineTolerance);

  PainSolution sol{};
  sol.j_opt = best.x;
  sol.s_opt = score_of_j(best.x);
  sol.nurse_pain = 1.0 - sol.s_opt;
  sol.patient_pain = patient_pain;
  sol.gap = sol.nurse_pain - patient_pain;
  sol.j_lo = bounds.lo;
  sol.j_hi = bounds.hi;
  const double width = bounds.hi - bounds.lo;
  sol.confusion_ratio = width > 0.0 ? std::clamp((best.x - bounds.lo) / width, 0.0, 1.0) : 0.0;
  sol.objective = best.value;
  sol.recommendation = interpret(sol).recommendation;
  return sol;
}

PainSolution solve_programming1(double u, double v, double patient_pain, const DistanceParams& params,
                                std::size_t grid_points) {
  return solve_with_score(
      u, v, patient_pain, [&](double j) { return score(Cfn::make(u, v, j), params).s; }, grid_points);
}

Interpretation interpret(const PainSolution& solution, double confusion_threshold) {
  if (!(confusion_threshold >= 0.0 && confusion_threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "confusion threshold must lie in [0, 1]");
  }
  const auto rec = solution.confusion_ratio >= confusion_threshold ? Recommendation::SecondNurseSuggested
                                                                   : Recommendation::AcceptNurseScore;
  // Never let a patient's under-reporting pull the final score down.
  return {rec, std::max(solution.nurse_pain, solution.patient_pain)};
}

std::vector<SweepRow> sensitivity_sweep(double u, double v, double patient_pain, const std::vector<Order>& p_list,
                                        const std::vector<double>& lambda_grid) {
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size() * lambda_grid.size());
  for (Order p : p_list) {
    for (double lambda : lambda_grid) {
      const PainSolution sol = solve_programming1(u, v, patient_pain, DistanceParams{p, lambda});
      rows.push_back({"cfc", p, lambda, sol.j_opt, sol.s_opt, sol.gap});
    }
  }
  return rows;
}

std::vector<SweepRow> legacy_comparison_sweep(double u, double v, double patient_pain,
                                              const std::vector<Order>& p_list) {
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size());
  for (Order p : p_list) {
    const PainSolution sol = solve_with_score(
        u, v, patient_pain, [&](double j) { return legacy_score(Cfn::make(u, v, j), p).s; });
    rows.push_back({"legacy", p, std::numeric_limits<double>::quiet_NaN(), sol.j_opt, sol.s_opt, sol.gap});
  }
  return rows;
}

double gap_spread(std::span<const SweepRow> rows) {
  if (rows.size() < 2) return 0.0;
  const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                            [](const SweepRow& a, const SweepRow& b) { return a.gap < b.gap; });
  return hi->gap - lo->gap;
}

}  // namespace cfkit::pain
