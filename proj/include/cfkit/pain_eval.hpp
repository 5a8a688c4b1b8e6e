#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cfkit/cfn.hpp"
#include "cfkit/distance.hpp"
#include "cfkit/score.hpp"

namespace cfkit::pain {

/// Impact items of the pain questionnaire, in questionnaire order.
inline constexpr std::size_t kItemCount = 7;
inline constexpr int kItemMax = 10;
inline constexpr const char* kItemNames[kItemCount] = {
    "general_activity", "mood",      "walking_ability", "normal_work",
    "relations",        "sleep",     "enjoyment_of_life"};

inline constexpr std::size_t kDefaultGridPoints = 10001;
inline constexpr std::size_t kMinGridPoints = 101;
inline constexpr double kRefineTolerance = 1e-8;
inline constexpr double kDefaultConfusionThreshold = 0.9;

struct PainAssessment {
  std::vector<int> patient_items;
  double sim_to_scale0 = 0.0;   // membership u
  double sim_to_scale10 = 0.0;  // non-membership v

  /// Throws BadItemCount, ItemOutOfRange or OutOfRange.
  void validate() const;
};

enum class Recommendation { AcceptNurseScore, SecondNurseSuggested };

const char* to_string(Recommendation r) noexcept;

struct PainSolution {
  double j_opt;
  double s_opt;
  double nurse_pain;    // 1 - s_opt
  double patient_pain;  // normalized questionnaire score
  double gap;           // nurse_pain - patient_pain
  double confusion_ratio;
  double j_lo;
  double j_hi;
  double objective;  // (target - s_opt)^2
  Recommendation recommendation;
};

/// sum(items) / 70. Throws BadItemCount or ItemOutOfRange.
double normalize_patient_score(std::span<const int> items);

/// Score of <u, v, j> as a function of j.
using ScoreOfJoint = std::function<double(double j)>;

struct ScalarMinimum {
  double x;
  double value;
};

/// Minimizes `objective` on [lo, hi]: scan `grid_points` evenly spaced
/// samples, then ternary-search the bracket around the best sample down to
/// `tolerance`. Endpoints are always candidates.
ScalarMinimum minimize_bounded(const std::function<double(double)>& objective, double lo,
                               double hi, std::size_t grid_points, double tolerance);

/// Chooses j in joint_bounds(u, v) minimizing ((1 - patient_pain) - s(j))^2
/// with s the combined-distance score under `params`.
PainSolution solve_programming1(double u, double v, double patient_pain,
                                const DistanceParams& params,
                                std::size_t grid_points = kDefaultGridPoints);

/// Same optimization for an arbitrary score function of j.
PainSolution solve_with_score(double u, double v, double patient_pain,
                              const ScoreOfJoint& score_of_j,
                              std::size_t grid_points = kDefaultGridPoints);

struct Interpretation {
  Recommendation recommendation;
  double final_pain_score;  // max(nurse_pain, patient_pain)
};

Interpretation interpret(const PainSolution& solution,
                         double confusion_threshold = kDefaultConfusionThreshold);

struct SweepRow {
  std::string mode;  // "cfc" or "legacy"
  Order p;
  double lambda;     // NaN for legacy rows
  double j_opt;
  double s_opt;
  double gap;        // (1 - patient_pain) - s_opt
};

/// Solves for the optimal joint degree at every (p, lambda); rows ordered by p then lambda.
std::vector<SweepRow> sensitivity_sweep(double u, double v, double patient_pain,
                                        const std::vector<Order>& p_list,
                                        const std::vector<double>& lambda_grid);

/// Same optimization with the legacy-Minkowski score in place of the combined one.
std::vector<SweepRow> legacy_comparison_sweep(double u, double v, double patient_pain,
                                              const std::vector<Order>& p_list);

/// max(gap) - min(gap) over the rows; 0 for fewer than two rows.
double gap_spread(std::span<const SweepRow> rows);

}  // namespace cfkit::pain
