#pragma once

#include <functional>

#include "cfkit/cfn.hpp"
#include "cfkit/distance.hpp"

namespace cfkit {

inline constexpr double kTieTolerance = 1e-12;

struct ScoreResult {
  double s;
  double d_to_worst;  // distance to <0,1,0>
  double d_to_best;   // distance to <1,0,0>
};

using AnchorDistance = std::function<double(const Cfn&, const Cfn&)>;

/// Relative closeness d_worst / (d_worst + d_best) under an arbitrary
/// distance. Throws Error{DegenerateDenominator} when the sum is below 1e-12.
ScoreResult score_with(const Cfn& f, const AnchorDistance& distance);

/// Combined-distance score: score_with using cf_c and `params`.
ScoreResult score(const Cfn& f, const DistanceParams& params);

/// Same construction with the legacy three-term Minkowski distance.
ScoreResult legacy_score(const Cfn& f, Order p);

enum class Ordering { FirstBetter, SecondBetter, Equal };

const char* to_string(Ordering o) noexcept;

/// Orders by score, Equal when the scores differ by at most kTieTolerance.
Ordering compare(const Cfn& a, const Cfn& b, const DistanceParams& params);

}  // namespace cfkit
