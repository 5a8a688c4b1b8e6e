#include "cfkit/score.hpp"

#include <cmath>

#include "cfkit/error.hpp"

namespace cfkit {

ScoreResult score_with(const Cfn& f, const AnchorDistance& distance) {
  const double d_worst = distance(f, Cfn::worst());
  const double d_best = distance(f, Cfn::best());
  const double denom = d_worst + d_best;
  if (!(denom >= 1e-12)) {
    throw Error(ErrorCode::DegenerateDenominator,
                "score denominator vanished: distances to both anchors are zero");
  }
  return {d_worst / denom, d_worst, d_best};
}

ScoreResult score(const Cfn& f, const DistanceParams& params) {
  return score_with(f, [&](const Cfn& a, const Cfn& b) { return cf_c(a, b, params); });
}

ScoreResult legacy_score(const Cfn& f, Order p) {
  return score_with(f, [p](const Cfn& a, const Cfn& b) { return legacy_minkowski(a, b, p); });
}

const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::FirstBetter: return "first_better";
    case Ordering::SecondBetter: return "second_better";
    case Ordering::Equal: return "equal";
  }
  return "unknown";
}

Ordering compare(const Cfn& a, const Cfn& b, const DistanceParams& params) {
  const double s1 = score(a, params).s;
  const double s2 = score(b, params).s;
  if (std::abs(s1 - s2) <= kTieTolerance) return Ordering::Equal;
  return s1 > s2 ? Ordering::FirstBetter : Ordering::SecondBetter;
}

}  // namespace cfkit
