#include "cfkit/cfn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cfkit/error.hpp"

namespace cfkit {
namespace {

// Snaps x into [lo, hi] when it misses by at most kClampTolerance.
bool snap_into(double& x, double lo, double hi) {
  if (!std::isfinite(x)) return false;
  if (x < lo) {
    if (lo - x > kClampTolerance) return false;
    x = lo;
  } else if (x > hi) {
    if (x - hi > kClampTolerance) return false;
    x = hi;
  }
  return true;
}

double unit_component(double x, const char* name) {
  if (!snap_into(x, 0.0, 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << x << " is outside [0, 1]";
    throw Error(ErrorCode::OutOfRange, msg.str());
  }
  return x;
}

JointBounds bounds_of(double u, double v) {
  return {std::max(0.0, u + v - 1.0), std::min(u, v)};
}

}  // namespace

JointBounds joint_bounds(double u, double v) {
  return bounds_of(unit_component(u, "u"), unit_component(v, "v"));
}

CognitiveFuzzyNumber CognitiveFuzzyNumber::make(double u, double v, double j) {
  u = unit_component(u, "u");
  v = unit_component(v, "v");
  j = unit_component(j, "j");
  const auto [lo, hi] = bounds_of(u, v);
  if (!snap_into(j, lo, hi)) {
    std::ostringstream msg;
    msg << "joint degree j = " << j << " must lie in [" << lo << ", " << hi << "] for u = " << u
        << ", v = " << v;
    throw Error(ErrorCode::JointBoundViolation, msg.str());
  }
  return {u, v, j};
}

bool operator==(const CognitiveFuzzyNumber& a, const CognitiveFuzzyNumber& b) noexcept {
  return std::abs(a.u_ - b.u_) <= kEqualityTolerance && std::abs(a.v_ - b.v_) <= kEqualityTolerance &&
         std::abs(a.j_ - b.j_) <= kEqualityTolerance;
}

}  // namespace cfkit
