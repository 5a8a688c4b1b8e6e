#pragma once

namespace cfkit {

/// Inputs that miss a bound by at most this much are clamped onto it.
inline constexpr double kClampTolerance = 1e-9;

/// Component-wise tolerance used by operator==.
inline constexpr double kEqualityTolerance = 1e-12;

struct JointBounds {
  double lo;
  double hi;
};

/// Admissible joint degrees for a membership/non-membership pair:
/// [max(0, u + v - 1), min(u, v)]. Throws OutOfRange when u or v leave [0, 1].
JointBounds joint_bounds(double u, double v);

/// Overlap-free degrees of a CFN. u_star + v_star + j + h == 1.
struct DerivedDegrees {
  double u_star;
  double v_star;
  double h;
};

/// Closed interval [u*, 1 - v*] of possible "goodness" of a CFN.
struct IntervalForm {
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
};

/// Cognitive fuzzy number <u, v, j>: membership u, non-membership v and
/// their joint (overlap) degree j. Immutable once built; only the raw triple
/// is stored.
class CognitiveFuzzyNumber {
 public:
  /// Validating factory. Throws Error{OutOfRange} or
  /// Error{JointBoundViolation}; the latter message names the admissible
  /// interval for j.
  static CognitiveFuzzyNumber make(double u, double v, double j);

  static CognitiveFuzzyNumber best() noexcept { return {1.0, 0.0, 0.0}; }
  static CognitiveFuzzyNumber worst() noexcept { return {0.0, 1.0, 0.0}; }

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  double j() const noexcept { return j_; }

  double u_star() const noexcept { return u_ - j_; }
  double v_star() const noexcept { return v_ - j_; }
  double hesitancy() const noexcept { return 1.0 - u_ - v_ + j_; }

  DerivedDegrees derived() const noexcept { return {u_star(), v_star(), hesitancy()}; }
  IntervalForm to_interval() const noexcept { return {u_star(), 1.0 - v_star()}; }

  friend bool operator==(const CognitiveFuzzyNumber& a, const CognitiveFuzzyNumber& b) noexcept;

 private:
  constexpr CognitiveFuzzyNumber(double u, double v, double j) noexcept : u_(u), v_(v), j_(j) {}

  double u_;
  double v_;
  double j_;
};

using Cfn = CognitiveFuzzyNumber;

inline Cfn new_cfn(double u, double v, double j) { return Cfn::make(u, v, j); }
inline DerivedDegrees derived(const Cfn& f) noexcept { return f.derived(); }
inline IntervalForm to_interval(const Cfn& f) noexcept { return f.to_interval(); }

}  // namespace cfkit
