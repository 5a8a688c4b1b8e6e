#pragma once

#include <compare>
#include <string>

#include "cfkit/cfn.hpp"

namespace cfkit {

/// Minkowski order: an integer in [1, kMaxOrder] or the Chebyshev limit.
class Order {
 public:
  static constexpr int kMaxOrder = 64;

  /// Throws Error{InvalidParams} outside [1, kMaxOrder].
  explicit Order(int p);

  static Order chebyshev() noexcept { return Order{}; }

  bool is_chebyshev() const noexcept { return p_ == 0; }
  /// Integer order; 0 for the Chebyshev variant.
  int value() const noexcept { return p_; }

  /// "1".."64" or "inf".
  std::string to_string() const;
  /// Accepts the forms produced by to_string() plus "chebyshev".
  static Order parse(const std::string& text);

  auto operator<=>(const Order&) const = default;

 private:
  Order() noexcept = default;
  int p_ = 0;
};

/// Minkowski order p and balance parameter lambda in [0, 1].
/// cf_h reads neither field; cf_im and legacy_minkowski read only p.
class DistanceParams {
 public:
  /// Throws Error{InvalidParams} when lambda is outside [0, 1] or not finite.
  DistanceParams(Order p, double lambda);
  DistanceParams(int p, double lambda) : DistanceParams(Order{p}, lambda) {}

  Order p() const noexcept { return p_; }
  double lambda() const noexcept { return lambda_; }

 private:
  Order p_;
  double lambda_;
};

/// Distance of the original CFS Minkowski form over (u*, v*, j); ignores
/// hesitancy.
double legacy_minkowski(const Cfn& a, const Cfn& b, Order p) noexcept;

/// Improved Minkowski distance over the 4-vector (u*, v*, j, h).
double cf_im(const Cfn& a, const Cfn& b, Order p) noexcept;

/// Hausdorff distance of the interval forms: max(|du*|, |dv*|).
double cf_h(const Cfn& a, const Cfn& b) noexcept;
inline double cf_h(const Cfn& a, const Cfn& b, const DistanceParams&) noexcept { return cf_h(a, b); }

/// lambda * cf_im + (1 - lambda) * cf_h.
double cf_c(const Cfn& a, const Cfn& b, const DistanceParams& params) noexcept;

/// Hausdorff distance between closed intervals computed from the sup-inf
/// definition (farthest endpoint of one set from the other set). Kept apart
/// from cf_h so the two can check each other.
double interval_hausdorff_oracle(const IntervalForm& a, const IntervalForm& b) noexcept;

namespace detail {

/// |x|^p for integer p by repeated squaring.
double abs_pow(double x, int p) noexcept;

}  // namespace detail

}  // namespace cfkit
