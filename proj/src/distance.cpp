#include "cfkit/distance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <span>

#include "cfkit/error.hpp"

namespace cfkit {

Order::Order(int p) : p_(p) {
  if (p < 1 || p > kMaxOrder) {
    throw Error(ErrorCode::InvalidParams,
                "Minkowski order must be an integer in [1, " + std::to_string(kMaxOrder) +
                    "] or 'inf', got " + std::to_string(p));
  }
}

std::string Order::to_string() const { return is_chebyshev() ? "inf" : std::to_string(p_); }

Order Order::parse(const std::string& text) {
  if (text == "inf" || text == "chebyshev") return chebyshev();
  int p = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, p);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::InvalidParams, "Minkowski order must be an integer or 'inf', got '" + text + "'");
  }
  return Order{p};
}

DistanceParams::DistanceParams(Order p, double lambda) : p_(p), lambda_(lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw Error(ErrorCode::InvalidParams, "balance parameter lambda must lie in [0, 1], got " +
                                              std::to_string(lambda));
  }
}

namespace detail {

double abs_pow(double x, int p) noexcept {
  double base = std::abs(x);
  double result = 1.0;
  while (p > 0) {
    if (p & 1) result *= base;
    base *= base;
    p >>= 1;
  }
  return result;
}

}  // namespace detail

namespace {

double lp_norm(std::span<const double> diffs, Order p) noexcept {
  if (p.is_chebyshev()) {
    double m = 0.0;
    for (double d : diffs) m = std::max(m, std::abs(d));
    return m;
  }
  double sum = 0.0;
  for (double d : diffs) sum += detail::abs_pow(d, p.value());
  switch (p.value()) {
    case 1: return sum;
    case 2: return std::sqrt(sum);
    default: return std::pow(sum, 1.0 / p.value());
  }
}

}  // namespace

double legacy_minkowski(const Cfn& a, const Cfn& b, Order p) noexcept {
  const std::array diffs{a.u_star() - b.u_star(), a.v_star() - b.v_star(), a.j() - b.j()};
  return lp_norm(diffs, p);
}

double cf_im(const Cfn& a, const Cfn& b, Order p) noexcept {
  const std::array diffs{a.u_star() - b.u_star(), a.v_star() - b.v_star(), a.j() - b.j(),
                         a.hesitancy() - b.hesitancy()};
  return lp_norm(diffs, p);
}

double cf_h(const Cfn& a, const Cfn& b) noexcept {
  return std::max(std::abs(a.u_star() - b.u_star()), std::abs(a.v_star() - b.v_star()));
}

double cf_c(const Cfn& a, const Cfn& b, const DistanceParams& params) noexcept {
  const double lambda = params.lambda();
  return lambda * cf_im(a, b, params.p()) + (1.0 - lambda) * cf_h(a, b);
}

namespace {

double point_to_interval(double x, const IntervalForm& iv) noexcept {
  return std::max({0.0, iv.lo - x, x - iv.hi});
}

}  // namespace

double interval_hausdorff_oracle(const IntervalForm& a, const IntervalForm& b) noexcept {
  // The distance to a closed interval is convex in the point, so each
  // supremum is attained at an endpoint.
  const double a_from_b = std::max(point_to_interval(a.lo, b), point_to_interval(a.hi, b));
  const double b_from_a = std::max(point_to_interval(b.lo, a), point_to_interval(b.hi, a));
  return std::max(a_from_b, b_from_a);
}

}  // namespace cfkit
