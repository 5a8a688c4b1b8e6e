#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cfkit/error.hpp"
#include "cfkit/pain_eval.hpp"
#include "cfkit/perturbation.hpp"
#include "doctest.h"

using namespace cfkit;
using namespace cfkit::pain;

namespace {

const std::vector<int> kCaseItems{4, 5, 4, 5, 4, 4, 3};
const double kCasePain = 29.0 / 70.0;

// Plain evaluation of the score from its definition, for the brute-force oracle.
double score_by_hand(double u, double v, double j, int p, double lambda) {
  const auto im = [&](double a1, double a2, double a3, double a4) {
    double s = 0.0;
    for (double x : {a1, a2, a3, a4}) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
  };
  const double us = u - j, vs = v - j, h = 1 - u - v + j;
  const double m_worst = im(us, vs - 1, j, h), m_best = im(us - 1, vs, j, h);
  const double h_worst = std::max(std::abs(us), std::abs(vs - 1));
  const double h_best = std::max(std::abs(us - 1), std::abs(vs));
  const double worst = lambda * m_worst + (1 - lambda) * h_worst;
  const double best = lambda * m_best + (1 - lambda) * h_best;
  return worst / (worst + best);
}

double brute_force_objective(double u, double v, double target, int p, double lambda, int points) {
  const double lo = std::max(0.0, u + v - 1), hi = std::min(u, v);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < points; ++k) {
    const double j = lo + (hi - lo) * k / (points - 1);
    const double d = target - score_by_hand(u, v, j, p, lambda);
    best = std::min(best, d * d);
  }
  return best;
}

}  // namespace

TEST_CASE("normalize_patient_score") {
  CHECK(normalize_patient_score(kCaseItems) == doctest::Approx(29.0 / 70.0).epsilon(1e-15));
  CHECK(normalize_patient_score(std::vector<int>(7, 0)) == 0.0);
  CHECK(normalize_patient_score(std::vector<int>(7, 10)) == 1.0);

  try {
    normalize_patient_score(std::vector<int>(6, 1));
    FAIL("expected BadItemCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadItemCount);
  }
  try {
    normalize_patient_score(std::vector<int>{1, 2, 3, 11, 0, 0, 0});
    FAIL("expected ItemOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ItemOutOfRange);
    CHECK(std::string(e.what()).find("normal_work") != std::string::npos);
  }
  CHECK_THROWS_AS(normalize_patient_score(std::vector<int>{-1, 0, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("assessment validation") {
  PainAssessment a{kCaseItems, 0.4, 0.7};
  CHECK_NOTHROW(a.validate());
  a.sim_to_scale10 = 1.3;
  CHECK_THROWS_AS(a.validate(), Error);
}

TEST_CASE("minimize_bounded finds interior and boundary minima") {
  auto m = minimize_bounded([](double x) { return (x - 0.3137) * (x - 0.3137); }, 0.0, 1.0, 101, 1e-10);
  CHECK(m.x == doctest::Approx(0.3137).epsilon(1e-8));
  m = minimize_bounded([](double x) { return -x; }, 0.1, 0.4, 101, 1e-10);
  CHECK(m.x == 0.4);
  m = minimize_bounded([](double x) { return x; }, 0.2, 0.2, 101, 1e-10);
  CHECK(m.x == 0.2);
  // Two wells; the deeper one sits away from the first local descent.
  m = minimize_bounded([](double x) { return std::min(std::abs(x - 0.2) + 0.1, std::abs(x - 0.85)); }, 0, 1,
                       1001, 1e-10);
  CHECK(m.x == doctest::Approx(0.85).epsilon(1e-8));
}

TEST_CASE("s(j) increases across the case-study interval") {
  const DistanceParams params{2, 0.5};
  const auto s = [&](double j) { return score(Cfn::make(0.4, 0.7, j), params).s; };
  CHECK(s(0.1) < s(0.25));
  CHECK(s(0.25) < s(0.4));
  // Dense scan: strictly increasing everywhere on a 10^4 grid.
  double prev = s(0.1);
  const auto [lo, hi] = joint_bounds(0.4, 0.7);
  for (int k = 1; k < 10000; ++k) {
    const double cur = s(lo + (hi - lo) * k / 9999.0);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(s(0.4) < 1.0 - kCasePain);
}

TEST_CASE("case study optimum sits on the upper bound") {
  const auto sol = solve_programming1(0.4, 0.7, kCasePain, {2, 0.5});
  CHECK(sol.j_opt == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(sol.j_hi == 0.4);
  CHECK(sol.confusion_ratio == doctest::Approx(1.0));
  CHECK(sol.s_opt == doctest::Approx(score_by_hand(0.4, 0.7, 0.4, 2, 0.5)).epsilon(1e-12));
  CHECK(sol.nurse_pain == doctest::Approx(1.0 - sol.s_opt));
  CHECK(sol.gap == doctest::Approx(sol.nurse_pain - kCasePain));
  CHECK(sol.recommendation == Recommendation::SecondNurseSuggested);

  // Any target at or above s(0.4) keeps the optimum pinned to the bound.
  const double s_top = sol.s_opt;
  for (double target : {s_top, s_top + 0.1, 1.0}) {
    CHECK(solve_programming1(0.4, 0.7, 1.0 - target, {2, 0.5}).j_opt == doctest::Approx(0.4).epsilon(1e-9));
  }
}

TEST_CASE("self-consistent target gives a zero gap") {
  const DistanceParams params{2, 0.5};
  const double j_star = 0.3137;
  const double s_star = score(Cfn::make(0.5, 0.5, j_star), params).s;
  const auto sol = solve_programming1(0.5, 0.5, 1.0 - s_star, params);
  CHECK(std::abs(sol.s_opt - s_star) <= 1e-9);
  CHECK(std::abs(sol.gap) <= 1e-9);
  CHECK(sol.j_lo == 0.0);
  CHECK(sol.j_hi == 0.5);
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(solve_programming1(0.4, 0.7, 1.2, {2, 0.5}), Error);
  CHECK_THROWS_AS(solve_programming1(0.4, 0.7, 0.5, {2, 0.5}, 100), Error);
  CHECK_THROWS_AS(solve_programming1(1.4, 0.7, 0.5, {2, 0.5}), Error);
}

TEST_CASE("degenerate feasible interval has confusion ratio 0") {
  const auto sol = solve_programming1(1.0, 0.0, 0.0, {2, 0.5});
  CHECK(sol.j_lo == 0.0);
  CHECK(sol.j_hi == 0.0);
  CHECK(sol.confusion_ratio == 0.0);
  CHECK(sol.s_opt == 1.0);
}

TEST_CASE("interpret") {
  auto sol = solve_programming1(0.4, 0.7, kCasePain, {2, 0.5});
  auto verdict = interpret(sol, 0.9);
  CHECK(verdict.recommendation == Recommendation::SecondNurseSuggested);
  CHECK(verdict.final_pain_score == doctest::Approx(sol.nurse_pain));

  PainSolution flat{};
  flat.nurse_pain = 0.3;
  flat.patient_pain = 0.3;
  flat.confusion_ratio = 0.0;
  verdict = interpret(flat, 0.9);
  CHECK(verdict.recommendation == Recommendation::AcceptNurseScore);
  CHECK(verdict.final_pain_score == 0.3);

  flat.nurse_pain = 0.6;
  flat.confusion_ratio = 0.2;
  verdict = interpret(flat, 0.9);
  CHECK(verdict.recommendation == Recommendation::AcceptNurseScore);
  CHECK(verdict.final_pain_score == 0.6);

  flat.patient_pain = 0.8;
  CHECK(interpret(flat, 0.9).final_pain_score == 0.8);
  CHECK_THROWS_AS(interpret(flat, 1.5), Error);
  CHECK(std::string(to_string(Recommendation::SecondNurseSuggested)) == "second_nurse_suggested");
}

TEST_CASE("sensitivity sweep") {
  std::vector<Order> orders;
  for (int p = 1; p <= 10; ++p) orders.emplace_back(p);
  const auto rows = sensitivity_sweep(0.4, 0.7, kCasePain, orders, uniform_grid(20));
  REQUIRE(rows.size() == 10 * 21);
  for (const auto& r : rows) {
    CHECK(r.mode == "cfc");
    CHECK(r.j_opt == doctest::Approx(0.4).epsilon(1e-9));
  }

  const auto cell = sensitivity_sweep(0.4, 0.7, kCasePain, {Order{3}}, {0.35});
  const auto direct = solve_programming1(0.4, 0.7, kCasePain, {3, 0.35});
  REQUIRE(cell.size() == 1);
  CHECK(cell[0].j_opt == direct.j_opt);
  CHECK(cell[0].s_opt == direct.s_opt);
  CHECK(cell[0].gap == direct.gap);

  // For fixed lambda the gap rises with p from p = 2 on.
  for (int l = 0; l <= 20; ++l) {
    for (int p = 2; p < 10; ++p) {
      const auto& a = rows[(p - 1) * 21 + l];
      const auto& b = rows[p * 21 + l];
      CHECK(b.gap >= a.gap - 1e-12);
    }
  }
}

TEST_CASE("legacy comparison sweep") {
  std::vector<Order> orders;
  for (int p = 1; p <= 10; ++p) orders.emplace_back(p);
  const auto legacy = legacy_comparison_sweep(0.4, 0.7, kCasePain, orders);
  const auto cfc = sensitivity_sweep(0.4, 0.7, kCasePain, orders, {0.5});
  const auto cfc_full = sensitivity_sweep(0.4, 0.7, kCasePain, orders, {1.0});
  REQUIRE(legacy.size() == 10);
  CHECK(std::isnan(legacy[0].lambda));
  CHECK(gap_spread(legacy) > gap_spread(cfc));
  CHECK(gap_spread(legacy) > gap_spread(cfc_full));
  for (std::size_t i = 0; i < legacy.size(); ++i) CHECK(legacy[i].gap >= cfc_full[i].gap - 1e-12);

  CHECK(gap_spread(std::span(legacy).first(1)) == 0.0);
}

TEST_CASE("property: grid + refinement matches a 10^5-point brute force") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> order(1, 10);
  for (int i = 0; i < 100; ++i) {
    const double u = unit(rng), v = unit(rng), target = unit(rng), lambda = unit(rng);
    const int p = order(rng);
    const auto sol = solve_programming1(u, v, 1.0 - target, {p, lambda});
    CHECK(sol.j_opt >= sol.j_lo);
    CHECK(sol.j_opt <= sol.j_hi);
    CHECK(sol.objective <= brute_force_objective(u, v, target, p, lambda, 100000) + 1e-10);
    const auto again = solve_programming1(u, v, 1.0 - target, {p, lambda});
    CHECK(again.j_opt == sol.j_opt);
  }
}
