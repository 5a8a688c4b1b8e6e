#include <cmath>

#include "cfkit/error.hpp"
#include "cfkit/perturbation.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cfkit;

namespace {

const Cfn f1 = Cfn::make(0.8, 0.4, 0.32);
const Cfn f2 = Cfn::make(0.1, 0.9, 0.09);

}  // namespace

TEST_CASE("epsilon_bounds") {
  auto b = epsilon_bounds(f1);
  CHECK(b.lo == doctest::Approx(-0.48).epsilon(1e-15));
  CHECK(b.hi == doctest::Approx(0.08).epsilon(1e-14));

  b = epsilon_bounds(Cfn::make(0.5, 0.5, 0.5));
  CHECK(b.lo == 0.0);
  CHECK(b.hi == 0.0);

  b = epsilon_bounds(Cfn::make(0.6, 0.3, 0.2));
  CHECK(b.lo == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(b.hi == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("perturb") {
  const Cfn up = perturb(f1, 0.08);
  CHECK(up == Cfn::make(0.88, 0.32, 0.32));
  CHECK(up.u_star() == doctest::Approx(0.56));
  CHECK(up.v_star() == doctest::Approx(0.0));

  CHECK(perturb(f1, 0.0) == f1);

  const Cfn down = perturb(f1, -0.48);
  CHECK(down == Cfn::make(0.32, 0.88, 0.32));
  CHECK(down.u_star() == doctest::Approx(0.0));

  try {
    perturb(f1, 0.1);
    FAIL("expected OutOfEpsilonRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfEpsilonRange);
  }
}

TEST_CASE("property: perturbation keeps hesitancy") {
  testing::CfnGenerator gen(31);
  for (int i = 0; i < 10000; ++i) {
    const Cfn f = gen();
    const auto [lo, hi] = epsilon_bounds(f);
    const Cfn g = perturb(f, gen.uniform(lo, hi));
    CHECK(std::abs(g.hesitancy() - f.hesitancy()) <= 1e-15);
    CHECK(g.j() == f.j());
  }
}

TEST_CASE("config validation") {
  PerturbationConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.lambda_values = {1.2};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.p_values.clear();
  CHECK_THROWS_AS(run_study(cfg), Error);
}

TEST_CASE("trial_uniform is in [0, 1) and depends only on (seed, trial)") {
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const double x = trial_uniform(99, t);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == trial_uniform(99, t));
  }
  CHECK(trial_uniform(1, 0) != trial_uniform(2, 0));
}

TEST_CASE("single trial matches a direct recomputation") {
  PerturbationConfig cfg;
  cfg.trials = 1;
  cfg.seed = 5;
  cfg.lambda_values = {0.0, 0.5, 1.0};
  const auto study = run_study(cfg);
  REQUIRE(study.trials.size() == 1);
  const auto& t = study.trials.front();
  const auto [lo, hi] = epsilon_bounds(f1);
  CHECK(t.epsilon >= lo);
  CHECK(t.epsilon <= hi);

  const Cfn moved = Cfn::make(0.8 + t.epsilon, 0.4 - t.epsilon, 0.32);
  for (const auto& c : t.cells) {
    const DistanceParams params{c.p, c.lambda};
    CHECK(c.d_m == doctest::Approx(cf_im(moved, f2, c.p)).epsilon(1e-14));
    CHECK(c.d_h == doctest::Approx(cf_h(moved, f2)).epsilon(1e-14));
    CHECK(c.d_c == doctest::Approx(cf_c(moved, f2, params)).epsilon(1e-14));
    CHECK(c.delta_d_m == doctest::Approx(std::abs(c.d_m - cf_im(f1, f2, c.p))).epsilon(1e-12));
    CHECK(c.delta_d_h == doctest::Approx(std::abs(c.d_h - cf_h(f1, f2))).epsilon(1e-12));
    CHECK(c.delta_d_c == doctest::Approx(std::abs(c.d_c - cf_c(f1, f2, params))).epsilon(1e-12));
  }
  const auto& s = study.cell(Order{1}, 0.5);
  CHECK(s.mean_delta_d_m == t.cells[1].delta_d_m);
  CHECK_THROWS_AS(study.cell(Order{7}, 0.5), Error);
}

TEST_CASE("out-of-order trial evaluation reproduces the study") {
  PerturbationConfig cfg;
  cfg.trials = 50;
  cfg.seed = 77;
  cfg.lambda_values = {0.0, 0.25, 1.0};
  const auto study = run_study(cfg);
  for (std::size_t t = cfg.trials; t-- > 0;) {
    const auto again = run_trial(cfg, t);
    CHECK(again.epsilon == study.trials[t].epsilon);
    for (std::size_t k = 0; k < again.cells.size(); ++k) {
      CHECK(again.cells[k].d_c == study.trials[t].cells[k].d_c);
      CHECK(again.cells[k].delta_d_c == study.trials[t].cells[k].delta_d_c);
    }
  }
  const auto repeat = run_study(cfg);
  CHECK(repeat.trials.size() == study.trials.size());
  CHECK(repeat.trials.back().epsilon == study.trials.back().epsilon);
}

TEST_CASE("worked pair: dominance statistics") {
  PerturbationConfig cfg;
  cfg.lambda_values = {0.0, 0.25, 0.5, 0.75, 1.0};
  const auto study = run_study(cfg);
  for (const auto& t : study.trials) {
    for (const auto& c : t.cells) {
      CHECK(c.delta_d_m >= 0.0);
      if (c.p == Order{1}) CHECK(c.delta_d_m >= c.delta_d_h);
      if (c.lambda == 0.0) CHECK(c.delta_d_c == c.delta_d_h);
      if (c.lambda == 1.0) CHECK(c.delta_d_c == c.delta_d_m);
    }
  }
  const auto gap = [&](int p) {
    const auto& s = study.cell(Order{p}, 0.5);
    return s.mean_delta_d_m - s.mean_delta_d_h;
  };
  CHECK(gap(1) > gap(2));
  CHECK(gap(2) > gap(3));
  CHECK(study.cell(Order{1}, 0.5).count_m_ge_h == 100);
}

TEST_CASE("lambda_trend") {
  const auto rows = lambda_trend(f1, f2, Order{1}, uniform_grid(100));
  REQUIRE(rows.size() == 101);
  CHECK(rows[0].d_c == doctest::Approx(0.73).epsilon(1e-12));
  CHECK(rows[50].lambda == 0.5);
  CHECK(rows[50].d_c == doctest::Approx(1.095).epsilon(1e-12));
  CHECK(rows[100].d_c == doctest::Approx(1.46).epsilon(1e-12));
  for (const auto& r : rows) {
    CHECK(r.d_m == rows[0].d_m);
    CHECK(r.d_h == rows[0].d_h);
    CHECK(r.d_c == doctest::Approx(r.d_h + r.lambda * (r.d_m - r.d_h)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(uniform_grid(0), Error);
}
