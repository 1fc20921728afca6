#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "blpinn/net2.hpp"
#include "doctest.h"

using namespace blpinn;

TEST_CASE("sigmoid basics") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(sigmoid(800.0) == doctest::Approx(1.0));
  CHECK(sigmoid(-800.0) >= 0.0);
  CHECK(std::isfinite(sigmoid(-800.0)));
  CHECK(std::isfinite(sigmoid(800.0)));
  // symmetry: sigma(-x) = 1 - sigma(x)
  for (double x : {0.3, 1.7, 5.0}) {
    CHECK(sigmoid(-x) == doctest::Approx(1.0 - sigmoid(x)).epsilon(1e-15));
  }
}

TEST_CASE("sigmoid jet at log 3 matches hand-computed values") {
  // sigma(ln 3) = 3/4, so s1 = 3/16, s2 = -3/32, s3 = -3/128.
  const SigmoidJet j = sigmoid_jet(std::log(3.0));
  CHECK(j.s == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(j.s1 == doctest::Approx(0.1875).epsilon(1e-14));
  CHECK(j.s2 == doctest::Approx(-0.09375).epsilon(1e-13));
  CHECK(j.s3 == doctest::Approx(-0.0234375).epsilon(1e-12));
}

TEST_CASE("sigmoid jet derivatives agree with finite differences") {
  const double h = 1e-5;
  for (double x : {-3.0, -0.7, 0.0, 0.4, 2.2}) {
    const SigmoidJet j = sigmoid_jet(x);
    const double d1 = (sigmoid(x + h) - sigmoid(x - h)) / (2.0 * h);
    const double d2 =
        (sigmoid(x + h) - 2.0 * sigmoid(x) + sigmoid(x - h)) / (h * h);
    const double d3 = (sigmoid_jet(x + h).s2 - sigmoid_jet(x - h).s2) /
                      (2.0 * h);
    CHECK(j.s1 == doctest::Approx(d1).epsilon(1e-8));
    CHECK(j.s2 == doctest::Approx(d2).epsilon(1e-4));
    CHECK(j.s3 == doctest::Approx(d3).epsilon(1e-8));
  }
}

TEST_CASE("network spatial derivatives agree with finite differences") {
  const double h = 1e-5;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const NetParams p = init_params(10, seed);
    for (double x : {0.05, 0.3, 0.71, 0.98}) {
      const NetJet j = eval_jet(p, x);
      const NetJet jp = eval_jet(p, x + h);
      const NetJet jm = eval_jet(p, x - h);
      CHECK(j.ux == doctest::Approx((jp.u - jm.u) / (2.0 * h)).epsilon(1e-7));
      CHECK(j.uxx ==
            doctest::Approx((jp.u - 2.0 * j.u + jm.u) / (h * h)).epsilon(1e-3));
    }
  }
}

TEST_CASE("parameter gradients agree with finite differences") {
  const double h = 1e-6;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    NetParams p = init_params(6, seed);
    for (double x : {0.15, 0.6, 0.9}) {
      const ParamGradJet g = param_grad_jet(p, x);
      const int n = p.n1;
      auto check_component = [&](double* slot, int k) {
        const double saved = *slot;
        *slot = saved + h;
        const NetJet jp = eval_jet(p, x);
        *slot = saved - h;
        const NetJet jm = eval_jet(p, x);
        *slot = saved;
        CHECK(g.du[k] ==
              doctest::Approx((jp.u - jm.u) / (2.0 * h)).epsilon(1e-5));
        CHECK(g.dux[k] ==
              doctest::Approx((jp.ux - jm.ux) / (2.0 * h)).epsilon(1e-4));
        CHECK(g.duxx[k] ==
              doctest::Approx((jp.uxx - jm.uxx) / (2.0 * h)).epsilon(1e-4));
      };
      for (int j = 0; j < n; ++j) {
        check_component(&p.w1[j], j);
        check_component(&p.b1[j], n + j);
        check_component(&p.w2[j], 2 * n + j);
      }
    }
  }
}

TEST_CASE("network output is linear in the outer weights") {
  NetParams p = init_params(8, 11);
  const NetJet j1 = eval_jet(p, 0.37);
  for (double& w : p.w2) w *= 2.0;
  const NetJet j2 = eval_jet(p, 0.37);
  CHECK(j2.u == doctest::Approx(2.0 * j1.u).epsilon(1e-14));
  CHECK(j2.ux == doctest::Approx(2.0 * j1.ux).epsilon(1e-14));
  CHECK(j2.uxx == doctest::Approx(2.0 * j1.uxx).epsilon(1e-14));
}

TEST_CASE("initialization is deterministic and bounded") {
  const NetParams a = init_params(50, 42);
  const NetParams b = init_params(50, 42);
  CHECK(a.w1 == b.w1);
  CHECK(a.b1 == b.b1);
  CHECK(a.w2 == b.w2);
  const NetParams c = init_params(50, 43);
  CHECK(a.w1 != c.w1);
  for (int j = 0; j < a.n1; ++j) {
    CHECK(std::abs(a.w1[j]) <= 8.0);
    CHECK(std::abs(a.b1[j]) <= 1.0);
    CHECK(std::abs(a.w2[j]) <= 0.1);
  }
  const NetParams d = init_params(4, 0, 2.5);
  for (int j = 0; j < d.n1; ++j) CHECK(std::abs(d.w1[j]) <= 2.5);
  CHECK_THROWS_AS(init_params(0, 1), std::invalid_argument);
}
