#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "blpinn/errors.hpp"
#include "blpinn/reference.hpp"
#include "doctest.h"

using namespace blpinn;

namespace {

ProblemSpec cd(double eps) {
  return ProblemSpec::singular_cd(eps, Forcing::constant(1.0));
}
ProblemSpec rd(double eps) {
  return ProblemSpec::singular_rd(eps, Forcing::constant(1.0));
}

}  // namespace

TEST_CASE("cubic spline interpolation") {
  std::vector<double> x, y;
  for (int i = 0; i <= 100; ++i) {
    x.push_back(static_cast<double>(i) / 100.0);
    y.push_back(std::sin(3.0 * x.back()));
  }
  const CubicSpline s(x, y);
  for (int i = 0; i <= 100; ++i) {
    CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-13));
  }
  for (double t : {0.005, 0.1234, 0.555, 0.9876}) {
    CHECK(s(t) == doctest::Approx(std::sin(3.0 * t)).epsilon(1e-5));
  }
  // a natural spline reproduces affine data exactly
  const CubicSpline lin({0.0, 0.3, 0.7, 1.0}, {1.0, 1.6, 2.4, 3.0});
  CHECK(lin(0.5) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("closed-form solutions satisfy their equations and boundaries") {
  const double h = 1e-4;
  for (double eps : {1.0, 0.1}) {
    CHECK(exact_cd(eps, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(exact_cd(eps, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(exact_rd(eps, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(exact_rd(eps, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    for (double x : {0.2, 0.5, 0.8}) {
      const double c_xx =
          (exact_cd(eps, x + h) - 2.0 * exact_cd(eps, x) + exact_cd(eps, x - h)) /
          (h * h);
      const double c_x = (exact_cd(eps, x + h) - exact_cd(eps, x - h)) / (2.0 * h);
      CHECK(-eps * c_xx - c_x == doctest::Approx(1.0).epsilon(1e-5));
      const double r_xx =
          (exact_rd(eps, x + h) - 2.0 * exact_rd(eps, x) + exact_rd(eps, x - h)) /
          (h * h);
      CHECK(-eps * r_xx + exact_rd(eps, x) == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
  // no overflow at extreme eps
  CHECK(std::isfinite(exact_cd(1e-8, 0.5)));
  CHECK(std::isfinite(exact_rd(1e-12, 0.5)));
  CHECK(exact_cd(1e-8, 0.5) == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(exact_rd(1e-8, 0.5) == doctest::Approx(1.0).epsilon(1e-7));
  // frozen spot value: (1 - e^{-1/2})/(1 - e^{-1}) - 1/2
  CHECK(exact_cd(1.0, 0.5) ==
        doctest::Approx(0.1224593312018546).epsilon(1e-12));
}

TEST_CASE("mesh solver reproduces the convection-diffusion closed form") {
  const ReferenceSolution ref = oracle_solve(cd(1e-3), 2048);
  CHECK(ref.mesh.front() == 0.0);
  CHECK(ref.mesh.back() == 1.0);
  CHECK(ref.values.front() == 0.0);
  CHECK(ref.values.back() == 0.0);
  const ErrorGrid grid = make_error_grid(cd(1e-3), 4000);
  const double err = rel_l2_error(
      [&](double x) { return interpolate(ref, x); },
      [](double x) { return exact_cd(1e-3, x); }, grid);
  CHECK(err <= 1e-6);
}

TEST_CASE("mesh solver reproduces the reaction-diffusion closed form") {
  const ReferenceSolution ref = oracle_solve(rd(1e-8), 2048);
  const ErrorGrid grid = make_error_grid(rd(1e-8), 4000);
  const double err = rel_l2_error(
      [&](double x) { return interpolate(ref, x); },
      [](double x) { return exact_rd(1e-8, x); }, grid);
  CHECK(err <= 1e-5);
}

TEST_CASE("mesh solver handles the regular family on a uniform mesh") {
  const ProblemSpec spec = ProblemSpec::regular_cd(Forcing::constant(1.0));
  const ReferenceSolution ref = oracle_solve(spec, 512);
  const ErrorGrid grid = make_uniform_grid(2000);
  const double err = rel_l2_error(
      [&](double x) { return interpolate(ref, x); },
      [](double x) { return exact_cd(1.0, x); }, grid);
  // natural-spline end conditions limit the interpolant near the boundary
  CHECK(err <= 1e-6);
}

TEST_CASE("viscous solver stays near the matched asymptotic expansion") {
  const ProblemSpec spec =
      ProblemSpec::burgers(1e-2, Forcing::constant(-1.0));
  const ReferenceSolution ref = oracle_solve(spec, 1024);
  CHECK(ref.values.front() == -1.0);
  CHECK(ref.values.back() == -1.0);
  CHECK(ref.newton_iters >= 1);
  // interior value close to the inviscid limit away from the layer
  CHECK(interpolate(ref, 0.5) ==
        doctest::Approx(-std::sqrt(2.0)).epsilon(2e-2));
}

TEST_CASE("coarse meshes are rejected") {
  CHECK_THROWS_AS(oracle_solve(cd(1e-3), 32), MeshTooCoarse);
}

TEST_CASE("evaluation grids are increasing and span the interval") {
  for (const ProblemSpec& s :
       {cd(1e-4), rd(1e-8), ProblemSpec::regular_rd(Forcing::constant(1.0))}) {
    const ErrorGrid g = make_error_grid(s, 1000);
    REQUIRE(g.points.size() == 1001);
    CHECK(g.points.front() == 0.0);
    CHECK(g.points.back() == 1.0);
    for (std::size_t i = 1; i < g.points.size(); ++i) {
      CHECK(g.points[i] > g.points[i - 1]);
    }
  }
  // half the points resolve the layer region
  const ErrorGrid g = make_error_grid(cd(1e-4), 1000);
  const double w = 30.0 * 1e-4;
  int inside = 0;
  for (double x : g.points) inside += (x <= w + 1e-15);
  CHECK(inside >= 500);
}

TEST_CASE("relative L2 error metric") {
  const ErrorGrid g = make_uniform_grid(2000);
  auto truth = [](double x) { return 1.0 + x; };
  CHECK(rel_l2_error(truth, truth, g) == 0.0);
  auto scaled = [](double x) { return 1.1 * (1.0 + x); };
  CHECK(rel_l2_error(scaled, truth, g) == doctest::Approx(0.1).epsilon(1e-10));
  auto zero = [](double) { return 0.0; };
  CHECK(rel_l2_error(zero, truth, g) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rel_l2_error(truth, zero, g), ZeroTruthNorm);
  CHECK(l2_norm([](double) { return 1.0; }, g) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("reference CSV export") {
  const ReferenceSolution ref = oracle_solve(cd(1e-2), 64);
  const std::string path = "test_reference_out.csv";
  write_reference_csv(ref, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,u");
  int rows = 0;
  std::string row;
  while (std::getline(in, row)) ++rows;
  CHECK(rows == static_cast<int>(ref.mesh.size()));
  std::remove(path.c_str());
}
