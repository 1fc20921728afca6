#ifndef BLPINN_REFERENCE_HPP
#define BLPINN_REFERENCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "blpinn/problems.hpp"
#include "blpinn/spline.hpp"

namespace blpinn {

enum class Provenance { ClosedForm, OracleSolver };

// High-resolution mesh solution with a natural cubic spline interpolant.
struct ReferenceSolution {
  std::vector<double> mesh;
  std::vector<double> values;
  CubicSpline spline;
  Provenance provenance = Provenance::OracleSolver;
  int mesh_size = 0;
  int newton_iters = 0;
};

// Exact solution of -eps u'' - u' = 1 with zero boundary values.
double exact_cd(double eps, double x);

// Exact solution of -eps u'' + u = 1 with zero boundary values.
double exact_rd(double eps, double x);

// Damped Newton on a second-order centered finite-difference discretization
// over a Shishkin-type piecewise-uniform mesh with M intervals. The reported
// values carry one Richardson extrapolation step (a nested solve at M/2),
// which lifts the smooth part of the error to fourth order.
// Supported kinds: SingularCD, SingularRD, SingularNCD, Burgers, RegularCD,
// RegularRD. Throws MeshTooCoarse if M < 64, NewtonDivergence on failure.
// richardson = false skips the extrapolation step, leaving the plain
// second-order solution (used by the self-convergence certification).
ReferenceSolution oracle_solve(const ProblemSpec& spec, int M,
                               bool richardson = true);

double interpolate(const ReferenceSolution& ref, double x);

// Evaluation grid for error norms: half the points resolve the boundary
// layer region(s) so the layer contributes correctly to the norm.
struct ErrorGrid {
  std::vector<double> points;  // increasing, includes 0 and 1
};

ErrorGrid make_error_grid(const ProblemSpec& spec, int n);
ErrorGrid make_uniform_grid(int n);

// ||predicted - truth|| / ||truth||, composite trapezoid over the grid.
// Throws ZeroTruthNorm when ||truth|| <= 1e-14.
double rel_l2_error(const std::function<double(double)>& predicted,
                    const std::function<double(double)>& truth,
                    const ErrorGrid& grid);

// L2 norm of a function over (0,1) by trapezoid on the grid.
double l2_norm(const std::function<double(double)>& fn, const ErrorGrid& grid);

// CSV export (columns: x, u) for plotting.
void write_reference_csv(const ReferenceSolution& ref,
                         const std::string& path);

}  // namespace blpinn

#endif  // BLPINN_REFERENCE_HPP
