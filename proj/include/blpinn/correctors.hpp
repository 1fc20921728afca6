#ifndef BLPINN_CORRECTORS_HPP
#define BLPINN_CORRECTORS_HPP

#include "blpinn/forcing.hpp"

namespace blpinn {

// A layer profile value with its first two derivatives.
struct LayerJet {
  double v = 0.0;
  double vx = 0.0;
  double vxx = 0.0;
};

enum class LayerSide { Left, Right };

// Outflow-layer profile e^{-x/eps}. Solves -eps v'' - v' = 0 exactly.
// Underflowed exponentials return exact zeros in all three slots so that
// eps^{-2}-scaled products never produce NaN.
LayerJet exp_layer_jet(double eps, double x);

// Reaction-diffusion layer profiles e^{-x/sqrt(eps)} (left) and
// e^{-(1-x)/sqrt(eps)} (right). Solve -eps v'' + v = 0 exactly.
LayerJet sqrt_layer_jet(double eps, double x, LayerSide side);

// Limit solution of the inviscid Burgers problem with inflow value -1 at x=1:
//   u0(x) = -sqrt(2 * int_1^x f + 1).
// Throws DataConditionViolation if the radicand is <= 0 anywhere on a
// 1001-point scan of [0, 1].
double burgers_u0(const Forcing& f, double x);

// Scans the radicand once; throws DataConditionViolation on failure.
void check_burgers_forcing(const Forcing& f);

// Burgers boundary-layer corrector phi and derivatives, for u00 = u0(0) < 0:
//   phi(x) = 2 u00 (1+u00) E / (1 - u00 - (1+u00) E),  E = e^{u00 x / eps}.
// Derivatives come from the first-order layer ODE
//   eps phi' = u00 phi + phi^2 / 2,   eps phi'' = phi' (u00 + phi).
LayerJet burgers_phi_jet(double eps, double u00, double x);

// Normalized corrector phi~ = phi / phi(0) with phi(0) = -(1 + u00), so
// phi~(0) = 1 exactly. Throws DegenerateCorrector when |1 + u00| <= 1e-12.
LayerJet burgers_phi_tilde_jet(double eps, double u00, double x);

}  // namespace blpinn

#endif  // BLPINN_CORRECTORS_HPP
