#include "blpinn/correctors.hpp"

#include <cmath>

#include "blpinn/errors.hpp"

namespace blpinn {

LayerJet exp_layer_jet(double eps, double x) {
  const double v = std::exp(-x / eps);
  if (v == 0.0) return LayerJet{};
  return LayerJet{v, -v / eps, v / (eps * eps)};
}

LayerJet sqrt_layer_jet(double eps, double x, LayerSide side) {
  const double s = std::sqrt(eps);
  const double d = (side == LayerSide::Left) ? x : (1.0 - x);
  const double v = std::exp(-d / s);
  if (v == 0.0) return LayerJet{};
  const double sign = (side == LayerSide::Left) ? -1.0 : 1.0;
  return LayerJet{v, sign * v / s, v / eps};
}

void check_burgers_forcing(const Forcing& f) {
  const double f1 = f.antiderivative(1.0);
  for (int i = 0; i <= 1000; ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    const double radicand = 2.0 * (f.antiderivative(x) - f1) + 1.0;
    if (radicand <= 0.0) {
      throw DataConditionViolation(
          "burgers_u0: 2*int_1^x f + 1 is not positive at x = " +
          std::to_string(x));
    }
  }
}

double burgers_u0(const Forcing& f, double x) {
  const double radicand = 2.0 * (f.antiderivative(x) - f.antiderivative(1.0)) + 1.0;
  if (radicand <= 0.0) {
    throw DataConditionViolation(
        "burgers_u0: 2*int_1^x f + 1 is not positive at x = " +
        std::to_string(x));
  }
  return -std::sqrt(radicand);
}

LayerJet burgers_phi_jet(double eps, double u00, double x) {
  const double e = std::exp(u00 * x / eps);  // u00 < 0, decays in x
  if (e == 0.0) return LayerJet{};
  const double phi =
      2.0 * u00 * (1.0 + u00) * e / (1.0 - u00 - (1.0 + u00) * e);
  const double phix = (u00 * phi + 0.5 * phi * phi) / eps;
  const double phixx = phix * (u00 + phi) / eps;
  return LayerJet{phi, phix, phixx};
}

LayerJet burgers_phi_tilde_jet(double eps, double u00, double x) {
  if (std::abs(1.0 + u00) <= 1e-12) {
    throw DegenerateCorrector(
        "burgers_phi_tilde_jet: layer amplitude 1 + u0(0) vanishes");
  }
  // Normalizing by the same expression evaluated at x = 0 makes
  // phi_tilde(0) == 1 exact in floating point.
  const double phi0 = burgers_phi_jet(eps, u00, 0.0).v;
  LayerJet jet = burgers_phi_jet(eps, u00, x);
  jet.v /= phi0;
  jet.vx /= phi0;
  jet.vxx /= phi0;
  return jet;
}

}  // namespace blpinn
