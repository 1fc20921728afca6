#include "blpinn/net2.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace blpinn {

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

SigmoidJet sigmoid_jet(double x) {
  const double s = sigmoid(x);
  const double s1 = s * (1.0 - s);
  return SigmoidJet{s, s1, s1 * (1.0 - 2.0 * s),
                    s1 * (1.0 - 6.0 * s + 6.0 * s * s)};
}

NetJet eval_jet(const NetParams& p, double x) {
  NetJet jet;
  for (int j = 0; j < p.n1; ++j) {
    const SigmoidJet sj = sigmoid_jet(p.w1[j] * x + p.b1[j]);
    const double w1j = p.w1[j];
    const double w2j = p.w2[j];
    jet.u += w2j * sj.s;
    jet.ux += w2j * w1j * sj.s1;
    jet.uxx += w2j * w1j * w1j * sj.s2;
  }
  return jet;
}

ParamGradJet param_grad_jet(const NetParams& p, double x) {
  const int n = p.n1;
  ParamGradJet g;
  g.du.assign(3 * n, 0.0);
  g.dux.assign(3 * n, 0.0);
  g.duxx.assign(3 * n, 0.0);
  for (int j = 0; j < n; ++j) {
    const SigmoidJet sj = sigmoid_jet(p.w1[j] * x + p.b1[j]);
    const double w1j = p.w1[j];
    const double w2j = p.w2[j];
    // d/dw1[j]: argument depends on w1 through x, plus the explicit w1 factors
    g.du[j] = w2j * x * sj.s1;
    g.dux[j] = w2j * (sj.s1 + w1j * x * sj.s2);
    g.duxx[j] = w2j * (2.0 * w1j * sj.s2 + w1j * w1j * x * sj.s3);
    // d/db1[j]
    g.du[n + j] = w2j * sj.s1;
    g.dux[n + j] = w2j * w1j * sj.s2;
    g.duxx[n + j] = w2j * w1j * w1j * sj.s3;
    // d/dw2[j]
    g.du[2 * n + j] = sj.s;
    g.dux[2 * n + j] = w1j * sj.s1;
    g.duxx[2 * n + j] = w1j * w1j * sj.s2;
  }
  return g;
}

NetParams init_params(int n1, std::uint64_t seed, double w1_scale) {
  if (n1 < 1) {
    throw std::invalid_argument("init_params: hidden width must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> small(-0.1, 0.1);
  NetParams p;
  p.n1 = n1;
  p.w1.resize(n1);
  p.b1.resize(n1);
  p.w2.resize(n1);
  for (int j = 0; j < n1; ++j) p.w1[j] = w1_scale * unit(rng);
  for (int j = 0; j < n1; ++j) p.b1[j] = unit(rng);
  for (int j = 0; j < n1; ++j) p.w2[j] = small(rng);
  return p;
}

}  // namespace blpinn
