#include "blpinn/training.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "blpinn/errors.hpp"

namespace blpinn {

CollocationSet make_collocation(int n, Sampling sampling, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("make_collocation: need n >= 2 points");
  }
  CollocationSet T;
  T.points.reserve(n);
  if (sampling == Sampling::Equispaced) {
    for (int i = 1; i <= n; ++i) {
      T.points.push_back(static_cast<double>(i) / (n + 1));
    }
    return T;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::set<double> unique;
  while (static_cast<int>(unique.size()) < n) {
    const double x = unif(rng);
    if (x > 0.0 && x < 1.0) unique.insert(x);  // redraw on collision
  }
  T.points.assign(unique.begin(), unique.end());
  return T;
}

CollocationSet make_validation(const CollocationSet& T) {
  CollocationSet V;
  V.points.reserve(T.points.size() + 1);
  double prev = 0.0;
  for (double x : T.points) {
    V.points.push_back(0.5 * (prev + x));
    prev = x;
  }
  V.points.push_back(0.5 * (prev + 1.0));
  return V;
}

double loss(const ProblemSpec& spec, const NetParams& p,
            const CollocationSet& T) {
  const BoundaryCache bc = make_boundary_cache(p);
  double acc = 0.0;
  for (double x : T.points) {
    const double r = residual_terms(spec, x, eval_jet(p, x), bc).r;
    acc += r * r;
  }
  return acc / T.n();
}

double loss_and_grad(const ProblemSpec& spec, const NetParams& p,
                     const CollocationSet& T, std::vector<double>& grad) {
  const int n1 = p.n1;
  const int np = 3 * n1;
  grad.assign(np, 0.0);
  const BoundaryCache bc = make_boundary_cache(p);
  const int N = T.n();

  double acc = 0.0;
  double c0 = 0.0;  // accumulated weight of d residual / d u_hat(0)
  double c1 = 0.0;
  std::vector<SigmoidJet> sj(n1);

  for (double x : T.points) {
    NetJet jet;
    for (int j = 0; j < n1; ++j) {
      sj[j] = sigmoid_jet(p.w1[j] * x + p.b1[j]);
      jet.u += p.w2[j] * sj[j].s;
      jet.ux += p.w2[j] * p.w1[j] * sj[j].s1;
      jet.uxx += p.w2[j] * p.w1[j] * p.w1[j] * sj[j].s2;
    }
    const ResidualTerms t = residual_terms(spec, x, jet, bc);
    acc += t.r * t.r;
    const double scale = 2.0 * t.r / N;
    c0 += scale * t.d_u0;
    c1 += scale * t.d_u1;
    for (int j = 0; j < n1; ++j) {
      const double w1j = p.w1[j];
      const double w2j = p.w2[j];
      const double s = sj[j].s;
      const double s1 = sj[j].s1;
      const double s2 = sj[j].s2;
      const double s3 = sj[j].s3;
      grad[j] += scale * w2j *
                 (t.d_u * x * s1 + t.d_ux * (s1 + w1j * x * s2) +
                  t.d_uxx * (2.0 * w1j * s2 + w1j * w1j * x * s3));
      grad[n1 + j] += scale * w2j *
                      (t.d_u * s1 + t.d_ux * w1j * s2 +
                       t.d_uxx * w1j * w1j * s3);
      grad[2 * n1 + j] +=
          scale * (t.d_u * s + t.d_ux * w1j * s1 + t.d_uxx * w1j * w1j * s2);
    }
  }

  // Boundary evaluations are functions of the parameters too.
  if (c0 != 0.0 || c1 != 0.0) {
    const ParamGradJet g0 = param_grad_jet(p, 0.0);
    const ParamGradJet g1 = param_grad_jet(p, 1.0);
    for (int k = 0; k < np; ++k) {
      grad[k] += c0 * g0.du[k] + c1 * g1.du[k];
    }
  }
  return acc / N;
}

std::vector<double> loss_grad(const ProblemSpec& spec, const NetParams& p,
                              const CollocationSet& T) {
  std::vector<double> grad;
  loss_and_grad(spec, p, T, grad);
  return grad;
}

namespace {

void unpack(const std::vector<double>& theta, NetParams& p) {
  const int n1 = p.n1;
  std::copy(theta.begin(), theta.begin() + n1, p.w1.begin());
  std::copy(theta.begin() + n1, theta.begin() + 2 * n1, p.b1.begin());
  std::copy(theta.begin() + 2 * n1, theta.end(), p.w2.begin());
}

std::vector<double> pack(const NetParams& p) {
  std::vector<double> theta;
  theta.reserve(3 * p.n1);
  theta.insert(theta.end(), p.w1.begin(), p.w1.end());
  theta.insert(theta.end(), p.b1.begin(), p.b1.end());
  theta.insert(theta.end(), p.w2.begin(), p.w2.end());
  return theta;
}

}  // namespace

std::pair<NetParams, TrainReport> train(const ProblemSpec& spec,
                                        const TrainConfig& cfg) {
  const CollocationSet T =
      make_collocation(cfg.n_points, cfg.sampling, cfg.seed);
  const CollocationSet V = make_validation(T);
  NetParams p = init_params(cfg.width, cfg.seed, cfg.w1_scale);
  const int np = p.param_count();

  std::vector<double> theta = pack(p);
  std::vector<double> m(np, 0.0), v(np, 0.0), grad;

  NetParams best = p;
  double best_val = loss(spec, p, V);
  if (!std::isfinite(best_val)) {
    throw NonFiniteLoss("train: loss not finite at initialization", 0);
  }
  TrainReport report;
  report.loss_history.emplace_back(0, loss(spec, p, T));

  long last_improve = 0;
  long t = 0;
  bool stopped_early = false;

  for (t = 1; t <= cfg.max_iters; ++t) {
    const double l = loss_and_grad(spec, p, T, grad);
    if (!std::isfinite(l)) {
      throw NonFiniteLoss("train: loss became non-finite at iteration " +
                              std::to_string(t),
                          t);
    }
    const double vl = loss(spec, p, V);
    if (vl < best_val * (1.0 - cfg.min_rel_improve)) {
      last_improve = t;
    }
    if (vl < best_val) {
      best_val = vl;
      best = p;
    }
    if (t % 100 == 0) {
      report.loss_history.emplace_back(t, l);
    }
    if (t - last_improve >= cfg.patience) {
      stopped_early = true;
      break;
    }
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    for (int k = 0; k < np; ++k) {
      m[k] = cfg.beta1 * m[k] + (1.0 - cfg.beta1) * grad[k];
      v[k] = cfg.beta2 * v[k] + (1.0 - cfg.beta2) * grad[k] * grad[k];
      theta[k] -=
          cfg.lr * (m[k] / bc1) / (std::sqrt(v[k] / bc2) + cfg.adam_eps);
    }
    unpack(theta, p);
  }

  report.final_loss = loss(spec, best, T);
  report.best_val_loss = best_val;
  report.iterations_run = std::min(t, cfg.max_iters);
  report.stopped_early = stopped_early;
  return {best, report};
}

}  // namespace blpinn
