#ifndef BLPINN_TRAINING_HPP
#define BLPINN_TRAINING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "blpinn/net2.hpp"
#include "blpinn/problems.hpp"

namespace blpinn {

enum class Sampling { Equispaced, UniformRandom };

// Ordered interior training points in (0, 1).
struct CollocationSet {
  std::vector<double> points;  // strictly increasing
  int n() const { return static_cast<int>(points.size()); }
};

struct TrainConfig {
  int n_points = 50;
  int width = 50;
  long max_iters = 50000;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  long patience = 2000;
  double min_rel_improve = 1e-8;
  std::uint64_t seed = 0;
  Sampling sampling = Sampling::Equispaced;
  double w1_scale = 8.0;
};

struct TrainReport {
  double final_loss = 0.0;      // training loss of the returned parameters
  double best_val_loss = 0.0;   // held-out loss of the returned parameters
  long iterations_run = 0;
  std::vector<std::pair<long, double>> loss_history;  // every 100 iterations
  bool stopped_early = false;
};

CollocationSet make_collocation(int n, Sampling sampling, std::uint64_t seed);

// Held-out points for over-fitting detection: the midpoints between
// consecutive collocation points and of the two boundary gaps.
CollocationSet make_validation(const CollocationSet& T);

// Mean-square residual over the collocation set, summed in ascending order.
double loss(const ProblemSpec& spec, const NetParams& p,
            const CollocationSet& T);

// Exact gradient of loss over all parameters, including the coupling of the
// residual to the cached boundary evaluations u_hat(0), u_hat(1).
std::vector<double> loss_grad(const ProblemSpec& spec, const NetParams& p,
                              const CollocationSet& T);

// Both at once; the training inner loop.
double loss_and_grad(const ProblemSpec& spec, const NetParams& p,
                     const CollocationSet& T, std::vector<double>& grad);

// Adam with early stopping against the held-out residual: the network can
// drive the collocation residuals to zero while the residual between points
// blows up (over-fitting); training therefore tracks the best parameters by
// held-out loss and stops when it plateaus for `patience` iterations.
// Deterministic given cfg. Throws NonFiniteLoss on NaN/inf loss.
std::pair<NetParams, TrainReport> train(const ProblemSpec& spec,
                                        const TrainConfig& cfg);

}  // namespace blpinn

#endif  // BLPINN_TRAINING_HPP
