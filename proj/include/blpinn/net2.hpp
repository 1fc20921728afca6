#ifndef BLPINN_NET2_HPP
#define BLPINN_NET2_HPP

#include <cstdint>
#include <vector>

namespace blpinn {

// Parameters of the two-layer sigmoid network
//   u(x) = sum_j w2[j] * sigma(w1[j] * x + b1[j]),
// with no output bias. Immutable by convention: training produces new values.
struct NetParams {
  std::vector<double> w1;  // input -> hidden weights
  std::vector<double> b1;  // hidden biases
  std::vector<double> w2;  // hidden -> output weights
  int n1 = 0;              // hidden width

  int param_count() const { return 3 * n1; }
};

// Network value and its first two spatial derivatives at a point.
struct NetJet {
  double u = 0.0;
  double ux = 0.0;
  double uxx = 0.0;
};

// Sigmoid and its first three derivatives evaluated from a single sigma(x).
struct SigmoidJet {
  double s;    // sigma
  double s1;   // s (1 - s)
  double s2;   // s (1 - s) (1 - 2 s)
  double s3;   // s (1 - s) (1 - 6 s + 6 s^2)
};

// Gradient of (u, ux, uxx) with respect to every parameter, laid out as
// [w1[0..n1), b1[0..n1), w2[0..n1)] per component.
struct ParamGradJet {
  std::vector<double> du;
  std::vector<double> dux;
  std::vector<double> duxx;
};

// Overflow-safe logistic sigmoid.
double sigmoid(double x);

SigmoidJet sigmoid_jet(double x);

NetJet eval_jet(const NetParams& p, double x);

ParamGradJet param_grad_jet(const NetParams& p, double x);

// Seeded uniform initialization: w1 in [-scale, scale] (default scale 8),
// b1 in [-1, 1], w2 in [-0.1, 0.1].
NetParams init_params(int n1, std::uint64_t seed, double w1_scale = 8.0);

}  // namespace blpinn

#endif  // BLPINN_NET2_HPP
