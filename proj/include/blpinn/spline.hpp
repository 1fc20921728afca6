#ifndef BLPINN_SPLINE_HPP
#define BLPINN_SPLINE_HPP

#include <vector>

namespace blpinn {

// Natural cubic spline over strictly increasing nodes.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;

  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at nodes; m front/back = 0
};

}  // namespace blpinn

#endif  // BLPINN_SPLINE_HPP
