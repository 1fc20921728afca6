#ifndef BLPINN_FORCING_HPP
#define BLPINN_FORCING_HPP

#include <functional>
#include <limits>
#include <utility>

namespace blpinn {

// Right-hand-side data f(x) with an antiderivative. Built-in constant and
// cosine forcings carry exact antiderivatives; user-supplied forcings fall
// back to adaptive Simpson quadrature (abs tol 1e-12).
class Forcing {
 public:
  enum class Kind { Const, Cos, Custom };

  static Forcing constant(double c);
  static Forcing cosine();
  // fn only; antiderivative via quadrature from 0
  static Forcing custom(std::function<double(double)> fn);
  // fn with exact antiderivative F, F' = fn
  static Forcing custom(std::function<double(double)> fn,
                        std::function<double(double)> antiderivative);

  double operator()(double x) const { return fn_(x); }
  // F(x) with F' = f; additive constant is arbitrary but fixed
  double antiderivative(double x) const;
  // integral of f over [a, b]
  double integral(double a, double b) const {
    return antiderivative(b) - antiderivative(a);
  }

  Kind kind() const { return kind_; }
  bool has_exact_antiderivative() const { return static_cast<bool>(anti_); }
  // the value c when f is the constant forcing, NaN otherwise
  double const_value() const { return const_value_; }

 private:
  Forcing(Kind kind, std::function<double(double)> fn,
          std::function<double(double)> anti)
      : kind_(kind), fn_(std::move(fn)), anti_(std::move(anti)) {}

  Kind kind_;
  std::function<double(double)> fn_;
  std::function<double(double)> anti_;  // empty => quadrature
  double const_value_ = std::numeric_limits<double>::quiet_NaN();
};

// Adaptive Simpson quadrature of fn over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& fn, double a,
                        double b, double tol = 1e-12);

}  // namespace blpinn

#endif  // BLPINN_FORCING_HPP
