#include "blpinn/forcing.hpp"

#include <cmath>

namespace blpinn {

namespace {

double simpson(const std::function<double(double)>& fn, double a, double b,
               double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& fn, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = simpson(fn, a, m, fa, flm, fm);
  const double right = simpson(fn, m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& fn, double a,
                        double b, double tol) {
  if (a == b) return 0.0;
  const double fa = fn(a);
  const double fb = fn(b);
  const double m = 0.5 * (a + b);
  const double fm = fn(m);
  const double whole = simpson(fn, a, b, fa, fm, fb);
  return simpson_rec(fn, a, b, fa, fm, fb, whole, tol, 48);
}

Forcing Forcing::constant(double c) {
  Forcing f(Kind::Const, [c](double) { return c; },
            [c](double x) { return c * x; });
  f.const_value_ = c;
  return f;
}

Forcing Forcing::cosine() {
  return Forcing(Kind::Cos, [](double x) { return std::cos(x); },
                 [](double x) { return std::sin(x); });
}

Forcing Forcing::custom(std::function<double(double)> fn) {
  return Forcing(Kind::Custom, std::move(fn), nullptr);
}

Forcing Forcing::custom(std::function<double(double)> fn,
                        std::function<double(double)> antiderivative) {
  return Forcing(Kind::Custom, std::move(fn), std::move(antiderivative));
}

double Forcing::antiderivative(double x) const {
  if (anti_) return anti_(x);
  return adaptive_simpson(fn_, 0.0, x);
}

}  // namespace blpinn
