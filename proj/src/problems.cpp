#include "blpinn/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blpinn/correctors.hpp"
#include "blpinn/errors.hpp"

namespace blpinn {

namespace {

// Limit problem of the cubic-reaction convection-diffusion equation,
//   -u0' + u0^3 = f,  u0(1) = 0,
// integrated leftward from x = 1 with classic RK4.
CubicSpline solve_ncd_limit(const Forcing& f, int steps) {
  const double h = 1.0 / steps;
  std::vector<double> xs(steps + 1), us(steps + 1);
  auto rhs = [&f](double x, double u) { return u * u * u - f(x); };
  double u = 0.0;
  us[steps] = 0.0;
  xs[steps] = 1.0;
  for (int k = steps; k > 0; --k) {
    const double x = static_cast<double>(k) / steps;
    const double k1 = rhs(x, u);
    const double k2 = rhs(x - 0.5 * h, u - 0.5 * h * k1);
    const double k3 = rhs(x - 0.5 * h, u - 0.5 * h * k2);
    const double k4 = rhs(x - h, u - h * k3);
    u -= h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    xs[k - 1] = static_cast<double>(k - 1) / steps;
    us[k - 1] = u;
  }
  return CubicSpline(std::move(xs), std::move(us));
}

// Tabulated Burgers limit solution for forcings without an exact
// antiderivative: cumulative Simpson of f from 1 leftward.
CubicSpline tabulate_burgers_limit(const Forcing& f, int steps) {
  const double h = 1.0 / steps;
  std::vector<double> xs(steps + 1), integral(steps + 1), us(steps + 1);
  integral[steps] = 0.0;  // int_1^x f at x = 1
  for (int k = steps; k > 0; --k) {
    const double b = static_cast<double>(k) / steps;
    const double a = b - h;
    integral[k - 1] =
        integral[k] - h / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
  }
  for (int k = 0; k <= steps; ++k) {
    xs[k] = static_cast<double>(k) / steps;
    const double radicand = 2.0 * integral[k] + 1.0;
    if (radicand <= 0.0) {
      throw DataConditionViolation(
          "burgers limit solution undefined: radicand <= 0 at x = " +
          std::to_string(xs[k]));
    }
    us[k] = -std::sqrt(radicand);
  }
  return CubicSpline(std::move(xs), std::move(us));
}

}  // namespace

ProblemSpec::ProblemSpec(ProblemKind kind, double eps, Forcing f)
    : kind_(kind), eps_(eps), forcing_(std::move(f)) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("ProblemSpec: eps must be positive");
  }
}

ProblemSpec ProblemSpec::hyperbolic(Forcing f) {
  ProblemSpec s(ProblemKind::Hyperbolic, 1.0, std::move(f));
  s.coeffs_ = {0.0, -1.0, 0.0};
  s.enriched_ = false;
  return s;
}

ProblemSpec ProblemSpec::regular(double a, double b, double c, Forcing f) {
  ProblemSpec s(ProblemKind::RegularCD, 1.0, std::move(f));
  if (a == 0.0 && b == -1.0 && c == 0.0) {
    s.kind_ = ProblemKind::Hyperbolic;
  } else if (a == 1.0 && b == 1.0 && c == 0.0) {
    s.kind_ = ProblemKind::RegularCD;
  } else if (a == 1.0 && b == 0.0 && c == 1.0) {
    s.kind_ = ProblemKind::RegularRD;
  } else {
    throw std::invalid_argument(
        "ProblemSpec::regular: (a,b,c) must be one of (0,-1,0), (1,1,0), "
        "(1,0,1)");
  }
  s.coeffs_ = {a, b, c};
  s.enriched_ = false;
  return s;
}

ProblemSpec ProblemSpec::regular_cd(Forcing f) {
  return regular(1.0, 1.0, 0.0, std::move(f));
}

ProblemSpec ProblemSpec::regular_rd(Forcing f) {
  return regular(1.0, 0.0, 1.0, std::move(f));
}

ProblemSpec ProblemSpec::singular_cd(double eps, Forcing f, bool enriched) {
  ProblemSpec s(ProblemKind::SingularCD, eps, std::move(f));
  s.enriched_ = enriched;
  return s;
}

ProblemSpec ProblemSpec::singular_rd(double eps, Forcing f, bool enriched) {
  ProblemSpec s(ProblemKind::SingularRD, eps, std::move(f));
  s.enriched_ = enriched;
  return s;
}

ProblemSpec ProblemSpec::singular_ncd(double eps, Forcing f, bool enriched) {
  ProblemSpec s(ProblemKind::SingularNCD, eps, std::move(f));
  s.enriched_ = enriched;
  s.limit_cache_ =
      std::make_shared<CubicSpline>(solve_ncd_limit(s.forcing_, 4096));
  return s;
}

ProblemSpec ProblemSpec::burgers(double eps, Forcing f) {
  ProblemSpec s(ProblemKind::Burgers, eps, std::move(f));
  s.bc_left_ = -1.0;
  s.bc_right_ = -1.0;
  check_burgers_forcing(s.forcing_);
  if (!s.forcing_.has_exact_antiderivative()) {
    s.limit_cache_ =
        std::make_shared<CubicSpline>(tabulate_burgers_limit(s.forcing_, 4096));
  }
  s.u00_ = s.limit_solution(0.0);
  return s;
}

double ProblemSpec::burgers_u00() const {
  if (kind_ != ProblemKind::Burgers) {
    throw std::logic_error("burgers_u00: not a Burgers problem");
  }
  return u00_;
}

double ProblemSpec::limit_solution(double x) const {
  switch (kind_) {
    case ProblemKind::SingularCD:
      return forcing_.integral(x, 1.0);
    case ProblemKind::SingularRD:
      return forcing_(x);
    case ProblemKind::SingularNCD:
      return (*limit_cache_)(x);
    case ProblemKind::Burgers: {
      if (limit_cache_) return (*limit_cache_)(x);
      // 2 int_1^x f + 1 = 1 - 2 int_x^1 f
      const double rad = 1.0 - 2.0 * forcing_.integral(x, 1.0);
      if (rad <= 0.0) {
        throw DataConditionViolation(
            "burgers limit solution undefined at x = " + std::to_string(x));
      }
      return -std::sqrt(rad);
    }
    default:
      throw std::logic_error("limit_solution: defined for singular kinds only");
  }
}

BoundaryCache make_boundary_cache(const NetParams& p) {
  return BoundaryCache{eval_jet(p, 0.0).u, eval_jet(p, 1.0).u};
}

AnsatzJet ansatz_plain(const NetParams& p, double x) {
  const NetJet j = eval_jet(p, x);
  const double w = x * x - x;
  const double wp = 2.0 * x - 1.0;
  return AnsatzJet{w * j.u, wp * j.u + w * j.ux,
                   2.0 * j.u + 2.0 * wp * j.ux + w * j.uxx};
}

AnsatzJet ansatz_inflow(const NetParams& p, double x) {
  const NetJet j = eval_jet(p, x);
  return AnsatzJet{x * j.u, j.u + x * j.ux, 2.0 * j.ux + x * j.uxx};
}

AnsatzJet ansatz_enriched_cd(const NetParams& p, double eps, double x,
                             const BoundaryCache& bc) {
  const NetJet j = eval_jet(p, x);
  const LayerJet e = exp_layer_jet(eps, x);
  const double g = j.u - bc.u0 * e.v;
  const double gx = j.ux - bc.u0 * e.vx;
  const double gxx = j.uxx - bc.u0 * e.vxx;
  return AnsatzJet{(x - 1.0) * g, g + (x - 1.0) * gx,
                   2.0 * gx + (x - 1.0) * gxx};
}

AnsatzJet ansatz_enriched_cd(const NetParams& p, double eps, double x) {
  return ansatz_enriched_cd(p, eps, x, make_boundary_cache(p));
}

AnsatzJet ansatz_enriched_rd(const NetParams& p, double eps, double x,
                             const BoundaryCache& bc) {
  const NetJet j = eval_jet(p, x);
  const LayerJet l = sqrt_layer_jet(eps, x, LayerSide::Left);
  const LayerJet r = sqrt_layer_jet(eps, x, LayerSide::Right);
  return AnsatzJet{j.u - bc.u0 * l.v - bc.u1 * r.v,
                   j.ux - bc.u0 * l.vx - bc.u1 * r.vx,
                   j.uxx - bc.u0 * l.vxx - bc.u1 * r.vxx};
}

AnsatzJet ansatz_enriched_rd(const NetParams& p, double eps, double x) {
  return ansatz_enriched_rd(p, eps, x, make_boundary_cache(p));
}

AnsatzJet ansatz_enriched_burgers(const NetParams& p, double eps, double u00,
                                  double x, const BoundaryCache& bc) {
  const NetJet j = eval_jet(p, x);
  const LayerJet ph = burgers_phi_tilde_jet(eps, u00, x);
  return AnsatzJet{(x - 1.0) * j.u + ph.v * bc.u0 - 1.0,
                   j.u + (x - 1.0) * j.ux + ph.vx * bc.u0,
                   2.0 * j.ux + (x - 1.0) * j.uxx + ph.vxx * bc.u0};
}

AnsatzJet ansatz_enriched_burgers(const NetParams& p, double eps, double u00,
                                  double x) {
  return ansatz_enriched_burgers(p, eps, u00, x, make_boundary_cache(p));
}

AnsatzJet ansatz(const ProblemSpec& spec, const NetParams& p, double x,
                 const BoundaryCache& bc) {
  switch (spec.kind()) {
    case ProblemKind::Hyperbolic:
      return ansatz_inflow(p, x);
    case ProblemKind::RegularCD:
    case ProblemKind::RegularRD:
      return ansatz_plain(p, x);
    case ProblemKind::SingularCD:
    case ProblemKind::SingularNCD:
      return spec.enriched() ? ansatz_enriched_cd(p, spec.eps(), x, bc)
                             : ansatz_plain(p, x);
    case ProblemKind::SingularRD:
      return spec.enriched() ? ansatz_enriched_rd(p, spec.eps(), x, bc)
                             : ansatz_plain(p, x);
    case ProblemKind::Burgers:
      return ansatz_enriched_burgers(p, spec.eps(), spec.burgers_u00(), x, bc);
  }
  throw std::logic_error("ansatz: unknown kind");
}

namespace {

// Plain-ansatz residual terms for a second-order operator
// -A u'' - B u' + C u (+ cubic for NCD) with u = w(x) u_hat, w = x(x-1).
ResidualTerms plain_terms(double x, const NetJet& jet, double A, double B,
                          double C, bool cubic, double f, double w, double wp,
                          double wpp) {
  const double ub = w * jet.u;
  const double ubx = wp * jet.u + w * jet.ux;
  const double ubxx = wpp * jet.u + 2.0 * wp * jet.ux + w * jet.uxx;
  ResidualTerms t;
  t.r = -A * ubxx - B * ubx + C * ub - f;
  t.d_u = -A * wpp - B * wp + C * w;
  t.d_ux = -2.0 * A * wp - B * w;
  t.d_uxx = -A * w;
  if (cubic) {
    t.r += ub * ub * ub;
    t.d_u += 3.0 * ub * ub * w;
  }
  return t;
}

}  // namespace

ResidualTerms residual_terms(const ProblemSpec& spec, double x,
                             const NetJet& jet, const BoundaryCache& bc) {
  const double f = spec.forcing()(x);
  const double eps = spec.eps();
  const double w = x * x - x;
  const double wp = 2.0 * x - 1.0;

  switch (spec.kind()) {
    case ProblemKind::Hyperbolic: {
      // u = x u_hat, residual u_x - f
      ResidualTerms t;
      t.r = jet.u + x * jet.ux - f;
      t.d_u = 1.0;
      t.d_ux = x;
      return t;
    }
    case ProblemKind::RegularCD:
      return plain_terms(x, jet, 1.0, 1.0, 0.0, false, f, w, wp, 2.0);
    case ProblemKind::RegularRD:
      return plain_terms(x, jet, 1.0, 0.0, 1.0, false, f, w, wp, 2.0);

    case ProblemKind::SingularCD: {
      if (!spec.enriched()) {
        return plain_terms(x, jet, eps, 1.0, 0.0, false, f, w, wp, 2.0);
      }
      const double e = exp_layer_jet(eps, x).v;
      ResidualTerms t;
      t.r = -eps * (x - 1.0) * jet.uxx - (x - 1.0 + 2.0 * eps) * jet.ux -
            jet.u - bc.u0 * e - f;
      t.d_u = -1.0;
      t.d_ux = -(x - 1.0 + 2.0 * eps);
      t.d_uxx = -eps * (x - 1.0);
      t.d_u0 = -e;
      return t;
    }

    case ProblemKind::SingularRD: {
      if (!spec.enriched()) {
        return plain_terms(x, jet, eps, 0.0, 1.0, false, f, w, wp, 2.0);
      }
      // Layer profiles solve the homogeneous equation exactly, so they
      // cancel from the residual entirely.
      ResidualTerms t;
      t.r = -eps * jet.uxx + jet.u - f;
      t.d_u = 1.0;
      t.d_uxx = -eps;
      return t;
    }

    case ProblemKind::SingularNCD: {
      if (!spec.enriched()) {
        return plain_terms(x, jet, eps, 1.0, 0.0, true, f, w, wp, 2.0);
      }
      const double e = exp_layer_jet(eps, x).v;
      const double s = (x - 1.0) * (jet.u - bc.u0 * e);
      ResidualTerms t;
      t.r = -eps * (x - 1.0) * jet.uxx - (x - 1.0 + 2.0 * eps) * jet.ux -
            jet.u - bc.u0 * e + s * s * s - f;
      t.d_u = -1.0 + 3.0 * s * s * (x - 1.0);
      t.d_ux = -(x - 1.0 + 2.0 * eps);
      t.d_uxx = -eps * (x - 1.0);
      t.d_u0 = -e * (1.0 + 3.0 * s * s * (x - 1.0));
      return t;
    }

    case ProblemKind::Burgers: {
      const double u00 = spec.burgers_u00();
      const LayerJet ph = burgers_phi_tilde_jet(eps, u00, x);
      const double w0 = spec.limit_solution(x) - u00;
      const double conv = jet.u + (x - 1.0) * jet.ux;  // ((x-1) u_hat)_x
      const double trial = (x - 1.0) * jet.u + ph.v * bc.u0 - 1.0;
      ResidualTerms t;
      t.r = -2.0 * eps * jet.ux - eps * (x - 1.0) * jet.uxx + conv * trial +
            w0 * ph.vx * bc.u0 - f;
      t.d_u = trial + conv * (x - 1.0);
      t.d_ux = -2.0 * eps + (x - 1.0) * trial;
      t.d_uxx = -eps * (x - 1.0);
      t.d_u0 = conv * ph.v + w0 * ph.vx;
      return t;
    }
  }
  throw std::logic_error("residual_terms: unknown kind");
}

double residual(const ProblemSpec& spec, const NetParams& p, double x) {
  const BoundaryCache bc = make_boundary_cache(p);
  return residual_terms(spec, x, eval_jet(p, x), bc).r;
}

double residual_direct(const ProblemSpec& spec, const NetParams& p, double x) {
  const BoundaryCache bc = make_boundary_cache(p);
  const AnsatzJet a = ansatz(spec, p, x, bc);
  const double f = spec.forcing()(x);
  const double eps = spec.eps();
  switch (spec.kind()) {
    case ProblemKind::Hyperbolic:
      return a.ux - f;
    case ProblemKind::RegularCD:
      return -a.uxx - a.ux - f;
    case ProblemKind::RegularRD:
      return -a.uxx + a.u - f;
    case ProblemKind::SingularCD:
      return -eps * a.uxx - a.ux - f;
    case ProblemKind::SingularRD:
      return -eps * a.uxx + a.u - f;
    case ProblemKind::SingularNCD:
      return -eps * a.uxx - a.ux + a.u * a.u * a.u - f;
    case ProblemKind::Burgers:
      return -eps * a.uxx + a.u * a.ux - f;
  }
  throw std::logic_error("residual_direct: unknown kind");
}

}  // namespace blpinn
