#ifndef BLPINN_PROBLEMS_HPP
#define BLPINN_PROBLEMS_HPP

#include <memory>

#include "blpinn/forcing.hpp"
#include "blpinn/net2.hpp"
#include "blpinn/spline.hpp"

namespace blpinn {

enum class ProblemKind {
  Hyperbolic,
  RegularCD,
  RegularRD,
  SingularCD,
  SingularRD,
  SingularNCD,
  Burgers,
};

// Coefficients (a, b, c) of the regular family -a u'' - b u' + c u = f.
struct RegularCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// One BVP instance: kind, eps, forcing, boundary values, and whether the
// corrector-enriched ansatz is used (singular kinds only; the plain variant
// of SingularCD is the uncorrected baseline).
class ProblemSpec {
 public:
  static ProblemSpec hyperbolic(Forcing f);
  static ProblemSpec regular(double a, double b, double c, Forcing f);
  static ProblemSpec regular_cd(Forcing f);  // (a,b,c) = (1,1,0)
  static ProblemSpec regular_rd(Forcing f);  // (a,b,c) = (1,0,1)
  static ProblemSpec singular_cd(double eps, Forcing f, bool enriched = true);
  static ProblemSpec singular_rd(double eps, Forcing f, bool enriched = true);
  static ProblemSpec singular_ncd(double eps, Forcing f, bool enriched = true);
  // alpha = beta = 1 convention: u = -1 at both ends. Validates the forcing
  // scan and caches u0(0); throws DataConditionViolation on failure.
  static ProblemSpec burgers(double eps, Forcing f);

  ProblemKind kind() const { return kind_; }
  double eps() const { return eps_; }
  const Forcing& forcing() const { return forcing_; }
  RegularCoeffs coeffs() const { return coeffs_; }
  bool enriched() const { return enriched_; }
  double bc_left() const { return bc_left_; }
  double bc_right() const { return bc_right_; }

  // u0(0) for Burgers (cached at construction)
  double burgers_u00() const;

  // Limit (eps = 0) solution; singular kinds only.
  double limit_solution(double x) const;

 private:
  ProblemSpec(ProblemKind kind, double eps, Forcing f);

  ProblemKind kind_;
  double eps_;
  Forcing forcing_;
  RegularCoeffs coeffs_;
  bool enriched_ = true;
  double bc_left_ = 0.0;
  double bc_right_ = 0.0;
  double u00_ = 0.0;
  std::shared_ptr<const CubicSpline> limit_cache_;  // NCD; Burgers w/o exact F
};

// Network-built trial solution value and first two derivatives at a point.
struct AnsatzJet {
  double u = 0.0;
  double ux = 0.0;
  double uxx = 0.0;
};

// Network boundary evaluations u_hat(0), u_hat(1); functions of the
// parameters only, computed once per parameter vector.
struct BoundaryCache {
  double u0 = 0.0;
  double u1 = 0.0;
};

BoundaryCache make_boundary_cache(const NetParams& p);

// u_bar = x (x - 1) u_hat
AnsatzJet ansatz_plain(const NetParams& p, double x);

// u_bar = x u_hat; single inflow condition u(0) = 0 for the first-order
// hyperbolic problem.
AnsatzJet ansatz_inflow(const NetParams& p, double x);

// u~ = (x - 1) (u_hat(x) - u_hat(0) e^{-x/eps}); SingularCD and SingularNCD
AnsatzJet ansatz_enriched_cd(const NetParams& p, double eps, double x);
AnsatzJet ansatz_enriched_cd(const NetParams& p, double eps, double x,
                             const BoundaryCache& bc);

// u~ = u_hat - u_hat(0) e^{-x/sqrt(eps)} - u_hat(1) e^{-(1-x)/sqrt(eps)}
AnsatzJet ansatz_enriched_rd(const NetParams& p, double eps, double x);
AnsatzJet ansatz_enriched_rd(const NetParams& p, double eps, double x,
                             const BoundaryCache& bc);

// u~ = (x - 1) u_hat + phi_tilde(x) u_hat(0) - 1
AnsatzJet ansatz_enriched_burgers(const NetParams& p, double eps, double u00,
                                  double x);
AnsatzJet ansatz_enriched_burgers(const NetParams& p, double eps, double u00,
                                  double x, const BoundaryCache& bc);

// Ansatz dispatch for a problem instance.
AnsatzJet ansatz(const ProblemSpec& spec, const NetParams& p, double x,
                 const BoundaryCache& bc);

// Pointwise residual of the expanded (bounded-as-eps-vanishes) form, plus
// its partial derivatives with respect to the network quantities it touches.
struct ResidualTerms {
  double r = 0.0;
  double d_u = 0.0;    // w.r.t. u_hat(x)
  double d_ux = 0.0;   // w.r.t. u_hat_x(x)
  double d_uxx = 0.0;  // w.r.t. u_hat_xx(x)
  double d_u0 = 0.0;   // w.r.t. u_hat(0)
  double d_u1 = 0.0;   // w.r.t. u_hat(1)
};

ResidualTerms residual_terms(const ProblemSpec& spec, double x,
                             const NetJet& jet, const BoundaryCache& bc);

double residual(const ProblemSpec& spec, const NetParams& p, double x);

// Direct substitution of the ansatz into the PDE (oracle route; the training
// loss uses the expanded form in residual_terms instead).
double residual_direct(const ProblemSpec& spec, const NetParams& p, double x);

}  // namespace blpinn

#endif  // BLPINN_PROBLEMS_HPP
