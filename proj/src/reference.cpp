#include "blpinn/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "blpinn/correctors.hpp"
#include "blpinn/errors.hpp"

namespace blpinn {

double exact_cd(double eps, double x) {
  const double num = 1.0 - std::exp(-x / eps);
  const double den = 1.0 - std::exp(-1.0 / eps);
  return num / den - x;
}

double exact_rd(double eps, double x) {
  // cosh((x - 1/2)/s) / cosh(1/(2 s)) via paired decaying exponentials
  const double s = std::sqrt(eps);
  const double ratio =
      (std::exp((x - 1.0) / s) + std::exp(-x / s)) / (1.0 + std::exp(-1.0 / s));
  return 1.0 - ratio;
}

namespace {

// Uniform fill of (a, b] with k intervals, appended to nodes (which must
// already end with a).
void fill_uniform(std::vector<double>& nodes, double a, double b, int k) {
  for (int i = 1; i <= k; ++i) {
    nodes.push_back(a + (b - a) * static_cast<double>(i) / k);
  }
}

double layer_scale(const ProblemSpec& spec) {
  switch (spec.kind()) {
    case ProblemKind::SingularCD:
    case ProblemKind::SingularNCD:
      return spec.eps();
    case ProblemKind::SingularRD:
      return std::sqrt(spec.eps());
    case ProblemKind::Burgers:
      return spec.eps() / std::abs(spec.burgers_u00());
    default:
      return 1.0;
  }
}

// Piecewise-uniform mesh with transition tau = min(1/4, 4 * scale * ln M).
std::vector<double> make_shishkin_mesh(const ProblemSpec& spec, int M,
                                       double tau_log_m) {
  std::vector<double> nodes;
  nodes.reserve(M + 1);
  nodes.push_back(0.0);
  const double scale = layer_scale(spec);
  switch (spec.kind()) {
    case ProblemKind::SingularCD:
    case ProblemKind::SingularNCD:
    case ProblemKind::Burgers: {
      const double tau = std::min(0.25, 4.0 * scale * tau_log_m);
      fill_uniform(nodes, 0.0, tau, M / 2);
      fill_uniform(nodes, tau, 1.0, M - M / 2);
      break;
    }
    case ProblemKind::SingularRD: {
      const double tau = std::min(0.25, 4.0 * scale * tau_log_m);
      fill_uniform(nodes, 0.0, tau, M / 4);
      fill_uniform(nodes, tau, 1.0 - tau, M - 2 * (M / 4));
      fill_uniform(nodes, 1.0 - tau, 1.0, M / 4);
      break;
    }
    default:
      fill_uniform(nodes, 0.0, 1.0, M);
      break;
  }
  return nodes;
}

// Initial Newton iterate: limit solution plus corrector.
std::vector<double> initial_iterate(const ProblemSpec& spec,
                                    const std::vector<double>& mesh) {
  std::vector<double> u(mesh.size());
  const double eps = spec.eps();
  switch (spec.kind()) {
    case ProblemKind::SingularCD:
    case ProblemKind::SingularNCD: {
      const double u00 = spec.limit_solution(0.0);
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        u[i] = spec.limit_solution(mesh[i]) -
               u00 * exp_layer_jet(eps, mesh[i]).v;
      }
      break;
    }
    case ProblemKind::SingularRD: {
      const double a0 = spec.forcing()(0.0);
      const double a1 = spec.forcing()(1.0);
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        u[i] = spec.limit_solution(mesh[i]) -
               a0 * sqrt_layer_jet(eps, mesh[i], LayerSide::Left).v -
               a1 * sqrt_layer_jet(eps, mesh[i], LayerSide::Right).v;
      }
      break;
    }
    case ProblemKind::Burgers: {
      const double u00 = spec.burgers_u00();
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        u[i] = spec.limit_solution(mesh[i]) +
               burgers_phi_jet(eps, u00, mesh[i]).v;
      }
      break;
    }
    default:
      std::fill(u.begin(), u.end(), 0.0);
      break;
  }
  u.front() = spec.bc_left();
  u.back() = spec.bc_right();
  return u;
}

struct NewtonResult {
  std::vector<double> u;
  int iters = 0;
};

// Damped Newton on the centered FD discretization over the given mesh.
NewtonResult newton_solve(const ProblemSpec& spec,
                          const std::vector<double>& mesh) {
  const int n = static_cast<int>(mesh.size());
  const int ni = n - 2;  // interior unknowns
  std::vector<double> u = initial_iterate(spec, mesh);
  std::vector<double> G(ni), lower(ni), diag(ni), upper(ni), delta(ni);
  std::vector<double> fvals(n);
  for (int i = 0; i < n; ++i) fvals[i] = spec.forcing()(mesh[i]);

  const double eps = spec.eps();
  const ProblemKind kind = spec.kind();
  // -A u'' plus kind-specific convection/reaction terms
  const double A = (kind == ProblemKind::RegularCD ||
                    kind == ProblemKind::RegularRD)
                       ? 1.0
                       : eps;

  // Largest term magnitude entering any residual row; cancellation against
  // it sets the attainable residual floor in floating point.
  double term_scale = 1.0;

  auto assemble = [&](const std::vector<double>& w, std::vector<double>& g,
                      bool with_jacobian) -> double {
    double norm = 0.0;
    for (int i = 1; i <= ni; ++i) {
      const double hm = mesh[i] - mesh[i - 1];
      const double hp = mesh[i + 1] - mesh[i];
      const double cm = 2.0 / (hm * (hm + hp));
      const double cp = 2.0 / (hp * (hm + hp));
      const double cc = -(cm + cp);
      const double dm = -hp / (hm * (hm + hp));
      const double dp = hm / (hp * (hm + hp));
      const double dc = (hp - hm) / (hm * hp);
      const double um = w[i - 1];
      const double ui = w[i];
      const double up = w[i + 1];
      const double d2 = cm * um + cc * ui + cp * up;
      const double d1 = dm * um + dc * ui + dp * up;
      double r = -A * d2 - fvals[i];
      switch (kind) {
        case ProblemKind::SingularCD:
        case ProblemKind::RegularCD:
          r -= d1;
          break;
        case ProblemKind::SingularNCD:
          r += -d1 + ui * ui * ui;
          break;
        case ProblemKind::SingularRD:
        case ProblemKind::RegularRD:
          r += ui;
          break;
        case ProblemKind::Burgers:
          r += ui * d1;
          break;
        default:
          break;
      }
      g[i - 1] = r;
      norm = std::max(norm, std::abs(r));
      if (with_jacobian) {
        term_scale = std::max(
            term_scale, std::abs(A) * (cm * std::abs(um) + std::abs(cc * ui) +
                                       cp * std::abs(up)));
        double jl = -A * cm, jd = -A * cc, ju = -A * cp;
        switch (kind) {
          case ProblemKind::SingularCD:
          case ProblemKind::RegularCD:
            jl -= dm;
            jd -= dc;
            ju -= dp;
            break;
          case ProblemKind::SingularNCD:
            jl -= dm;
            jd -= dc;
            ju -= dp;
            jd += 3.0 * ui * ui;
            break;
          case ProblemKind::SingularRD:
          case ProblemKind::RegularRD:
            jd += 1.0;
            break;
          case ProblemKind::Burgers:
            jl += ui * dm;
            jd += ui * dc + d1;
            ju += ui * dp;
            break;
          default:
            break;
        }
        lower[i - 1] = jl;
        diag[i - 1] = jd;
        upper[i - 1] = ju;
      }
    }
    return norm;
  };

  constexpr int kMaxIters = 50;
  int iters = 0;
  double norm = assemble(u, G, true);
  // The difference quotients cancel terms of size term_scale, so residuals
  // below a small multiple of term_scale * machine epsilon are roundoff.
  const double kTol = std::max(
      1e-12, 64.0 * std::numeric_limits<double>::epsilon() * term_scale);
  std::vector<double> trial(u);
  while (norm > kTol && iters < kMaxIters) {
    // Thomas solve of J delta = -G (lower/diag/upper overwritten in place)
    for (int i = 1; i < ni; ++i) {
      const double w = lower[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      G[i] -= w * G[i - 1];
    }
    delta[ni - 1] = -G[ni - 1] / diag[ni - 1];
    for (int i = ni - 2; i >= 0; --i) {
      delta[i] = (-G[i] - upper[i] * delta[i + 1]) / diag[i];
    }
    double lambda = 1.0;
    double new_norm = norm;
    while (lambda > 1e-6) {
      for (int i = 1; i <= ni; ++i) trial[i] = u[i] + lambda * delta[i - 1];
      new_norm = assemble(trial, G, false);
      if (new_norm < norm || new_norm <= kTol) break;
      lambda *= 0.5;
    }
    if (new_norm >= norm && new_norm > kTol) {
      if (norm <= 100.0 * kTol) break;  // stagnated at the roundoff floor
      throw NewtonDivergence(
          "oracle_solve: Newton failed to reduce the residual (norm " +
          std::to_string(norm) + ")");
    }
    u.swap(trial);
    trial = u;
    norm = assemble(u, G, true);
    ++iters;
  }
  return NewtonResult{std::move(u), iters};
}

}  // namespace

ReferenceSolution oracle_solve(const ProblemSpec& spec, int M,
                               bool richardson) {
  if (M < 64) {
    throw MeshTooCoarse("oracle_solve: need mesh size M >= 64");
  }
  M -= M % 4;  // region counts must halve evenly for the nested coarse solve
  const double tau_log_m = std::log(static_cast<double>(M));

  const std::vector<double> fine_mesh = make_shishkin_mesh(spec, M, tau_log_m);
  NewtonResult fine = newton_solve(spec, fine_mesh);

  std::vector<double> values = fine.u;
  if (richardson) {
    // One Richardson step: solve on the nested half mesh (same transition
    // points), correct the fine solution by (u_f - u_c) / 3 interpolated.
    std::vector<double> coarse_mesh;
    coarse_mesh.reserve(fine_mesh.size() / 2 + 1);
    for (std::size_t i = 0; i < fine_mesh.size(); i += 2) {
      coarse_mesh.push_back(fine_mesh[i]);
    }
    NewtonResult coarse = newton_solve(spec, coarse_mesh);
    std::vector<double> corr(coarse_mesh.size());
    for (std::size_t i = 0; i < coarse_mesh.size(); ++i) {
      corr[i] = (fine.u[2 * i] - coarse.u[i]) / 3.0;
    }
    CubicSpline corr_spline(coarse_mesh, corr);
    for (std::size_t i = 0; i < fine_mesh.size(); ++i) {
      values[i] += corr_spline(fine_mesh[i]);
    }
  }
  values.front() = spec.bc_left();
  values.back() = spec.bc_right();

  ReferenceSolution ref;
  ref.mesh = fine_mesh;
  ref.values = values;
  ref.spline = CubicSpline(ref.mesh, ref.values);
  ref.provenance = Provenance::OracleSolver;
  ref.mesh_size = M;
  ref.newton_iters = fine.iters;
  return ref;
}

double interpolate(const ReferenceSolution& ref, double x) {
  return ref.spline(x);
}

ErrorGrid make_uniform_grid(int n) {
  ErrorGrid g;
  g.points.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    g.points.push_back(static_cast<double>(i) / n);
  }
  return g;
}

ErrorGrid make_error_grid(const ProblemSpec& spec, int n) {
  const double scale = layer_scale(spec);
  ErrorGrid g;
  switch (spec.kind()) {
    case ProblemKind::SingularCD:
    case ProblemKind::SingularNCD:
    case ProblemKind::Burgers: {
      const double w = std::min(0.25, 30.0 * scale);
      g.points.push_back(0.0);
      fill_uniform(g.points, 0.0, w, n / 2);
      fill_uniform(g.points, w, 1.0, n - n / 2);
      break;
    }
    case ProblemKind::SingularRD: {
      const double w = std::min(0.25, 30.0 * scale);
      g.points.push_back(0.0);
      fill_uniform(g.points, 0.0, w, n / 4);
      fill_uniform(g.points, w, 1.0 - w, n - 2 * (n / 4));
      fill_uniform(g.points, 1.0 - w, 1.0, n / 4);
      break;
    }
    default:
      return make_uniform_grid(n);
  }
  return g;
}

double l2_norm(const std::function<double(double)>& fn, const ErrorGrid& grid) {
  double acc = 0.0;
  double prev_x = grid.points.front();
  double prev_v = fn(prev_x);
  prev_v *= prev_v;
  for (std::size_t i = 1; i < grid.points.size(); ++i) {
    const double x = grid.points[i];
    double v = fn(x);
    v *= v;
    acc += 0.5 * (x - prev_x) * (prev_v + v);
    prev_x = x;
    prev_v = v;
  }
  return std::sqrt(acc);
}

double rel_l2_error(const std::function<double(double)>& predicted,
                    const std::function<double(double)>& truth,
                    const ErrorGrid& grid) {
  const double denom = l2_norm(truth, grid);
  if (denom <= 1e-14) {
    throw ZeroTruthNorm("rel_l2_error: truth norm is (numerically) zero");
  }
  const double num = l2_norm(
      [&](double x) { return predicted(x) - truth(x); }, grid);
  return num / denom;
}

void write_reference_csv(const ReferenceSolution& ref,
                         const std::string& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) {
    throw std::runtime_error("write_reference_csv: cannot open " + path);
  }
  std::fprintf(out, "x,u\n");
  for (std::size_t i = 0; i < ref.mesh.size(); ++i) {
    std::fprintf(out, "%.12e,%.12e\n", ref.mesh[i], ref.values[i]);
  }
  std::fclose(out);
}

}  // namespace blpinn
