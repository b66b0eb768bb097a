#include "qent/ree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qent/measures.hpp"

namespace qent {

void ReeConfig::validate() const {
  const bool ok = max_outer_iters > 0 && grad_tol > 0 && step_init > 0 && armijo_beta > 0 &&
                  armijo_beta < 1 && armijo_c > 0 && dykstra_max > 0 && dykstra_tol > 0 &&
                  eig_floor > 0;
  if (!ok) throw InvalidArgument("ReeConfig: all parameters must be positive and armijo_beta < 1");
}

Mat4 log_frechet_apply(const Mat4& rho, const Mat4& sigma, double floor) {
  const auto eig = hermitian_eig(rho);
  Real4 r = eig.values.cwiseMax(floor);
  Mat4 s = eig.vectors.adjoint() * sigma * eig.vectors;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double gap = r(i) - r(j);
      const double phi =
          std::abs(gap) > 1e-14 ? (std::log(r(i)) - std::log(r(j))) / gap : 1.0 / r(i);
      s(i, j) *= phi;
    }
  }
  return eig.vectors * s * eig.vectors.adjoint();
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw InvalidArgument("project_simplex: empty vector");
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

namespace {

struct Spectral {
  Real4 values;
  Mat4 vectors;
};

// Projection onto the density matrices that also returns the eigenpairs of
// the result, so the objective can reuse them.
Spectral project_density_spectral(const Mat4& a) {
  const auto eig = hermitian_eig(a);
  const Eigen::VectorXd p = project_simplex(eig.values);
  return {p, eig.vectors};
}

Mat4 assemble(const Spectral& s) {
  return s.vectors * s.values.cast<std::complex<double>>().asDiagonal() * s.vectors.adjoint();
}

}  // namespace

DensityMatrix project_density_simplex(const Mat4& a) {
  return DensityMatrix::trusted(assemble(project_density_spectral(a)));
}

Mat4 project_ppt(const Mat4& a) {
  const auto eig = hermitian_eig(partial_transpose(a));
  const Mat4 clipped = spectral_apply(eig, [](double v) { return std::max(v, 0.0); });
  return partial_transpose(clipped);
}

double min_ppt_eigenvalue(const Mat4& rho) {
  return hermitian_eig(partial_transpose(rho)).values.minCoeff();
}

namespace {

struct DykstraState {
  Spectral spectral;
  int iterations = 0;
  bool converged = false;
};

constexpr double kPptSlack = 1e-10;

// Mixes toward I/4, whose partial transpose is I/4, just enough to make the
// partial transpose PSD. Trace and positivity are preserved.
void restore_ppt(Spectral& s) {
  const Mat4 m = assemble(s);
  const double low = min_ppt_eigenvalue(m);
  if (low >= -kPptSlack) return;
  const double mix = -low / (0.25 - low);
  s.values = (1.0 - mix) * s.values.array() + 0.25 * mix;
}

DykstraState dykstra_spectral(const Mat4& a, const ReeConfig& cfg) {
  Mat4 x = 0.5 * (a + a.adjoint());
  Mat4 p = Mat4::Zero();
  Mat4 q = Mat4::Zero();
  DykstraState out;
  for (int it = 1; it <= cfg.dykstra_max; ++it) {
    out.spectral = project_density_spectral(x + p);
    const Mat4 y = assemble(out.spectral);
    p = x + p - y;
    const Mat4 x_next = project_ppt(y + q);
    q = y + q - x_next;
    const double change = (x_next - x).norm();
    const double gap = (x_next - y).norm();
    x = x_next;
    out.iterations = it;
    if (change < cfg.dykstra_tol && gap < cfg.dykstra_tol) {
      out.converged = true;
      break;
    }
  }
  restore_ppt(out.spectral);
  return out;
}

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

// Eigenvalue floor for the gradient. Directions whose eigenvalue and state
// weight are both at roundoff level otherwise carry an O(1) gradient with
// curvature near 1/floor, which stalls the line search.
constexpr double kGradFloor = 1e-8;

// -Tr sigma lg rho with rho's eigenvalues floored.
double cross_objective(const Spectral& rho, const Mat4& sigma, double floor) {
  double g = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Vec4 v = rho.vectors.col(i);
    const double weight = (v.adjoint() * sigma * v)(0, 0).real();
    g -= weight * std::log2(std::max(rho.values(i), floor));
  }
  return g;
}

}  // namespace

DykstraResult dykstra_project(const Mat4& a, const ReeConfig& cfg) {
  const DykstraState s = dykstra_spectral(a, cfg);
  DykstraResult out;
  out.state = DensityMatrix::trusted(assemble(s.spectral));
  out.iterations = s.iterations;
  out.converged = s.converged;
  out.ppt_defect = std::max(0.0, -min_ppt_eigenvalue(out.state.matrix()));
  return out;
}

ReeResult ree_solve(const DensityMatrix& sigma, const ReeConfig& cfg,
                    const std::optional<DensityMatrix>& warm_start) {
  cfg.validate();
  const Mat4& s = sigma.matrix();
  const double entropy = von_neumann_entropy(sigma);

  Spectral rho;
  if (warm_start) {
    rho = dykstra_spectral(warm_start->matrix(), cfg).spectral;
  } else {
    rho = {Real4::Constant(0.25), Mat4::Identity()};
  }
  double g = cross_objective(rho, s, cfg.eig_floor);

  ReeResult result;
  result.objective_trace.push_back(g);
  int stalled = 0;
  for (int k = 0; k < cfg.max_outer_iters; ++k) {
    const Mat4 current = assemble(rho);
    const Mat4 grad = -kInvLn2 * log_frechet_apply(current, s, std::max(cfg.eig_floor, kGradFloor));

    bool accepted = false;
    Spectral trial;
    double g_trial = g;
    double step_norm = 0.0;
    for (double t = cfg.step_init; t > 1e-20; t *= cfg.armijo_beta) {
      trial = dykstra_spectral(current - t * grad, cfg).spectral;
      const Mat4 d = assemble(trial) - current;
      g_trial = cross_objective(trial, s, cfg.eig_floor);
      const double slope = (grad.adjoint() * d).trace().real();
      if (g_trial <= g + cfg.armijo_c * slope && g_trial <= g) {
        accepted = true;
        step_norm = d.norm();
        break;
      }
    }
    result.iterations = k + 1;
    if (!accepted) {
      // No descent direction left at working precision.
      result.converged = true;
      break;
    }
    const double decrease = g - g_trial;
    rho = trial;
    g = g_trial;
    result.objective_trace.push_back(g);
    result.final_step_residual = step_norm;
    stalled = decrease < cfg.grad_tol ? stalled + 1 : 0;
    if (stalled >= 5) {
      result.converged = true;
      break;
    }
  }

  result.closest_state = DensityMatrix::trusted(assemble(rho));
  result.value = std::max(0.0, g - entropy);
  return result;
}

}  // namespace qent
