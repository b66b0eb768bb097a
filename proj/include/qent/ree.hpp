// Relative entropy of entanglement by convex minimization over PPT states.
//
// For two qubits the separable set coincides with the set of density
// matrices whose partial transpose is also PSD, so
//
//   E(sigma) = min_{rho PPT} -Tr sigma lg rho  -  S(sigma)
//
// is a smooth convex program over a compact convex set. It is solved by
// projected gradient descent with an Armijo line search; the projection onto
// the feasible set is computed with Dykstra's alternating projections between
// the density-matrix set and the PPT cone.

#ifndef QENT_REE_HPP
#define QENT_REE_HPP

#include <optional>
#include <vector>

#include "qent/linalg.hpp"

namespace qent {

struct ReeConfig {
  int max_outer_iters = 5000;
  /// Stagnation threshold on the objective decrease per accepted step.
  double grad_tol = 1e-9;
  double step_init = 1.0;
  double armijo_beta = 0.5;
  double armijo_c = 1e-4;
  int dykstra_max = 500;
  double dykstra_tol = 1e-11;
  /// Eigenvalue floor applied to rho inside the objective only.
  double eig_floor = 1e-12;

  /// Throws InvalidArgument unless every field is positive (and beta < 1).
  void validate() const;
};

struct ReeResult {
  double value = 0.0;
  DensityMatrix closest_state = DensityMatrix::trusted(Mat4::Identity() / 4.0);
  int iterations = 0;
  /// Frobenius norm of the last accepted step.
  double final_step_residual = 0.0;
  bool converged = false;
  /// Objective -Tr sigma lg rho at the start and after every accepted step.
  std::vector<double> objective_trace;
};

ReeResult ree_solve(const DensityMatrix& sigma, const ReeConfig& cfg = {},
                    const std::optional<DensityMatrix>& warm_start = std::nullopt);

/// Divided-difference form of the Frechet derivative of the natural matrix
/// logarithm at rho, applied to sigma. Eigenvalues of rho are floored at `floor`.
Mat4 log_frechet_apply(const Mat4& rho, const Mat4& sigma, double floor);
inline Mat4 log_frechet_apply(const DensityMatrix& rho, const DensityMatrix& sigma, double floor) {
  return log_frechet_apply(rho.matrix(), sigma.matrix(), floor);
}

/// Euclidean projection of a real vector onto the probability simplex.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v);

/// Frobenius-nearest density matrix to a Hermitian matrix.
DensityMatrix project_density_simplex(const Mat4& a);

/// Frobenius-nearest Hermitian matrix with PSD partial transpose.
Mat4 project_ppt(const Mat4& a);

struct DykstraResult {
  DensityMatrix state = DensityMatrix::trusted(Mat4::Identity() / 4.0);
  int iterations = 0;
  bool converged = false;
  /// Most negative eigenvalue of the partial transpose, reported as a positive defect.
  double ppt_defect = 0.0;
};

/// Projection of a Hermitian matrix onto the PPT density matrices.
DykstraResult dykstra_project(const Mat4& a, const ReeConfig& cfg = {});

/// Smallest eigenvalue of the partial transpose.
double min_ppt_eigenvalue(const Mat4& rho);

}  // namespace qent

#endif  // QENT_REE_HPP
