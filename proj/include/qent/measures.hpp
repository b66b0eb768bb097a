// Closed-form entanglement and Bell-violation quantifiers for two qubits.
// Every logarithm is base 2.

#ifndef QENT_MEASURES_HPP
#define QENT_MEASURES_HPP

#include <optional>

#include "qent/linalg.hpp"

namespace qent {

struct MeasureTriple {
  double C = 0.0;
  double N = 0.0;
  double E = 0.0;
  std::optional<double> M;
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i^2 are the
/// eigenvalues of the Hermitian sqrt(rho) rho_tilde sqrt(rho).
double concurrence(const DensityMatrix& rho);

/// The four descending lambda_i entering the concurrence.
Real4 concurrence_spectrum(const DensityMatrix& rho);

/// Spin-flipped state (sy x sy) rho^* (sy x sy).
Mat4 spin_flip(const Mat4& rho);

/// Twice the magnitude of the negative part of the partial-transpose spectrum.
double negativity(const DensityMatrix& rho);

double binary_entropy(double x);

/// Shannon entropy of (x1, x2, 1 - x1 - x2).
double ternary_entropy(double x1, double x2);

/// Wootters formula h((1 + sqrt(1 - C^2)) / 2).
double entanglement_of_formation(double concurrence);

/// lg(N + 1).
double ppt_cost(double negativity);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(sigma || rho) = Tr sigma (lg sigma - lg rho) in bits.
/// Throws SupportViolation when sigma has weight above 1e-12 on a direction
/// where rho's eigenvalue is at or below 1e-15.
double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho);

/// Correlation matrix t_nm = Tr(rho s_n x s_m), n, m over (x, y, z).
Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T T^T. CHSH is violated iff M > 1.
double chsh_m(const DensityMatrix& rho);

/// 2 sqrt(M), the largest attainable CHSH expectation.
double max_bell_value(const DensityMatrix& rho);

}  // namespace qent

#endif  // QENT_MEASURES_HPP
