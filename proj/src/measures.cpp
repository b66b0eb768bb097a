#include "qent/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qent {

namespace {

constexpr double kSqrtClip = 1e-12;
// Inputs computed in floating point (C = 1 + eps) are accepted and clamped.
constexpr double kRangeSlack = 1e-12;

double clamp_unit(double x, const char* what) {
  if (!(x >= -kRangeSlack && x <= 1.0 + kRangeSlack))
    throw InvalidArgument(std::string(what) + " argument " + std::to_string(x) + " outside [0, 1]");
  return std::clamp(x, 0.0, 1.0);
}

double xlgx(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

Mat4 spin_flip(const Mat4& rho) {
  const Mat4 yy = tensor_product(pauli::y(), pauli::y());
  return yy * rho.conjugate() * yy;
}

Real4 concurrence_spectrum(const DensityMatrix& rho) {
  // With rho = W W^dagger, the lambda_i are the singular values of the
  // symmetric tau = W^T (sy x sy) W; tau^dagger tau is similar to
  // sqrt(rho) rho_tilde sqrt(rho). Going through tau avoids taking square
  // roots of roundoff-level eigenvalues, which would leave ~1e-8 noise in C
  // for pure states.
  const auto eig = hermitian_eig(rho.matrix());
  Real4 weights;
  for (int i = 0; i < 4; ++i) {
    double v = eig.values(i);
    if (v < 0.0 && v >= -kSqrtClip) v = 0.0;
    weights(i) = std::sqrt(std::max(v, 0.0));
  }
  const Mat4 w = eig.vectors * weights.cast<std::complex<double>>().asDiagonal();
  const Mat4 tau = w.transpose() * tensor_product(pauli::y(), pauli::y()) * w;
  return Eigen::JacobiSVD<Mat4>(tau).singularValues();
}

double concurrence(const DensityMatrix& rho) {
  const Real4 l = concurrence_spectrum(rho);
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double negativity(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(partial_transpose(rho.matrix()));
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::max(0.0, -eig.values(i));
  return 2.0 * sum;
}

double binary_entropy(double x) {
  x = clamp_unit(x, "binary_entropy");
  return -xlgx(x) - xlgx(1.0 - x);
}

double ternary_entropy(double x1, double x2) {
  if (x1 < -kRangeSlack || x2 < -kRangeSlack || x1 + x2 > 1.0 + kRangeSlack)
    throw InvalidArgument("ternary_entropy: (" + std::to_string(x1) + ", " + std::to_string(x2) +
                          ") is not on the probability simplex");
  x1 = std::max(x1, 0.0);
  x2 = std::max(x2, 0.0);
  const double x3 = std::max(0.0, 1.0 - x1 - x2);
  return -xlgx(x1) - xlgx(x2) - xlgx(x3);
}

double entanglement_of_formation(double c) {
  c = clamp_unit(c, "entanglement_of_formation");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double ppt_cost(double n) {
  n = clamp_unit(n, "ppt_cost");
  return std::log2(n + 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s -= xlgx(std::max(eig.values(i), 0.0));
  return s;
}

double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  const Mat4 in_basis = eig.vectors.adjoint() * sigma.matrix() * eig.vectors;
  double cross = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double weight = in_basis(i, i).real();
    if (eig.values(i) <= kLogFloor) {
      if (weight > 1e-12)
        throw SupportViolation("relative_entropy: sigma has weight " + std::to_string(weight) +
                               " outside the support of rho");
      continue;
    }
    cross += weight * std::log2(eig.values(i));
  }
  return -von_neumann_entropy(sigma) - cross;
}

Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho) {
  const std::array<Mat2, 3> s{pauli::x(), pauli::y(), pauli::z()};
  Eigen::Matrix3d t;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m)
      t(n, m) = (rho.matrix() * tensor_product(s[n], s[m])).trace().real();
  return t;
}

double chsh_m(const DensityMatrix& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho);
  const Eigen::Matrix3d ttt = t * t.transpose();
  const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(ttt).eigenvalues();
  return ev(1) + ev(2);
}

double max_bell_value(const DensityMatrix& rho) { return 2.0 * std::sqrt(chsh_m(rho)); }

}  // namespace qent
