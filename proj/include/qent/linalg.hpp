// Dense complex matrix foundation for two-qubit states.
//
// Basis order is |00>, |01>, |10>, |11>. Partial transposition always acts
// on the second qubit.

#ifndef QENT_LINALG_HPP
#define QENT_LINALG_HPP

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qent/errors.hpp"

namespace qent {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
template <typename Scalar>
using Vector4c = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

using Mat2 = Matrix2c<double>;
using Mat4 = Matrix4c<double>;
using Vec4 = Vector4c<double>;
using Real4 = Eigen::Vector4d;

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

/// Kronecker product, result(2i+k, 2j+l) = a(i,j) * b(k,l).
template <typename Scalar>
Matrix4c<Scalar> tensor_product(const Matrix2c<Scalar>& a, const Matrix2c<Scalar>& b) {
  Matrix4c<Scalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// Transpose on the second qubit: each 2x2 block is transposed in place.
template <typename Derived>
Matrix4c<typename Derived::RealScalar> partial_transpose(const Eigen::MatrixBase<Derived>& m) {
  static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4,
                "partial_transpose is defined for 4x4 operators");
  Matrix4c<typename Derived::RealScalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.template block<2, 2>(2 * i, 2 * j) = m.template block<2, 2>(2 * i, 2 * j).transpose();
  return out;
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigenpairs of a Hermitian matrix with eigenvalues sorted descending.
template <typename Scalar, int Dim>
struct HermitianEigen {
  Eigen::Matrix<Scalar, Dim, 1> values;
  Eigen::Matrix<std::complex<Scalar>, Dim, Dim> vectors;
};

inline constexpr double kHermitianTol = 1e-10;

/// Throws NotHermitian when |A - A^H| exceeds 1e-10 anywhere.
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::RealScalar;
  constexpr int Dim = Derived::RowsAtCompileTime;
  using Square = Eigen::Matrix<std::complex<Scalar>, Dim, Dim>;
  if (hermiticity_defect(a) > kHermitianTol)
    throw NotHermitian("hermitian_eig: input deviates from Hermitian by " +
                       std::to_string(hermiticity_defect(a)));
  const Square sym = Scalar(0.5) * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Square> solver(sym);
  HermitianEigen<Scalar, Dim> out;
  // Eigen sorts ascending.
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// V diag(f(values)) V^H.
template <typename Scalar, int Dim, typename Fn>
Eigen::Matrix<std::complex<Scalar>, Dim, Dim> spectral_apply(const HermitianEigen<Scalar, Dim>& eig,
                                                             Fn&& fn) {
  Eigen::Matrix<Scalar, Dim, 1> mapped;
  for (int i = 0; i < eig.values.size(); ++i) mapped(i) = fn(eig.values(i));
  return eig.vectors * mapped.template cast<std::complex<Scalar>>().asDiagonal() *
         eig.vectors.adjoint();
}

inline constexpr double kPsdClip = 1e-10;

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are clipped.
template <typename Derived>
auto matrix_sqrt_psd(const Eigen::MatrixBase<Derived>& a) {
  const auto eig = hermitian_eig(a);
  const auto min_ev = eig.values.minCoeff();
  if (min_ev < -kPsdClip)
    throw NotPositive("matrix_sqrt_psd: eigenvalue " + std::to_string(min_ev) + " below -1e-10");
  using Scalar = typename Derived::RealScalar;
  return spectral_apply(eig, [](Scalar v) { return v > 0 ? std::sqrt(v) : Scalar(0); });
}

inline constexpr double kLogFloor = 1e-15;

template <typename Scalar, int Dim>
struct LogResult {
  Eigen::Matrix<std::complex<Scalar>, Dim, Dim> value;
  bool support_deficient = false;
};

/// Base-2 matrix logarithm; eigenvalues at or below 1e-15 map to lg(1e-15)
/// and raise the support-deficiency flag.
template <typename Derived>
auto matrix_lg_on_support(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::RealScalar;
  constexpr int Dim = Derived::RowsAtCompileTime;
  const auto eig = hermitian_eig(a);
  LogResult<Scalar, Dim> out;
  const Scalar floor_lg = std::log2(Scalar(kLogFloor));
  out.value = spectral_apply(eig, [&](Scalar v) {
    if (v > Scalar(kLogFloor)) return std::log2(v);
    out.support_deficient = true;
    return floor_lg;
  });
  return out;
}

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class DensityMatrix {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Throws InvalidDensity carrying the first violated invariant.
  static DensityMatrix validated(const Mat4& m, double tol = kDefaultTol);

  /// Returns the first violated invariant, if any.
  static std::optional<DensityViolation> check(const Mat4& m, double tol = kDefaultTol);

  /// For matrices that are valid by construction (projections, spectral
  /// assembly). Hermitian part is taken, no other checks.
  static DensityMatrix trusted(const Mat4& m);

  const Mat4& matrix() const { return mat_; }
  std::complex<double> operator()(int i, int j) const { return mat_(i, j); }

 private:
  explicit DensityMatrix(const Mat4& m) : mat_(m) {}
  Mat4 mat_;
};

inline DensityMatrix validate_density(const Mat4& m, double tol = DensityMatrix::kDefaultTol) {
  return DensityMatrix::validated(m, tol);
}

/// Normalized amplitudes (a, b, c, d) on |00>, |01>, |10>, |11>.
class PureState {
 public:
  static constexpr double kNormTol = 1e-12;

  /// Throws InvalidArgument when the norm deviates from 1 by more than 1e-12.
  explicit PureState(const Vec4& amps);
  /// Rescales any nonzero vector.
  static PureState normalized(const Vec4& amps);

  const Vec4& amplitudes() const { return amps_; }
  DensityMatrix density() const;

 private:
  Vec4 amps_;
};

namespace bell {
Vec4 phi_plus();
Vec4 phi_minus();
Vec4 psi_plus();
Vec4 psi_minus();
}  // namespace bell

Vec4 basis_ket(int index);
Mat4 projector(const Vec4& v);

double frobenius_distance(const Mat4& a, const Mat4& b);

}  // namespace qent

#endif  // QENT_LINALG_HPP
