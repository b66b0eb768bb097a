#ifndef QENT_TESTS_HELPERS_HPP
#define QENT_TESTS_HELPERS_HPP

#include "qent/linalg.hpp"

namespace qent::testing {

// Full-rank entangled state with complex coherences; reference values in
// tests/oracle/oracle.py.
inline DensityMatrix fixed_state() {
  using c = std::complex<double>;
  Mat4 a;
  a << 1.0, c(0, 0.2), 0.0, 0.9,
       0.1, 0.3, -0.2, 0.0,
       0.0, c(0, 0.4), 0.2, 0.1,
       0.7, 0.0, c(0, 0.1), 0.8;
  Mat4 r = a * a.adjoint();
  return DensityMatrix::validated(r / r.trace().real());
}

inline constexpr double kOracleC = 0.7526436889201729;
inline constexpr double kOracleN = 0.7465739956261668;
inline constexpr double kOracleM = 1.5032781235063122;
inline constexpr double kOracleS = 0.5682254167220399;
inline constexpr double kOracleE = 0.47948364490059625;

inline DensityMatrix singlet() { return DensityMatrix::trusted(projector(bell::psi_minus())); }
inline DensityMatrix maximally_mixed() { return DensityMatrix::trusted(Mat4::Identity() / 4.0); }

inline Mat4 diag4(double a, double b, double c, double d) {
  return Eigen::Vector4d(a, b, c, d).cast<std::complex<double>>().asDiagonal();
}

}  // namespace qent::testing

#endif  // QENT_TESTS_HELPERS_HPP
