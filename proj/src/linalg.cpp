#include "qent/linalg.hpp"

#include <cmath>
#include <sstream>

namespace qent {

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  using namespace std::complex_literals;
  Mat2 m;
  m << 0, -1i, 1i, 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

std::string DensityViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Hermiticity: os << "hermiticity violation "; break;
    case Kind::Trace: os << "trace violation "; break;
    case Kind::Positivity: os << "positivity violation "; break;
  }
  os << amount;
  return os.str();
}

std::optional<DensityViolation> DensityMatrix::check(const Mat4& m, double tol) {
  using Kind = DensityViolation::Kind;
  if (!m.allFinite()) return DensityViolation{Kind::Hermiticity, INFINITY};
  const double herm = hermiticity_defect(m);
  if (herm > tol) return DensityViolation{Kind::Hermiticity, herm};
  const double trace_err = std::abs(m.trace() - 1.0);
  if (trace_err > tol) return DensityViolation{Kind::Trace, trace_err};
  const Mat4 sym = 0.5 * (m + m.adjoint());
  const double min_ev = Eigen::SelfAdjointEigenSolver<Mat4>(sym, Eigen::EigenvaluesOnly).eigenvalues()(0);
  if (min_ev < -tol) return DensityViolation{Kind::Positivity, -min_ev};
  return std::nullopt;
}

DensityMatrix DensityMatrix::validated(const Mat4& m, double tol) {
  if (auto v = check(m, tol)) throw InvalidDensity(*v);
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::trusted(const Mat4& m) { return DensityMatrix(0.5 * (m + m.adjoint())); }

PureState::PureState(const Vec4& amps) : amps_(amps) {
  const double norm_err = std::abs(amps.squaredNorm() - 1.0);
  if (norm_err > kNormTol) {
    throw InvalidArgument("pure state amplitudes are not normalized (|norm^2 - 1| = " +
                          std::to_string(norm_err) + ")");
  }
}

PureState PureState::normalized(const Vec4& amps) {
  const double n = amps.norm();
  if (n == 0.0) throw InvalidArgument("pure state amplitudes are all zero");
  return PureState(amps / n);
}

DensityMatrix PureState::density() const { return DensityMatrix::trusted(projector(amps_)); }

Vec4 basis_ket(int index) {
  if (index < 0 || index > 3) throw InvalidArgument("basis index out of range");
  return Vec4::Unit(index);
}

namespace bell {
namespace {
Vec4 combo(int a, int b, double sign) { return (basis_ket(a) + sign * basis_ket(b)) / std::sqrt(2.0); }
}  // namespace
Vec4 phi_plus() { return combo(0, 3, 1.0); }
Vec4 phi_minus() { return combo(0, 3, -1.0); }
Vec4 psi_plus() { return combo(1, 2, 1.0); }
Vec4 psi_minus() { return combo(1, 2, -1.0); }
}  // namespace bell

Mat4 projector(const Vec4& v) { return v * v.adjoint(); }

double frobenius_distance(const Mat4& a, const Mat4& b) { return (a - b).norm(); }

}  // namespace qent
