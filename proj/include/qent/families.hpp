// Analytic two-qubit state families with closed-form (C, N, E).
//
//   Pure       a|00> + b|01> + c|10> + d|11>
//   Horodecki  C |psi-><psi-| + (1 - C) |00><00|
//   BellDiag   sum_i l_i |beta_i><beta_i|, beta = (phi+, phi-, psi+, psi-)
//   Werner     (1 + 2C)/3 |psi-><psi-| + (1 - C)/6 I
//   X          C |psi-><psi-| + (1 - C) |01><01|
//   Y          A|01><01| + (1 - A)|10><10| + C/2 (|01><10| + |10><01|)
//   Z          1/2 [(1 - a)(|01><01| + |10><10|) + C(|01><10| + h.c.) + 2a|00><00|],
//              a = (C^2 - N^2) / (2N)

#ifndef QENT_FAMILIES_HPP
#define QENT_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qent/linalg.hpp"
#include "qent/measures.hpp"

namespace qent {

namespace family {
struct Pure {
  Vec4 amplitudes;
};
struct Horodecki {
  double C;
};
struct BellDiagonal {
  std::array<double, 4> lambda;
};
struct Werner {
  double C;
};
struct X {
  double C;
};
struct Y {
  double A;
  double C;
};
struct Z {
  double C;
  double N;
};
}  // namespace family

using StateFamily = std::variant<family::Pure, family::Horodecki, family::BellDiagonal,
                                 family::Werner, family::X, family::Y, family::Z>;

enum class FamilyKind { Pure, Horodecki, BellDiagonal, Werner, X, Y, Z };

FamilyKind kind_of(const StateFamily& f);
std::string to_string(FamilyKind kind);
/// Short human-readable form, e.g. "horodecki(C=0.6)".
std::string describe(const StateFamily& f);

/// Throws FamilyConstraint naming the offending parameter.
void check_family(const StateFamily& f);

DensityMatrix build(const StateFamily& f);

/// Closed-form (C, N, E); M is left empty.
MeasureTriple analytic_measures(const StateFamily& f);

/// Published closest separable state, available for X and Y only.
std::optional<DensityMatrix> closest_separable(const StateFamily& f);

// Convenience constructors used by the example catalog and the CLI.

/// sqrt(p)|01> + sqrt(1 - p)|10> with 2 sqrt(p(1 - p)) = C.
family::Pure pure_with_concurrence(double c);
/// l = ((1 + C)/2, (1 - C)/2, 0, 0).
family::BellDiagonal bell_with_concurrence(double c);
/// Horodecki state whose negativity equals N.
family::Horodecki horodecki_with_negativity(double n);

namespace closed_form {
/// sqrt((1 - C)^2 + C^2) - (1 - C); also the lower bound of N at fixed C.
double horodecki_negativity(double c);
/// Inverse of horodecki_negativity: sqrt(2N(1 + N)) - N.
double horodecki_concurrence(double n);
double horodecki_ree(double c);
/// 1 - h((1 + C)/2), shared by all Bell-diagonal states.
double bell_diagonal_ree(double c);
double x_ree(double c);
double y_ree(double a, double c);
/// REE of the Z family: -Tr sigma lg rho_bar - S(sigma) with rho_bar
/// diagonal in (|00>, |psi+>, |psi->, |11>).
double z_ree(double c, double n);
/// h3((1+a)b, (1+a)(1-2b)/2 + bC) - h3(a, (1-a+C)/2) taken literally. It
/// agrees with z_ree only on the N = C edge; kept for comparison.
double z_ree_printed(double c, double n);
/// Largest admissible C of the Z family at given N.
double z_max_concurrence(double n);
/// 2 max over cyclic (i, j, k) of [(l_i - l_j)^2 + (l_k - l_4)^2].
double bell_diagonal_chsh_m(const std::array<double, 4>& lambda);
}  // namespace closed_form

enum class CurveKind { Horodecki, Pure, BellDiagonal, X, VerstraeteLower };

struct CurvePoint {
  double C;
  double N;
  std::optional<double> E;
};

struct BoundaryCurve {
  CurveKind kind;
  std::vector<CurvePoint> samples;
};

/// Uniform sweep of C over [0, 1] with grid_size >= 2 points.
BoundaryCurve boundary_curve(CurveKind kind, int grid_size);
CurveKind parse_curve_kind(const std::string& name);

inline constexpr double kRootTol = 1e-10;

/// Negativity at which pure and Horodecki states have equal REE.
double find_n0();

/// Concurrence at which the family's REE equals target_e. Kind must be
/// Pure, Horodecki or BellDiagonal.
double find_c_for_e(FamilyKind kind, double target_e);

/// Bisection on [lo, hi]; throws RootNotBracketed without a sign change.
template <typename Fn>
double bisect(Fn&& f, double lo, double hi, double tol = kRootTol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0) == (f_hi > 0)) throw RootNotBracketed("bisect: no sign change on bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qent

#endif  // QENT_FAMILIES_HPP
