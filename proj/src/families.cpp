#include "qent/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qent {

namespace {

constexpr double kParamSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_unit(const std::string& name, double v) {
  if (!(v >= -kParamSlack && v <= 1.0 + kParamSlack))
    throw FamilyConstraint(name, name + " = " + std::to_string(v) + " must lie in [0, 1]");
}

double lg_or_zero(double coeff, double x) { return coeff == 0.0 ? 0.0 : coeff * std::log2(x); }

const std::array<Vec4, 4>& bell_basis() {
  static const std::array<Vec4, 4> basis{bell::phi_plus(), bell::phi_minus(), bell::psi_plus(),
                                         bell::psi_minus()};
  return basis;
}

Mat4 ket_bra(int i, int j) {
  Mat4 m = Mat4::Zero();
  m(i, j) = 1.0;
  return m;
}

}  // namespace

FamilyKind kind_of(const StateFamily& f) { return static_cast<FamilyKind>(f.index()); }

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Pure: return "pure";
    case FamilyKind::Horodecki: return "horodecki";
    case FamilyKind::BellDiagonal: return "bell";
    case FamilyKind::Werner: return "werner";
    case FamilyKind::X: return "x";
    case FamilyKind::Y: return "y";
    case FamilyKind::Z: return "z";
  }
  return "unknown";
}

std::string describe(const StateFamily& f) {
  std::ostringstream os;
  os.precision(6);
  std::visit(overloaded{
                 [&](const family::Pure& p) {
                   os << "pure(C=" << 2.0 * std::abs(p.amplitudes(0) * p.amplitudes(3) -
                                                     p.amplitudes(1) * p.amplitudes(2))
                      << ")";
                 },
                 [&](const family::Horodecki& h) { os << "horodecki(C=" << h.C << ")"; },
                 [&](const family::BellDiagonal& b) {
                   os << "bell(l=" << b.lambda[0] << "," << b.lambda[1] << "," << b.lambda[2]
                      << "," << b.lambda[3] << ")";
                 },
                 [&](const family::Werner& w) { os << "werner(C=" << w.C << ")"; },
                 [&](const family::X& x) { os << "x(C=" << x.C << ")"; },
                 [&](const family::Y& y) { os << "y(A=" << y.A << ",C=" << y.C << ")"; },
                 [&](const family::Z& z) { os << "z(C=" << z.C << ",N=" << z.N << ")"; },
             },
             f);
  return os.str();
}

void check_family(const StateFamily& f) {
  std::visit(
      overloaded{
          [](const family::Pure& p) {
            const double err = std::abs(p.amplitudes.squaredNorm() - 1.0);
            if (err > PureState::kNormTol)
              throw FamilyConstraint("amplitudes", "pure amplitudes are not normalized (|norm^2 - 1| = " +
                                                       std::to_string(err) + ")");
          },
          [](const family::Horodecki& h) { require_unit("C", h.C); },
          [](const family::BellDiagonal& b) {
            for (double l : b.lambda)
              if (l < -kParamSlack) throw FamilyConstraint("l", "Bell-diagonal weights must be nonnegative");
            const double sum = std::accumulate(b.lambda.begin(), b.lambda.end(), 0.0);
            if (std::abs(sum - 1.0) > 1e-12)
              throw FamilyConstraint("l", "Bell-diagonal weights sum to " + std::to_string(sum) +
                                              ", expected 1");
          },
          [](const family::Werner& w) { require_unit("C", w.C); },
          [](const family::X& x) { require_unit("C", x.C); },
          [](const family::Y& y) {
            require_unit("A", y.A);
            const double bound = 2.0 * std::sqrt(std::max(0.0, y.A * (1.0 - y.A)));
            if (y.C < -kParamSlack || y.C > bound + kParamSlack)
              throw FamilyConstraint("C", "C = " + std::to_string(y.C) + " must lie in [0, 2 sqrt(A(1-A))] = [0, " +
                                              std::to_string(bound) + "]");
          },
          [](const family::Z& z) {
            if (!(z.N > 0.0) || z.N > 1.0 + kParamSlack)
              throw FamilyConstraint("N", "N = " + std::to_string(z.N) + " must lie in (0, 1]");
            const double upper = closed_form::z_max_concurrence(z.N);
            if (z.C < z.N - kParamSlack || z.C > upper + kParamSlack)
              throw FamilyConstraint("C", "C = " + std::to_string(z.C) + " must lie in [N, sqrt(2N(N+1)) - N] = [" +
                                              std::to_string(z.N) + ", " + std::to_string(upper) + "]");
          },
      },
      f);
}

DensityMatrix build(const StateFamily& f) {
  check_family(f);
  const Mat4 singlet = projector(bell::psi_minus());
  const Mat4 m = std::visit(
      overloaded{
          [](const family::Pure& p) -> Mat4 { return projector(p.amplitudes); },
          [&](const family::Horodecki& h) -> Mat4 { return h.C * singlet + (1.0 - h.C) * ket_bra(0, 0); },
          [](const family::BellDiagonal& b) -> Mat4 {
            Mat4 out = Mat4::Zero();
            for (int i = 0; i < 4; ++i) out += b.lambda[i] * projector(bell_basis()[i]);
            return out;
          },
          [&](const family::Werner& w) -> Mat4 {
            return (1.0 + 2.0 * w.C) / 3.0 * singlet + (1.0 - w.C) / 6.0 * Mat4::Identity();
          },
          [&](const family::X& x) -> Mat4 { return x.C * singlet + (1.0 - x.C) * ket_bra(1, 1); },
          [](const family::Y& y) -> Mat4 {
            return y.A * ket_bra(1, 1) + (1.0 - y.A) * ket_bra(2, 2) +
                   0.5 * y.C * (ket_bra(1, 2) + ket_bra(2, 1));
          },
          [](const family::Z& z) -> Mat4 {
            const double alpha = (z.C * z.C - z.N * z.N) / (2.0 * z.N);
            return 0.5 * ((1.0 - alpha) * (ket_bra(1, 1) + ket_bra(2, 2)) +
                          z.C * (ket_bra(1, 2) + ket_bra(2, 1)) + 2.0 * alpha * ket_bra(0, 0));
          },
      },
      f);
  return DensityMatrix::trusted(m);
}

namespace closed_form {

double horodecki_negativity(double c) { return std::sqrt((1.0 - c) * (1.0 - c) + c * c) - (1.0 - c); }

double horodecki_concurrence(double n) { return std::sqrt(2.0 * n * (1.0 + n)) - n; }

double horodecki_ree(double c) {
  return lg_or_zero(c - 2.0, 1.0 - 0.5 * c) + lg_or_zero(1.0 - c, 1.0 - c);
}

double bell_diagonal_ree(double c) { return 1.0 - binary_entropy(0.5 * (1.0 + c)); }

double x_ree(double c) {
  const double r = 1.0 + std::sqrt((1.0 - c) * (1.0 - c) + c * c);
  return binary_entropy(0.5 * c) - binary_entropy(0.5 * r);
}

double y_ree(double a, double c) {
  const double root = std::sqrt((1.0 - 2.0 * a) * (1.0 - 2.0 * a) + c * c);
  return binary_entropy(a) - binary_entropy(0.5 * (1.0 + root));
}

namespace {

struct ZSpectra {
  double alpha;
  // Closest separable state eigenvalues on |00>, |psi+>, |psi->, |11>.
  double on_00, on_psi_plus, on_psi_minus, on_11;
};

ZSpectra z_spectra(double c, double n) {
  const double alpha = (c * c - n * n) / (2.0 * n);
  const double beta = alpha * (1.0 + alpha) / ((1.0 + alpha) * (1.0 + alpha) - c * c);
  const double x1 = (1.0 + alpha) * beta;
  const double x2 = 0.5 * (1.0 + alpha) * (1.0 - 2.0 * beta) + beta * c;
  const double x3 = std::max(0.0, 1.0 - x1 - x2);
  // The remaining weight x3 splits between |psi-> and |11> so that the
  // partial transpose sits on the PPT boundary: x1 * w = ((x2 - y) / 2)^2.
  const double y = std::clamp((x2 - 2.0 * x1) + 2.0 * std::sqrt(std::max(0.0, x1 * (x1 - x2 + x3))), 0.0, x3);
  return {alpha, x1, x2, y, x3 - y};
}

double cross_term(double weight, double eigenvalue) {
  return weight <= 1e-14 ? 0.0 : -weight * std::log2(eigenvalue);
}

}  // namespace

double z_ree(double c, double n) {
  const ZSpectra z = z_spectra(c, n);
  const double w00 = z.alpha;
  const double w_plus = 0.5 * (1.0 - z.alpha + c);
  const double w_minus = std::max(0.0, 0.5 * (1.0 - z.alpha - c));
  const double cross = cross_term(w00, z.on_00) + cross_term(w_plus, z.on_psi_plus) +
                       cross_term(w_minus, z.on_psi_minus);
  return std::max(0.0, cross - ternary_entropy(w00, w_plus));
}

double z_ree_printed(double c, double n) {
  const double alpha = (c * c - n * n) / (2.0 * n);
  const double beta = alpha * (1.0 + alpha) / ((1.0 + alpha) * (1.0 + alpha) - c * c);
  return ternary_entropy((1.0 + alpha) * beta, 0.5 * (1.0 + alpha) * (1.0 - 2.0 * beta) + beta * c) -
         ternary_entropy(alpha, 0.5 * (1.0 - alpha + c));
}

double z_max_concurrence(double n) { return horodecki_concurrence(n); }

double bell_diagonal_chsh_m(const std::array<double, 4>& l) {
  double best = 0.0;
  for (int s = 0; s < 3; ++s) {
    const int i = s, j = (s + 1) % 3, k = (s + 2) % 3;
    const double v = (l[i] - l[j]) * (l[i] - l[j]) + (l[k] - l[3]) * (l[k] - l[3]);
    best = std::max(best, v);
  }
  return 2.0 * best;
}

}  // namespace closed_form

MeasureTriple analytic_measures(const StateFamily& f) {
  check_family(f);
  using namespace closed_form;
  return std::visit(
      overloaded{
          [](const family::Pure& p) {
            const auto& a = p.amplitudes;
            const double c = std::min(1.0, 2.0 * std::abs(a(0) * a(3) - a(1) * a(2)));
            return MeasureTriple{c, c, entanglement_of_formation(c), std::nullopt};
          },
          [](const family::Horodecki& h) {
            return MeasureTriple{h.C, horodecki_negativity(h.C), horodecki_ree(h.C), std::nullopt};
          },
          [](const family::BellDiagonal& b) {
            const double top = *std::max_element(b.lambda.begin(), b.lambda.end());
            const double c = std::clamp(2.0 * top - 1.0, 0.0, 1.0);
            return MeasureTriple{c, c, bell_diagonal_ree(c), std::nullopt};
          },
          [](const family::Werner& w) { return MeasureTriple{w.C, w.C, bell_diagonal_ree(w.C), std::nullopt}; },
          [](const family::X& x) { return MeasureTriple{x.C, x.C, x_ree(x.C), std::nullopt}; },
          [](const family::Y& y) { return MeasureTriple{y.C, y.C, y_ree(y.A, y.C), std::nullopt}; },
          [](const family::Z& z) { return MeasureTriple{z.C, z.N, z_ree(z.C, z.N), std::nullopt}; },
      },
      f);
}

std::optional<DensityMatrix> closest_separable(const StateFamily& f) {
  check_family(f);
  if (const auto* x = std::get_if<family::X>(&f))
    return DensityMatrix::trusted((1.0 - 0.5 * x->C) * ket_bra(1, 1) + 0.5 * x->C * ket_bra(2, 2));
  if (const auto* y = std::get_if<family::Y>(&f))
    return DensityMatrix::trusted(y->A * ket_bra(1, 1) + (1.0 - y->A) * ket_bra(2, 2));
  return std::nullopt;
}

family::Pure pure_with_concurrence(double c) {
  require_unit("C", c);
  c = std::clamp(c, 0.0, 1.0);
  const double p = 0.5 * (1.0 - std::sqrt(1.0 - c * c));
  Vec4 amps = Vec4::Zero();
  amps(1) = std::sqrt(p);
  amps(2) = std::sqrt(1.0 - p);
  return {amps};
}

family::BellDiagonal bell_with_concurrence(double c) {
  require_unit("C", c);
  return {{0.5 * (1.0 + c), 0.5 * (1.0 - c), 0.0, 0.0}};
}

family::Horodecki horodecki_with_negativity(double n) {
  require_unit("N", n);
  return {std::min(1.0, closed_form::horodecki_concurrence(n))};
}

BoundaryCurve boundary_curve(CurveKind kind, int grid_size) {
  if (grid_size < 2) throw InvalidArgument("boundary_curve: grid_size must be at least 2");
  using namespace closed_form;
  BoundaryCurve curve{kind, {}};
  curve.samples.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    // Endpoints are exact: 0 and 1.
    const double c = i == grid_size - 1 ? 1.0 : static_cast<double>(i) / (grid_size - 1);
    switch (kind) {
      case CurveKind::Horodecki: curve.samples.push_back({c, horodecki_negativity(c), horodecki_ree(c)}); break;
      case CurveKind::Pure: curve.samples.push_back({c, c, entanglement_of_formation(c)}); break;
      case CurveKind::BellDiagonal: curve.samples.push_back({c, c, bell_diagonal_ree(c)}); break;
      case CurveKind::X: curve.samples.push_back({c, c, x_ree(c)}); break;
      case CurveKind::VerstraeteLower: curve.samples.push_back({c, horodecki_negativity(c), std::nullopt}); break;
    }
  }
  return curve;
}

CurveKind parse_curve_kind(const std::string& name) {
  if (name == "H") return CurveKind::Horodecki;
  if (name == "P") return CurveKind::Pure;
  if (name == "B") return CurveKind::BellDiagonal;
  if (name == "X") return CurveKind::X;
  if (name == "VL") return CurveKind::VerstraeteLower;
  throw InvalidArgument("unknown boundary curve '" + name + "' (expected H, P, B, X or VL)");
}

double find_n0() {
  using namespace closed_form;
  const auto diff = [](double n) { return entanglement_of_formation(n) - horodecki_ree(horodecki_concurrence(n)); };
  return bisect(diff, 0.01, 0.99);
}

namespace {

double family_ree_of_c(FamilyKind kind, double c) {
  switch (kind) {
    case FamilyKind::Pure: return entanglement_of_formation(c);
    case FamilyKind::Horodecki: return closed_form::horodecki_ree(c);
    case FamilyKind::BellDiagonal: return closed_form::bell_diagonal_ree(c);
    default: break;
  }
  throw InvalidArgument("find_c_for_e: family '" + to_string(kind) + "' has no tabulated E(C) inversion");
}

void require_increasing(FamilyKind kind) {
  constexpr int kGrid = 1000;
  double prev = family_ree_of_c(kind, 0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double cur = family_ree_of_c(kind, static_cast<double>(i) / kGrid);
    if (!(cur > prev)) throw Error("E(C) of family '" + to_string(kind) + "' is not increasing on the grid");
    prev = cur;
  }
}

}  // namespace

double find_c_for_e(FamilyKind kind, double target_e) {
  family_ree_of_c(kind, 0.5);
  if (!(target_e > 0.0 && target_e < 1.0))
    throw InvalidArgument("find_c_for_e: target E must lie in (0, 1)");
  static const bool checked = [] {
    for (FamilyKind k : {FamilyKind::Pure, FamilyKind::Horodecki, FamilyKind::BellDiagonal}) require_increasing(k);
    return true;
  }();
  (void)checked;
  return bisect([&](double c) { return family_ree_of_c(kind, c) - target_e; }, 0.0, 1.0);
}

}  // namespace qent
