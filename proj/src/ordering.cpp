#include "qent/ordering.hpp"

#include <cmath>

#include "qent/measures.hpp"

namespace qent {

namespace {

constexpr std::array<SignPattern, 14> kPatterns{{
    {+1, +1, +1},  // 1
    {+1, -1, +1},  // 2
    {-1, +1, +1},  // 3
    {+1, +1, -1},  // 4
    {0, 0, 0},     // 5
    {+1, 0, +1},   // 6
    {0, +1, +1},   // 7
    {+1, +1, 0},   // 8
    {0, 0, +1},    // 9
    {+1, 0, 0},    // 10
    {0, +1, 0},    // 11
    {-1, 0, +1},   // 12
    {0, -1, +1},   // 13
    {+1, -1, 0},   // 14
}};

SignPattern negate(const SignPattern& s) { return {-s[0], -s[1], -s[2]}; }

}  // namespace

const SignPattern& canonical_pattern(int class_id) {
  if (class_id < 1 || class_id > 14) throw InvalidArgument("class id must be in 1..14");
  return kPatterns[static_cast<std::size_t>(class_id - 1)];
}

SignPattern sign_pattern(const Delta& delta, double tol) {
  SignPattern s{};
  for (int i = 0; i < 3; ++i) s[i] = std::abs(delta[i]) <= tol ? 0 : (delta[i] > 0 ? 1 : -1);
  return s;
}

OrderingVerdict classify_delta(const Delta& delta, double tol) {
  if (!(tol > 0)) throw InvalidArgument("classify: tolerance must be positive");
  OrderingVerdict v;
  v.delta = delta;
  v.tol = tol;
  v.signs = sign_pattern(delta, tol);
  for (int id = 1; id <= 14; ++id) {
    const SignPattern& p = kPatterns[static_cast<std::size_t>(id - 1)];
    if (p == v.signs) {
      v.class_id = id;
      return v;
    }
    if (p == negate(v.signs)) {
      v.class_id = id;
      v.flipped = true;
      return v;
    }
  }
  throw Error("classify: sign pattern has no class");
}

DeltaResult delta_triple(const DensityMatrix& first, const DensityMatrix& second, const ReeConfig& cfg) {
  const ReeResult e1 = ree_solve(first, cfg);
  const ReeResult e2 = ree_solve(second, cfg);
  DeltaResult out;
  out.delta = {concurrence(second) - concurrence(first), negativity(second) - negativity(first),
               e2.value - e1.value};
  out.converged = e1.converged && e2.converged;
  return out;
}

DeltaResult delta_triple(const TaggedState& first, const TaggedState& second, const ReeConfig& cfg) {
  if (first.family && second.family) {
    const MeasureTriple a = analytic_measures(*first.family);
    const MeasureTriple b = analytic_measures(*second.family);
    DeltaResult out;
    out.delta = {b.C - a.C, b.N - a.N, b.E - a.E};
    out.analytic = true;
    return out;
  }
  return delta_triple(first.state, second.state, cfg);
}

OrderingVerdict classify_pair(const DensityMatrix& first, const DensityMatrix& second, double tol,
                              const ReeConfig& cfg) {
  return classify_delta(delta_triple(first, second, cfg).delta, tol);
}

std::vector<CatalogEntry> example_catalog() {
  using closed_form::horodecki_concurrence;
  const double n0 = find_n0();
  const double c0 = find_c_for_e(FamilyKind::Horodecki, 0.5);
  const double c_pure = find_c_for_e(FamilyKind::Pure, 0.5);
  const double c_bell = find_c_for_e(FamilyKind::BellDiagonal, 0.5);
  const family::BellDiagonal bell_half = bell_with_concurrence(0.5);

  std::vector<CatalogEntry> out;
  out.push_back({1, "two Horodecki states, C = 0.3 and 0.6", family::Horodecki{0.3}, family::Horodecki{0.6},
                 std::nullopt});
  out.push_back({2, "Bell diagonal C = 0.5 vs Horodecki C = 0.6", bell_half, family::Horodecki{0.6},
                 Delta{0.1, -0.179, 0.003}});
  out.push_back({2, "Bell diagonal C = 0.5 vs Horodecki N = 0.4", bell_half, horodecki_with_negativity(0.4),
                 Delta{0.158, -0.1, 0.055}});
  out.push_back({3, "Horodecki N = N0 - 0.1 vs pure C = N0", horodecki_with_negativity(n0 - 0.1),
                 pure_with_concurrence(n0), Delta{-0.187, 0.1, 0.064}});
  out.push_back({4, "pure E = 1/2 vs Horodecki C = C0 - 0.02", pure_with_concurrence(c_pure),
                 family::Horodecki{c0 - 0.02}, Delta{0.200, 0.044, -0.037}});
  out.push_back({5, "Bell diagonal (0.7, 0.3, 0, 0) vs (0.7, 0.1, 0.1, 0.1)",
                 family::BellDiagonal{{0.7, 0.3, 0.0, 0.0}}, family::BellDiagonal{{0.7, 0.1, 0.1, 0.1}},
                 Delta{0.0, 0.0, 0.0}});
  out.push_back({6, "Bell diagonal vs Horodecki, both N = 1/2", bell_half, horodecki_with_negativity(0.5),
                 Delta{0.225, 0.0, 0.127}});
  // Printed as -Delta = [0, 0.293, 0.066].
  out.push_back({7, "Bell diagonal vs Horodecki, both C = 1/2", bell_half, family::Horodecki{0.5},
                 Delta{0.0, -0.293, -0.066}});
  out.push_back({8, "pure C = 0.625.. vs Horodecki C = C0 (equal E = 1/2)", pure_with_concurrence(c_pure),
                 family::Horodecki{c0}, Delta{0.220, 0.080, 0.0}});
  out.push_back({9, "Bell diagonal vs pure, both C = 1/2", bell_half, pure_with_concurrence(0.5),
                 Delta{0.0, 0.0, 0.189}});
  out.push_back({10, "pure vs Horodecki, both N = N0", pure_with_concurrence(n0),
                 family::Horodecki{horodecki_concurrence(n0)}, Delta{0.265, 0.0, 0.0}});
  out.push_back({14, "Bell diagonal C = 0.779.. vs Horodecki C = C0 (equal E = 1/2)",
                 bell_with_concurrence(c_bell), family::Horodecki{c0}, Delta{0.066, -0.074, 0.0}});
  return out;
}

std::vector<int> unrealized_classes() { return {11, 12, 13}; }

}  // namespace qent
