// Ordering of state pairs by (C, N, E) and the 14-class sign taxonomy.
//
// Delta = f(second) - f(first) for f = C, N, E. Each of the 27 sign patterns
// is identified with its negation (swapping the two states), which leaves
// 13 pairs plus the all-zero pattern.

#ifndef QENT_ORDERING_HPP
#define QENT_ORDERING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qent/families.hpp"
#include "qent/ree.hpp"

namespace qent {

using Delta = std::array<double, 3>;
using SignPattern = std::array<int, 3>;

/// Sign-pattern tolerances: analytic pairs and pairs involving numerical REE.
inline constexpr double kAnalyticTol = 1e-9;
inline constexpr double kNumericTol = 2e-3;

struct OrderingVerdict {
  Delta delta{};
  SignPattern signs{};
  int class_id = 0;
  /// True when the canonical representative is reached by swapping the states.
  bool flipped = false;
  double tol = 0.0;
};

/// Canonical (s_C, s_N, s_E) of class 1..14.
const SignPattern& canonical_pattern(int class_id);

SignPattern sign_pattern(const Delta& delta, double tol);

/// Throws Error for an unmappable pattern, which cannot happen for entries in {-1, 0, 1}.
OrderingVerdict classify_delta(const Delta& delta, double tol);

/// A state optionally tagged with the analytic family it was built from.
struct TaggedState {
  DensityMatrix state;
  std::optional<StateFamily> family;

  static TaggedState from_family(const StateFamily& f) { return {build(f), f}; }
};

struct DeltaResult {
  Delta delta{};
  /// False when an REE solve hit max_outer_iters; delta is still filled in.
  bool converged = true;
  /// True when E came from the closed forms of both families.
  bool analytic = false;
};

/// Numerical C, N and REE for both states.
DeltaResult delta_triple(const DensityMatrix& first, const DensityMatrix& second, const ReeConfig& cfg = {});

/// Uses the closed forms when both states carry a family, else the numerical route.
DeltaResult delta_triple(const TaggedState& first, const TaggedState& second, const ReeConfig& cfg = {});

OrderingVerdict classify_pair(const DensityMatrix& first, const DensityMatrix& second, double tol,
                              const ReeConfig& cfg = {});

struct CatalogEntry {
  int class_id;
  std::string label;
  StateFamily first;
  StateFamily second;
  /// Delta printed for this example, when one is given.
  std::optional<Delta> printed_delta;
};

/// Worked examples for the realized classes (1-10, 14), including a second
/// class-2 pair, and the Bell-diagonal class-5 pair with different CHSH values.
std::vector<CatalogEntry> example_catalog();

/// Classes with no known witness.
std::vector<int> unrealized_classes();

}  // namespace qent

#endif  // QENT_ORDERING_HPP
