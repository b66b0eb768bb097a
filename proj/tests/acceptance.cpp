// Acceptance suite: one PASS/FAIL line per criterion, with detail lines
// indented below. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qent/families.hpp"
#include "qent/measures.hpp"
#include "qent/ordering.hpp"
#include "qent/ree.hpp"
#include "qent/sampling.hpp"

using namespace qent;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { details.push_back("info  " + what); }
};

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Every solve goes through here so the descent contract can be checked on
// all of them at the end.
struct SolveLog {
  long long runs = 0;
  long long non_monotone = 0;
  long long non_converged = 0;
};
SolveLog g_log;

ReeResult solve(const DensityMatrix& rho) {
  ReeResult r = ree_solve(rho);
  ++g_log.runs;
  if (!r.converged) ++g_log.non_converged;
  for (std::size_t i = 1; i < r.objective_trace.size(); ++i)
    if (r.objective_trace[i] > r.objective_trace[i - 1]) {
      ++g_log.non_monotone;
      break;
    }
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1

Outcome family_oracles() {
  Outcome out;
  const std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

  struct Case {
    std::string name;
    std::vector<StateFamily> members;
  };
  std::vector<Case> cases(6);
  cases[0].name = "Horodecki";
  cases[1].name = "BellDiag";
  cases[2].name = "Werner";
  cases[3].name = "X";
  cases[4].name = "Y";
  cases[5].name = "Z";
  for (double c : grid) {
    cases[0].members.push_back(family::Horodecki{c});
    cases[1].members.push_back(family::BellDiagonal{{(1 + c) / 2, (1 - c) / 4, (1 - c) / 8, (1 - c) / 8}});
    cases[2].members.push_back(family::Werner{c});
    cases[3].members.push_back(family::X{c});
    cases[4].members.push_back(family::Y{0.3, c * 2 * std::sqrt(0.21)});
  }
  for (double n : {0.2, 0.5, 0.8})
    for (double t : {0.0, 0.5, 1.0})
      cases[5].members.push_back(family::Z{n + t * (closed_form::z_max_concurrence(n) - n), n});

  double worst_z_corrected = 0.0;
  for (const Case& fc : cases) {
    double err_c = 0.0, err_n = 0.0, err_e = 0.0;
    for (const StateFamily& f : fc.members) {
      const DensityMatrix rho = build(f);
      const MeasureTriple a = analytic_measures(f);
      const double e_num = solve(rho).value;
      err_c = std::max(err_c, std::abs(concurrence(rho) - a.C));
      err_n = std::max(err_n, std::abs(negativity(rho) - a.N));
      if (const auto* z = std::get_if<family::Z>(&f)) {
        // The criterion names the published Z formula; its printed form is
        // evaluated literally. The derived form is reported alongside.
        err_e = std::max(err_e, std::abs(e_num - closed_form::z_ree_printed(z->C, z->N)));
        worst_z_corrected = std::max(worst_z_corrected, std::abs(e_num - a.E));
      } else {
        err_e = std::max(err_e, std::abs(e_num - a.E));
      }
    }
    out.require(err_c <= 1e-10 && err_n <= 1e-10,
                fc.name + ": max |dC| " + num(err_c) + ", max |dN| " + num(err_n) + " (tol 1e-10, " +
                    std::to_string(fc.members.size()) + " points)");
    out.require(err_e <= 1e-4, fc.name + ": max |E_solver - E_closed| " + num(err_e) + " (tol 1e-4)");
  }
  out.note("Z against the re-derived closed form: max |dE| " + num(worst_z_corrected) +
           (worst_z_corrected <= 1e-4 ? " (within 1e-4)" : " (outside 1e-4)"));
  return out;
}

// ---------------------------------------------------------------- 2

Outcome reproduction() {
  Outcome out;
  for (const CatalogEntry& e : example_catalog()) {
    const TaggedState a = TaggedState::from_family(e.first);
    const TaggedState b = TaggedState::from_family(e.second);
    const Delta expected = e.printed_delta ? *e.printed_delta : delta_triple(a, b).delta;
    const ReeResult ea = solve(a.state);
    const ReeResult eb = solve(b.state);
    const Delta got{concurrence(b.state) - concurrence(a.state), negativity(b.state) - negativity(a.state),
                    eb.value - ea.value};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(got[i] - expected[i]));
    const OrderingVerdict v = classify_delta(got, kNumericTol);
    out.require(worst <= 2e-3 && v.class_id == e.class_id,
                "class " + std::to_string(e.class_id) + ": expected [" + num(expected[0], 3) + ", " +
                    num(expected[1], 3) + ", " + num(expected[2], 3) + "], computed [" + num(got[0]) + ", " +
                    num(got[1]) + ", " + num(got[2]) + "], max dev " + num(worst, 2) + ", class " +
                    std::to_string(v.class_id) + (v.flipped ? " (flipped)" : ""));
  }
  return out;
}

// ---------------------------------------------------------------- 3

Outcome constants() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const double n0 = find_n0();
  const double c0 = find_c_for_e(FamilyKind::Horodecki, 0.5);
  const double cp = find_c_for_e(FamilyKind::Pure, 0.5);
  const double cb = find_c_for_e(FamilyKind::BellDiagonal, 0.5);
  const double elapsed = seconds_since(t0);
  out.require(std::abs(n0 - 0.3770) <= 5e-4, "N0 = " + num(n0, 10) + " (0.3770 +- 5e-4)");
  out.require(std::abs(c0 - 0.846) <= 5e-4, "C0 = " + num(c0, 10) + " (0.846 +- 5e-4)");
  out.require(std::abs(cp - 0.625) <= 5e-4, "pure C at E=1/2 = " + num(cp, 10) + " (0.625 +- 5e-4)");
  out.require(std::abs(cb - 0.779) <= 5e-4, "Bell-diagonal C at E=1/2 = " + num(cb, 10) + " (0.779 +- 5e-4)");
  // The published digits are truncations, so also report the truncation check.
  const bool truncated = std::floor(cp * 1000) == 625 && std::floor(cb * 1000) == 779;
  out.note(std::string("truncated to three digits the values read 0.625 and 0.779: ") + (truncated ? "yes" : "no"));
  out.require(elapsed < 1.0, "runtime " + num(elapsed, 3) + " s (< 1 s)");
  return out;
}

// ---------------------------------------------------------------- 4

Outcome monte_carlo() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const Estimate ent = estimate_p_ent(100000, 1, 4);
  const Estimate viol = estimate_p_viol(20000, 1, 4);
  const double elapsed = seconds_since(t0);
  out.require(ent.value >= 0.355 && ent.value <= 0.375,
              "P_ent = " + num(ent.value) + " +- " + num(ent.std_error, 2) + " over 1e5 states ([0.355, 0.375])");
  out.require(viol.value >= 0.037 && viol.value <= 0.057,
              "P_viol(C,N) = " + num(viol.value) + " +- " + num(viol.std_error, 2) +
                  " over 2e4 entangled pairs ([0.037, 0.057])");
  out.require(elapsed < 120.0, "runtime " + num(elapsed, 3) + " s (< 120 s)");
  return out;
}

// ---------------------------------------------------------------- 5

Outcome bounds() {
  Outcome out;
  RngStream rng(5);
  long long order = 0, lower = 0, negatives = 0;
  for (int i = 0; i < 10000; ++i) {
    const DensityMatrix rho = random_density(rng);
    const double c = concurrence(rho);
    const double n = negativity(rho);
    if (n < 0.0 || n > c) ++order;
    if (n < closed_form::horodecki_negativity(c) - 1e-9) ++lower;
    const auto pt = hermitian_eig(partial_transpose(rho.matrix()));
    int count = 0;
    for (int k = 0; k < 4; ++k)
      if (pt.values(k) < -1e-12) ++count;
    if (count > 1) ++negatives;
  }
  out.require(order == 0, "0 <= N <= C violated " + std::to_string(order) + " times in 1e4 states");
  out.require(lower == 0, "N below the Horodecki curve " + std::to_string(lower) + " times");
  out.require(negatives == 0, "partial transpose with >1 negative eigenvalue " + std::to_string(negatives) + " times");
  return out;
}

// ---------------------------------------------------------------- 6

Outcome pure_states() {
  Outcome out;
  RngStream rng(6);
  double err_cn = 0.0, err_m = 0.0, err_e = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_pure(rng).density();
    const double c = concurrence(rho);
    err_cn = std::max(err_cn, std::abs(c - negativity(rho)));
    err_m = std::max(err_m, std::abs(std::sqrt(std::max(0.0, chsh_m(rho) - 1.0)) - c));
    err_e = std::max(err_e, std::abs(solve(rho).value - entanglement_of_formation(c)));
  }
  out.require(err_cn <= 1e-10, "max |C - N| " + num(err_cn) + " over 1e3 pure states (tol 1e-10)");
  out.require(err_m <= 1e-8, "max |sqrt(M - 1) - C| " + num(err_m) + " (tol 1e-8)");
  out.require(err_e <= 1e-4, "max |E_solver - E_form(C)| " + num(err_e) + " (tol 1e-4)");
  return out;
}

// ---------------------------------------------------------------- 7

Outcome chsh() {
  Outcome out;
  RngStream rng(7);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::VectorXd p = random_simplex(4, rng);
    const std::array<double, 4> l{p(0), p(1), p(2), p(3)};
    worst = std::max(worst, std::abs(closed_form::bell_diagonal_chsh_m(l) - chsh_m(build(family::BellDiagonal{l}))));
  }
  out.require(worst <= 1e-10, "max |M_closed - M_T| " + num(worst) + " over 1e3 Bell-diagonal states (tol 1e-10)");

  const DensityMatrix a = build(family::BellDiagonal{{0.7, 0.3, 0, 0}});
  const DensityMatrix b = build(family::BellDiagonal{{0.7, 0.1, 0.1, 0.1}});
  const double ma = chsh_m(a), mb = chsh_m(b);
  out.require(std::abs(ma - 1.16) <= 1e-10 && std::abs(mb - 0.72) <= 1e-10,
              "class-5 pair M = " + num(ma, 10) + " / " + num(mb, 10) + " (1.16 / 0.72)");
  const double dc = std::abs(concurrence(a) - concurrence(b));
  const double dn = std::abs(negativity(a) - negativity(b));
  const double de = std::abs(solve(a).value - solve(b).value);
  out.require(dc <= 1e-10 && dn <= 1e-10 && de <= 1e-6,
              "class-5 pair |dC| " + num(dc) + ", |dN| " + num(dn) + ", |dE| " + num(de));
  return out;
}

// ---------------------------------------------------------------- 8

Outcome solver_contract() {
  Outcome out;
  const family::X x{0.5};
  const ReeResult r = solve(build(x));
  const double dist = frobenius_distance(r.closest_state.matrix(), closest_separable(x)->matrix());
  out.require(dist <= 1e-3, "closest state for X(C=0.5) at Frobenius distance " + num(dist) + " (tol 1e-3)");

  std::vector<DensityMatrix> separable;
  for (double c : {0.1, 0.5, 0.9}) separable.push_back(*closest_separable(family::X{c}));
  separable.push_back(*closest_separable(family::Y{0.3, 0.5}));
  separable.push_back(build(family::Werner{0.0}));
  separable.push_back(DensityMatrix::trusted(Mat4::Identity() / 4.0));
  RngStream rng(8);
  while (separable.size() < 106) {
    const DensityMatrix rho = random_density(rng);
    if (negativity(rho) == 0.0) separable.push_back(rho);
  }
  double worst = 0.0;
  for (const DensityMatrix& s : separable) worst = std::max(worst, solve(s).value);
  out.require(worst <= 1e-6, "max E over " + std::to_string(separable.size()) + " separable inputs " + num(worst) +
                                 " (tol 1e-6)");

  out.require(g_log.non_monotone == 0, "non-monotone objective traces: " + std::to_string(g_log.non_monotone) +
                                           " of " + std::to_string(g_log.runs) + " logged solves");
  out.note("solves hitting the iteration cap: " + std::to_string(g_log.non_converged));
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  // The solver-contract criterion runs last so it sees every logged solve.
  const std::vector<Criterion> criteria{
      {"AC1", "family closed forms vs numerics", family_oracles},
      {"AC2", "worked-example reproduction", reproduction},
      {"AC3", "constants", constants},
      {"AC4", "Monte Carlo statistics", monte_carlo},
      {"AC5", "bound invariants", bounds},
      {"AC6", "pure-state identities", pure_states},
      {"AC7", "CHSH consistency", chsh},
      {"AC8", "solver contract", solver_contract},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s  %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds_since(t0));
    for (const std::string& d : o.details) std::printf("    %s\n", d.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
