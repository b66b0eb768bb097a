// qent: command-line front end for the two-qubit entanglement library.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qent/families.hpp"
#include "qent/measures.hpp"
#include "qent/ordering.hpp"
#include "qent/ree.hpp"
#include "qent/sampling.hpp"
#include "qent/state_io.hpp"

using namespace qent;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kValidation = 3, kNoConvergence = 4 };

constexpr double kReproTol = 2e-3;

// Output is collected first and written once the command has finished, so a
// failed command never leaves a truncated file behind.
void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string fmt(double v) { return format_number(v); }

std::string fmt_delta(const Delta& d) {
  return "[" + fmt(d[0]) + ", " + fmt(d[1]) + ", " + fmt(d[2]) + "]";
}

std::string fmt_signs(const SignPattern& s) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) out += std::string(i ? "," : "") + (s[i] > 0 ? "+" : s[i] < 0 ? "-" : "0");
  return out + ")";
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::string in;
  bool ree = false;
  bool chsh = false;
  std::string format = "text";
  std::string out;
};

int cmd_measure(const MeasureArgs& a) {
  const TaggedState st = resolve_state(a.in);
  const DensityMatrix& rho = st.state;
  std::optional<ReeResult> ree;
  if (a.ree) ree = ree_solve(rho);

  std::ostringstream text;
  if (a.format == "csv") {
    std::vector<std::string> header{"C", "N"};
    if (ree) header.push_back("E");
    if (a.chsh) header.push_back("M");
    CsvWriter csv(text, header);
    csv << concurrence(rho) << negativity(rho);
    if (ree) csv << ree->value;
    if (a.chsh) csv << chsh_m(rho);
    csv.end_row();
  } else {
    text << "C: " << fmt(concurrence(rho)) << "\n";
    text << "N: " << fmt(negativity(rho)) << "\n";
    if (ree) {
      text << "E: " << fmt(ree->value) << "\n";
      text << "ree_iterations: " << ree->iterations << "\n";
      text << "ree_step_residual: " << fmt(ree->final_step_residual) << "\n";
      text << "ree_converged: " << (ree->converged ? "true" : "false") << "\n";
    }
    if (a.chsh) {
      text << "M: " << fmt(chsh_m(rho)) << "\n";
      text << "max_bell_value: " << fmt(max_bell_value(rho)) << "\n";
    }
  }
  emit(text.str(), a.out);
  if (ree && !ree->converged) {
    std::cerr << "qent: REE solver did not converge\n";
    return kNoConvergence;
  }
  return kOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string name;
  std::vector<std::string> params;
  std::string emit_state;
  bool check_ree = false;
  std::string out;
};

int cmd_family(const FamilyArgs& a) {
  const StateFamily f = make_family(a.name, parse_family_params(a.params));
  check_family(f);
  const MeasureTriple m = analytic_measures(f);
  const DensityMatrix rho = build(f);

  std::ostringstream text;
  text << "family: " << describe(f) << "\n";
  text << "C: " << fmt(m.C) << "\n";
  text << "N: " << fmt(m.N) << "\n";
  text << "E: " << fmt(m.E) << "\n";
  int code = kOk;
  if (a.check_ree) {
    const ReeResult r = ree_solve(rho);
    text << "E_numeric: " << fmt(r.value) << "\n";
    text << "E_difference: " << fmt(r.value - m.E) << "\n";
    if (!r.converged) code = kNoConvergence;
  }
  if (!a.emit_state.empty()) write_state_file(a.emit_state, rho);
  emit(text.str(), a.out);
  return code;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  long long n = 0;
  std::uint64_t seed = 0;
  int streams = 1;
  bool with_ree = false;
  std::optional<double> min_concurrence;
  std::string out;
};

int cmd_sample(const SampleArgs& a) {
  SampleOptions opts;
  opts.with_ree = a.with_ree;
  opts.min_concurrence = a.min_concurrence;
  const std::vector<SampleRecord> recs = sample_records(a.n, a.seed, a.streams, opts);

  std::ostringstream text;
  std::vector<std::string> header{"seed", "index", "C", "N"};
  if (a.with_ree) header.push_back("E");
  header.insert(header.end(), {"M", "entangled"});
  CsvWriter csv(text, header);
  for (const SampleRecord& r : recs) {
    csv << r.seed << r.index << r.C << r.N;
    if (a.with_ree) csv << *r.E;
    csv << *r.M << r.entangled;
    csv.end_row();
  }
  emit(text.str(), a.out);
  return kOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string a;
  std::string b;
  std::optional<double> tol;
  std::string out;
};

int cmd_classify(const ClassifyArgs& args) {
  const TaggedState a = resolve_state(args.a);
  const TaggedState b = resolve_state(args.b);
  const DeltaResult d = delta_triple(a, b);
  const double tol = args.tol.value_or(d.analytic ? kAnalyticTol : kNumericTol);
  const OrderingVerdict v = classify_delta(d.delta, tol);

  std::ostringstream text;
  text << "delta: " << fmt_delta(v.delta) << "\n";
  text << "signs: " << fmt_signs(v.signs) << "\n";
  text << "class: " << v.class_id << "\n";
  text << "flipped: " << (v.flipped ? "true" : "false") << "\n";
  text << "tol: " << fmt(tol) << "\n";
  text << "route: " << (d.analytic ? "analytic" : "numeric") << "\n";
  emit(text.str(), args.out);
  if (!d.converged) {
    std::cerr << "qent: REE solver did not converge\n";
    return kNoConvergence;
  }
  return kOk;
}

// ---------------------------------------------------------------- boundary

int cmd_boundary(const std::string& curve_name, int grid, const std::string& out) {
  const BoundaryCurve curve = boundary_curve(parse_curve_kind(curve_name), grid);
  const bool has_e = curve.kind != CurveKind::VerstraeteLower;
  std::ostringstream text;
  CsvWriter csv(text, has_e ? std::vector<std::string>{"C", "N", "E"} : std::vector<std::string>{"C", "N"});
  for (const CurvePoint& p : curve.samples) {
    csv << p.C << p.N;
    if (has_e) csv << *p.E;
    csv.end_row();
  }
  emit(text.str(), out);
  return kOk;
}

// ---------------------------------------------------------------- constants

int cmd_constants() {
  const double n0 = find_n0();
  const double n0_residual = entanglement_of_formation(n0) -
                             closed_form::horodecki_ree(closed_form::horodecki_concurrence(n0));
  std::cout << "N0: " << format_number(n0) << "  residual " << format_number(n0_residual, 3) << "\n";

  const auto report = [](const char* label, FamilyKind kind) {
    const double c = find_c_for_e(kind, 0.5);
    double e = 0.0;
    switch (kind) {
      case FamilyKind::Horodecki: e = closed_form::horodecki_ree(c); break;
      case FamilyKind::Pure: e = entanglement_of_formation(c); break;
      default: e = closed_form::bell_diagonal_ree(c); break;
    }
    std::cout << label << format_number(c) << "  residual " << format_number(e - 0.5, 3) << "\n";
  };
  report("C0 (Horodecki, E = 0.5): ", FamilyKind::Horodecki);
  report("pure C at E = 0.5: ", FamilyKind::Pure);
  report("Bell-diagonal C at E = 0.5: ", FamilyKind::BellDiagonal);
  return kOk;
}

// ---------------------------------------------------------------- repro

int cmd_repro() {
  const std::vector<CatalogEntry> catalog = example_catalog();
  int passed = 0;
  std::vector<std::string> failures;
  std::cout << std::left << std::setw(6) << "class" << std::setw(30) << "expected" << std::setw(36) << "computed"
            << "result\n";
  for (const CatalogEntry& e : catalog) {
    const TaggedState first = TaggedState::from_family(e.first);
    const TaggedState second = TaggedState::from_family(e.second);
    const Delta expected = e.printed_delta ? *e.printed_delta : delta_triple(first, second).delta;
    const DeltaResult got = delta_triple(first.state, second.state);
    const OrderingVerdict v = classify_delta(got.delta, kNumericTol);

    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(got.delta[i] - expected[i]));
    const bool ok = worst <= kReproTol && v.class_id == e.class_id && got.converged;
    if (ok) ++passed;

    std::ostringstream exp, cmp;
    exp << std::fixed << std::setprecision(3) << "[" << expected[0] << ", " << expected[1] << ", " << expected[2]
        << "]";
    cmp << std::fixed << std::setprecision(4) << "[" << got.delta[0] << ", " << got.delta[1] << ", "
        << got.delta[2] << "]";
    std::cout << std::setw(6) << e.class_id << std::setw(30) << exp.str() << std::setw(36) << cmp.str()
              << (ok ? "pass" : "FAIL") << "\n";
    if (!ok)
      failures.push_back("class " + std::to_string(e.class_id) + " (" + e.label + "): max deviation " +
                         format_number(worst, 3) + ", classified as " + std::to_string(v.class_id));
  }
  for (const CatalogEntry& e : catalog) {
    if (e.class_id != 5) continue;
    std::cout << "class 5 CHSH: M = " << format_number(chsh_m(build(e.first)), 6) << " vs "
              << format_number(chsh_m(build(e.second)), 6) << "\n";
  }
  std::cout << passed << "/" << catalog.size() << " rows pass\n";
  for (const std::string& f : failures) std::cerr << "qent: mismatch in " << f << "\n";
  return failures.empty() ? kOk : kMismatch;
}

// ---------------------------------------------------------------- pviol

struct PviolArgs {
  long long n_pairs = 0;
  std::string pairs = "CN";
  std::uint64_t seed = 0;
  int streams = 1;
  double tol = 1e-9;
  bool all_pairs = false;
};

int cmd_pviol(const PviolArgs& a) {
  PviolOptions opts;
  opts.pair = parse_measure_pair(a.pairs);
  opts.tol = a.tol;
  opts.entangled_only = !a.all_pairs;
  if (opts.pair != MeasurePair::CN)
    std::cerr << "qent: " << a.pairs << " needs two REE solves per pair; expect a long run\n";
  const Estimate e = estimate_p_viol(a.n_pairs, a.seed, a.streams, opts);
  std::cout << "P_viol(" << a.pairs << "): " << format_number(e.value) << " +- " << format_number(e.std_error, 3)
            << "  (" << e.successes << "/" << e.trials << ", "
            << (opts.entangled_only ? "entangled pairs" : "all pairs") << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement measures: concurrence, negativity, REE and CHSH"};
  app.require_subcommand(1);

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Measures of a state file or family spec");
  m->add_option("--in", measure.in, "State file or family spec (name:key=val,...)")->required();
  m->add_flag("--ree", measure.ree, "Also solve for the relative entropy of entanglement");
  m->add_flag("--chsh", measure.chsh, "Also report the CHSH parameter M and 2 sqrt(M)");
  m->add_option("--format", measure.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  m->add_option("--out", measure.out, "Output path (default stdout)");

  FamilyArgs fam;
  auto* f = app.add_subcommand("family", "Closed-form measures of an analytic family");
  f->add_option("--name", fam.name, "pure, horodecki, bell, werner, x, y or z")->required();
  f->add_option("--param", fam.params, "key=value, e.g. C=0.6 or l=0.75,0.25,0,0");
  f->add_option("--emit-state", fam.emit_state, "Write the state to this file");
  f->add_flag("--check-ree", fam.check_ree, "Cross-check E against the numerical solver");
  f->add_option("--out", fam.out, "Output path (default stdout)");

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "CSV of random states from the product measure");
  s->add_option("--n", sample.n, "Number of accepted states")->required()->check(CLI::PositiveNumber);
  s->add_option("--seed", sample.seed, "Random seed");
  s->add_option("--streams", sample.streams, "Worker streams")->check(CLI::PositiveNumber);
  s->add_flag("--with-ree", sample.with_ree, "Add the REE column");
  s->add_option("--min-concurrence", sample.min_concurrence, "Keep only states with C above this value");
  s->add_option("--out", sample.out, "Output CSV (default stdout)");

  ClassifyArgs cls;
  auto* c = app.add_subcommand("classify", "Sign class of the (C, N, E) differences of two states");
  c->add_option("--a", cls.a, "First state: file or family spec")->required();
  c->add_option("--b", cls.b, "Second state: file or family spec")->required();
  c->add_option("--tol", cls.tol, "Zero tolerance (default 1e-9 analytic, 2e-3 numeric)")
      ->check(CLI::PositiveNumber);
  c->add_option("--out", cls.out, "Output path (default stdout)");

  std::string curve;
  int grid = 101;
  std::string boundary_out;
  auto* b = app.add_subcommand("boundary", "CSV of a boundary curve in the (C, N, E) planes");
  b->add_option("--curve", curve, "H, P, B, X or VL")->required();
  b->add_option("--grid", grid, "Number of C values on [0, 1]");
  b->add_option("--out", boundary_out, "Output CSV (default stdout)");

  auto* k = app.add_subcommand("constants", "Root-found constants N0, C0 and the E = 0.5 concurrences");
  auto* r = app.add_subcommand("repro", "Reproduce the worked example table");

  PviolArgs pv;
  auto* p = app.add_subcommand("pviol", "Probability that two measures order a random pair oppositely");
  p->add_option("--n-pairs", pv.n_pairs, "Number of pairs")->required()->check(CLI::PositiveNumber);
  p->add_option("--pairs", pv.pairs, "CN, CE or NE")->check(CLI::IsMember({"CN", "CE", "NE"}));
  p->add_option("--seed", pv.seed, "Random seed");
  p->add_option("--streams", pv.streams, "Worker streams")->check(CLI::PositiveNumber);
  p->add_option("--tol", pv.tol, "Differences below this count as ties")->check(CLI::NonNegativeNumber);
  auto* all = p->add_flag("--all-pairs", pv.all_pairs, "Draw from all states, separable ones included");
  p->add_flag("--entangled-only", "Draw only entangled states (default)")->excludes(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*m) return cmd_measure(measure);
    if (*f) return cmd_family(fam);
    if (*s) return cmd_sample(sample);
    if (*c) return cmd_classify(cls);
    if (*b) return cmd_boundary(curve, grid, boundary_out);
    if (*k) return cmd_constants();
    if (*r) return cmd_repro();
    if (*p) return cmd_pviol(pv);
  } catch (const ParseError& e) {
    std::cerr << "qent: " << e.what() << "\n";
    return kParse;
  } catch (const FamilyConstraint& e) {
    std::cerr << "qent: invalid " << e.parameter() << ": " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "qent: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
