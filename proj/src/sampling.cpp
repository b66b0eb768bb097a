#include "qent/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "qent/measures.hpp"

namespace qent {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed_seq(seed, stream);
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index), engine_(make_engine(seed, stream_index)) {}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::uniform_open_low() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

double RngStream::standard_normal() {
  if (spare_normal_) {
    const double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  // Box-Muller.
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::complex<double> RngStream::complex_normal() {
  const double re = standard_normal();
  const double im = standard_normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Eigen::MatrixXcd haar_unitary(int dim, RngStream& rng) {
  if (dim != 2 && dim != 4) throw InvalidArgument("haar_unitary: dim must be 2 or 4");
  Eigen::MatrixXcd z(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    // Q R = Q D D^* R with D = diag(r_jj / |r_jj|) makes the triangular factor's diagonal positive.
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Eigen::VectorXd random_simplex(int dim, RngStream& rng) {
  if (dim < 2) throw InvalidArgument("random_simplex: dim must be at least 2");
  Eigen::VectorXd p(dim);
  for (int i = 0; i < dim; ++i) p(i) = -std::log(rng.uniform_open_low());
  return p / p.sum();
}

DensityMatrix random_density(RngStream& rng) {
  const Eigen::VectorXd p = random_simplex(4, rng);
  const Mat4 u = haar_unitary(4, rng);
  return DensityMatrix::trusted(u * p.cast<std::complex<double>>().asDiagonal() * u.adjoint());
}

PureState random_pure(RngStream& rng) {
  const Mat4 u = haar_unitary(4, rng);
  return PureState::normalized(u.col(0));
}

namespace {

constexpr double kEntangledThreshold = 1e-12;

Estimate finish(long long successes, long long trials) {
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  if (trials > 0) {
    e.value = static_cast<double>(successes) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
  }
  return e;
}

// Runs fn(stream, share) on `streams` threads and sums the returned counts.
template <typename Fn>
Estimate fan_out(long long n, int streams, Fn&& fn) {
  if (streams < 1) throw InvalidArgument("streams must be at least 1");
  std::vector<long long> hits(static_cast<std::size_t>(streams), 0);
  std::vector<std::thread> workers;
  for (int s = 0; s < streams; ++s) {
    const long long share = n / streams + (s < n % streams ? 1 : 0);
    workers.emplace_back([&, s, share] { hits[static_cast<std::size_t>(s)] = fn(s, share); });
  }
  for (auto& w : workers) w.join();
  long long total = 0;
  for (long long h : hits) total += h;
  return finish(total, n);
}

long long count_entangled(long long n, RngStream& rng) {
  long long hits = 0;
  for (long long i = 0; i < n; ++i)
    if (negativity(random_density(rng)) > kEntangledThreshold) ++hits;
  return hits;
}

DensityMatrix draw_for_pviol(RngStream& rng, bool entangled_only) {
  for (;;) {
    DensityMatrix rho = random_density(rng);
    if (!entangled_only || negativity(rho) > kEntangledThreshold) return rho;
  }
}

struct PairValues {
  double first;
  double second;
};

PairValues measure_values(const DensityMatrix& rho, const PviolOptions& opts) {
  switch (opts.pair) {
    case MeasurePair::CN: return {concurrence(rho), negativity(rho)};
    case MeasurePair::CE: return {concurrence(rho), ree_solve(rho, opts.ree).value};
    case MeasurePair::NE: return {negativity(rho), ree_solve(rho, opts.ree).value};
  }
  return {0.0, 0.0};
}

long long count_violations(long long n_pairs, RngStream& rng, const PviolOptions& opts) {
  long long hits = 0;
  for (long long i = 0; i < n_pairs; ++i) {
    const DensityMatrix a = draw_for_pviol(rng, opts.entangled_only);
    const DensityMatrix b = draw_for_pviol(rng, opts.entangled_only);
    const PairValues va = measure_values(a, opts);
    const PairValues vb = measure_values(b, opts);
    if (opposite_order(vb.first - va.first, vb.second - va.second, opts.tol)) ++hits;
  }
  return hits;
}

}  // namespace

Estimate estimate_p_ent(long long n, RngStream& rng) {
  if (n < 1) throw InvalidArgument("estimate_p_ent: n must be at least 1");
  return finish(count_entangled(n, rng), n);
}

Estimate estimate_p_ent(long long n, std::uint64_t seed, int streams) {
  if (n < 1) throw InvalidArgument("estimate_p_ent: n must be at least 1");
  return fan_out(n, streams, [&](int s, long long share) {
    RngStream rng(seed, static_cast<std::uint64_t>(s));
    return count_entangled(share, rng);
  });
}

MeasurePair parse_measure_pair(const std::string& name) {
  if (name == "CN") return MeasurePair::CN;
  if (name == "CE") return MeasurePair::CE;
  if (name == "NE") return MeasurePair::NE;
  throw InvalidArgument("unknown measure pair '" + name + "' (expected CN, CE or NE)");
}

bool opposite_order(double d1, double d2, double tol) {
  const auto sign = [tol](double d) { return std::abs(d) <= tol ? 0 : (d > 0 ? 1 : -1); };
  return sign(d1) * sign(d2) == -1;
}

Estimate estimate_p_viol(long long n_pairs, RngStream& rng, const PviolOptions& opts) {
  if (n_pairs < 1) throw InvalidArgument("estimate_p_viol: n_pairs must be at least 1");
  return finish(count_violations(n_pairs, rng, opts), n_pairs);
}

Estimate estimate_p_viol(long long n_pairs, std::uint64_t seed, int streams, const PviolOptions& opts) {
  if (n_pairs < 1) throw InvalidArgument("estimate_p_viol: n_pairs must be at least 1");
  return fan_out(n_pairs, streams, [&](int s, long long share) {
    RngStream rng(seed, static_cast<std::uint64_t>(s));
    return count_violations(share, rng, opts);
  });
}

std::vector<SampleRecord> sample_records(long long n, std::uint64_t seed, int streams,
                                         const SampleOptions& opts) {
  if (n < 1) throw InvalidArgument("sample_records: n must be at least 1");
  if (streams < 1) throw InvalidArgument("sample_records: streams must be at least 1");
  std::vector<SampleRecord> out(static_cast<std::size_t>(n));
  std::vector<std::thread> workers;
  for (int s = 0; s < streams; ++s) {
    workers.emplace_back([&, s] {
      RngStream rng(seed, static_cast<std::uint64_t>(s));
      for (long long i = s; i < n; i += streams) {
        for (;;) {
          const DensityMatrix rho = random_density(rng);
          SampleRecord rec;
          rec.seed = seed;
          rec.index = i;
          rec.C = concurrence(rho);
          if (opts.min_concurrence && !(rec.C > *opts.min_concurrence)) continue;
          rec.N = negativity(rho);
          rec.entangled = rec.N > kEntangledThreshold;
          if (opts.with_ree) rec.E = ree_solve(rho, opts.ree).value;
          if (opts.with_chsh) rec.M = chsh_m(rho);
          out[static_cast<std::size_t>(i)] = rec;
          break;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace qent
