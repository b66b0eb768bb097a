// Random two-qubit states from the product measure: Haar-random eigenbasis
// times a uniformly distributed spectrum on the probability simplex.

#ifndef QENT_SAMPLING_HPP
#define QENT_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qent/linalg.hpp"
#include "qent/ree.hpp"

namespace qent {

/// Reproducible random source. The same (seed, stream_index) yields the same
/// bit sequence on every conforming platform: mt19937_64 seeded through
/// seed_seq, with hand-written uniform and Gaussian transforms (the standard
/// distributions are implementation-defined).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open_low();
  double standard_normal();
  std::complex<double> complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// Haar unitary via complex Ginibre matrix + QR with the R-diagonal phase removed.
Eigen::MatrixXcd haar_unitary(int dim, RngStream& rng);

/// Uniform point on the probability simplex (normalized exponentials).
Eigen::VectorXd random_simplex(int dim, RngStream& rng);

DensityMatrix random_density(RngStream& rng);

PureState random_pure(RngStream& rng);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  long long successes = 0;
  long long trials = 0;
};

/// Fraction of random states with negativity above 1e-12.
Estimate estimate_p_ent(long long n, RngStream& rng);
/// Same estimate split over `streams` workers with stream indices 0..streams-1.
Estimate estimate_p_ent(long long n, std::uint64_t seed, int streams);

enum class MeasurePair { CN, CE, NE };
MeasurePair parse_measure_pair(const std::string& name);

struct PviolOptions {
  MeasurePair pair = MeasurePair::CN;
  /// Differences with |delta| <= tol count as ties.
  double tol = 1e-9;
  /// Draw both states from the entangled part of the ensemble.
  bool entangled_only = true;
  ReeConfig ree{};
};

/// True when the two measure differences have strictly opposite signs.
bool opposite_order(double d1, double d2, double tol);

/// Fraction of random state pairs ordered oppositely by the two measures.
Estimate estimate_p_viol(long long n_pairs, RngStream& rng, const PviolOptions& opts = {});
Estimate estimate_p_viol(long long n_pairs, std::uint64_t seed, int streams, const PviolOptions& opts = {});

struct SampleRecord {
  std::uint64_t seed = 0;
  long long index = 0;
  double C = 0.0;
  double N = 0.0;
  std::optional<double> E;
  std::optional<double> M;
  bool entangled = false;
};

struct SampleOptions {
  bool with_ree = false;
  bool with_chsh = true;
  /// Keep only draws with C strictly above this value.
  std::optional<double> min_concurrence;
  ReeConfig ree{};
};

/// n accepted records. Record i comes from stream i % streams, so the output
/// depends only on (seed, streams, options).
std::vector<SampleRecord> sample_records(long long n, std::uint64_t seed, int streams,
                                         const SampleOptions& opts = {});

}  // namespace qent

#endif  // QENT_SAMPLING_HPP
