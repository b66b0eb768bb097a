#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qent/families.hpp"
#include "qent/measures.hpp"
#include "qent/sampling.hpp"

using namespace qent;
using namespace qent::testing;
using doctest::Approx;

namespace {

DensityMatrix product00() { return DensityMatrix::trusted(projector(basis_ket(0))); }

// U_A x U_B rho (U_A x U_B)^dagger
DensityMatrix local_rotation(const DensityMatrix& rho, RngStream& rng) {
  const Mat4 u = tensor_product<double>(haar_unitary(2, rng), haar_unitary(2, rng));
  return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

}  // namespace

TEST_CASE("concurrence") {
  CHECK(concurrence(build(family::Horodecki{0.6})) == Approx(0.6).epsilon(1e-12));
  CHECK(concurrence(product00()) == Approx(0.0));
  CHECK(concurrence(build(family::Werner{0.5})) == Approx(0.5).epsilon(1e-12));
  CHECK(concurrence(singlet()) == Approx(1.0));
  CHECK(concurrence(maximally_mixed()) == Approx(0.0));
  CHECK(concurrence(fixed_state()) == Approx(kOracleC).epsilon(1e-12));
}

TEST_CASE("concurrence spectrum is descending and nonnegative") {
  RngStream rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Real4 s = concurrence_spectrum(random_density(rng));
    for (int i = 0; i < 4; ++i) CHECK(s(i) >= 0.0);
    for (int i = 0; i < 3; ++i) CHECK(s(i) >= s(i + 1));
  }
}

TEST_CASE("negativity") {
  CHECK(negativity(singlet()) == Approx(1.0));
  CHECK(negativity(build(family::Horodecki{0.6})) == Approx(std::sqrt(0.52) - 0.4).epsilon(1e-12));
  CHECK(negativity(maximally_mixed()) == Approx(0.0));
  CHECK(negativity(fixed_state()) == Approx(kOracleN).epsilon(1e-12));
}

TEST_CASE("measures are invariant under local unitaries") {
  RngStream rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density(rng);
    const DensityMatrix rotated = local_rotation(rho, rng);
    CHECK(concurrence(rotated) == Approx(concurrence(rho)).epsilon(1e-9));
    CHECK(negativity(rotated) == Approx(negativity(rho)).epsilon(1e-9));
    CHECK(chsh_m(rotated) == Approx(chsh_m(rho)).epsilon(1e-9));
  }
}

TEST_CASE("negativity lies between the Horodecki curve and the concurrence") {
  RngStream rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const DensityMatrix rho = random_density(rng);
    const double c = concurrence(rho);
    const double n = negativity(rho);
    CHECK(n <= c + 1e-12);
    CHECK(n >= closed_form::horodecki_negativity(c) - 1e-9);
  }
}

TEST_CASE("entropies") {
  CHECK(binary_entropy(0.5) == Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.75) == Approx(0.811278124459).epsilon(1e-11));
  CHECK_THROWS_AS(binary_entropy(1.1), InvalidArgument);

  CHECK(ternary_entropy(1.0 / 3, 1.0 / 3) == Approx(std::log2(3.0)));
  CHECK(ternary_entropy(1.0, 0.0) == Approx(0.0));
  CHECK(ternary_entropy(0.0, 0.5) == Approx(1.0));
  CHECK_THROWS_AS(ternary_entropy(0.7, 0.7), InvalidArgument);

  CHECK(entanglement_of_formation(0.0) == Approx(0.0));
  CHECK(entanglement_of_formation(1.0) == Approx(1.0));
  CHECK(entanglement_of_formation(0.625848970553) == Approx(0.5).epsilon(1e-10));
  CHECK(entanglement_of_formation(0.5) == Approx(0.35457890266527).epsilon(1e-12));

  CHECK(ppt_cost(0.0) == Approx(0.0));
  CHECK(ppt_cost(1.0) == Approx(1.0));
  CHECK(ppt_cost(0.5) == Approx(std::log2(1.5)));
  CHECK_THROWS_AS(ppt_cost(-0.5), InvalidArgument);

  CHECK(von_neumann_entropy(maximally_mixed()) == Approx(2.0));
  CHECK(std::abs(von_neumann_entropy(singlet())) < 1e-12);
  CHECK(von_neumann_entropy(fixed_state()) == Approx(kOracleS).epsilon(1e-12));
}

TEST_CASE("relative entropy") {
  RngStream rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(rng);
    CHECK(std::abs(relative_entropy(rho, rho)) < 1e-10);
  }

  const double c = 0.5;
  const family::X x{c};
  const double r = 1 + std::sqrt((1 - c) * (1 - c) + c * c);
  CHECK(relative_entropy(build(x), *closest_separable(x)) ==
        Approx(binary_entropy(c / 2) - binary_entropy(r / 2)).epsilon(1e-10));

  CHECK_THROWS_AS(relative_entropy(singlet(), product00()), SupportViolation);
}

TEST_CASE("CHSH parameter") {
  CHECK(chsh_m(singlet()) == Approx(2.0));
  CHECK(chsh_m(product00()) == Approx(1.0));
  CHECK(chsh_m(build(family::BellDiagonal{{0.7, 0.1, 0.1, 0.1}})) == Approx(0.72));
  CHECK(chsh_m(fixed_state()) == Approx(kOracleM).epsilon(1e-12));

  CHECK(max_bell_value(singlet()) == Approx(2.0 * std::sqrt(2.0)));
  CHECK(max_bell_value(product00()) == Approx(2.0));
  CHECK(max_bell_value(maximally_mixed()) == Approx(0.0));
}

TEST_CASE("correlation matrix of the singlet is -I") {
  CHECK((correlation_matrix(singlet()) + Eigen::Matrix3d::Identity()).norm() < 1e-14);
}

TEST_CASE("pure states satisfy C = N and M = 1 + C^2") {
  RngStream rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_pure(rng).density();
    const double c = concurrence(rho);
    CHECK(std::abs(c - negativity(rho)) < 1e-10);
    CHECK(std::abs(chsh_m(rho) - (1 + c * c)) < 1e-9);
  }
}
