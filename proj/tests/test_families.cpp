#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sumur/eigen.hpp"
#include "sumur/error.hpp"
#include "sumur/families.hpp"

using namespace sumur;

namespace {

constexpr double kPi = std::numbers::pi;

double purity(const QuantumState& s) {
  const auto rho = to_density(s);
  return (rho * rho).trace().real();
}

std::vector<double> theta_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t k = 0; k < points; ++k) g[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(points);
  return g;
}

}  // namespace

TEST_CASE("Pauli matrices match their ket-bra definitions") {
  const auto x = pauli(Pauli::X).matrix();
  CHECK(x == ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(pauli(Pauli::Z).matrix() == ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
  const auto y = pauli(Pauli::Y).matrix();
  CHECK(y(0, 1) == cplx(0, -1));
  CHECK(y(1, 0) == cplx(0, 1));
  CHECK(y * y == ComplexMatrix::identity(2));
}

TEST_CASE("spin-1 operators") {
  const auto j = spin1_ops();
  CHECK(j.z.matrix() == ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}});
  CHECK(j.x.matrix()(0, 1) == cplx(1.0 / std::numbers::sqrt2));
  CHECK(j.x.matrix()(1, 0) == cplx(1.0 / std::numbers::sqrt2));
  // [Jx, Jy] = i Jz
  const auto comm = j.x.matrix() * j.y.matrix() - j.y.matrix() * j.x.matrix();
  const auto target = cplx(0, 1) * j.z.matrix();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(comm(r, c) - target(r, c)) < 1e-15);
  // Casimir: Jx^2 + Jy^2 + Jz^2 = j(j+1) I = 2 I.
  const auto cas = j.x.matrix() * j.x.matrix() + j.y.matrix() * j.y.matrix() + j.z.matrix() * j.z.matrix();
  for (std::size_t r = 0; r < 3; ++r) CHECK(cas(r, r).real() == doctest::Approx(2.0));
}

TEST_CASE("bloch_state") {
  const auto up = bloch_state({0, 0, 1});
  CHECK(up.is_pure());
  CHECK(to_density(up) == ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  const auto mm = bloch_state({0, 0, 0});
  CHECK_FALSE(mm.is_pure());
  CHECK(mm.density() == cplx(0.5) * ComplexMatrix::identity(2));
  const double h = 1.0 / std::numbers::sqrt2;
  const auto s = bloch_state({h, h, 0});
  CHECK(s.is_pure());
  // Tr(rho X) = r_x, worked by hand for rho = (I + r.sigma)/2.
  CHECK(expectation(pauli(Pauli::X), s) == doctest::Approx(h).epsilon(1e-14));
  CHECK(expectation(pauli(Pauli::Y), s) == doctest::Approx(h).epsilon(1e-14));
  const auto down = bloch_state({0, 0, -1});
  CHECK(expectation(pauli(Pauli::Z), down) == doctest::Approx(-1.0));
  try {
    bloch_state({1, 1, 0});
    FAIL("expected BlochVectorTooLong");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BlochVectorTooLong);
  }
  const auto partial = bloch_state({0.3, -0.2, 0.5});
  CHECK(expectation(pauli(Pauli::Y), partial) == doctest::Approx(-0.2));
}

TEST_CASE("qubit family examples") {
  const auto up = to_density(qubit_family(kPi / 2));
  CHECK(std::abs(up(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(up(0, 1)) < 1e-15);
  CHECK(std::abs(up(1, 1)) < 1e-15);
  const auto s0 = qubit_family(0.0);
  const double total = variance(pauli(Pauli::X), s0) + variance(pauli(Pauli::Y), s0) + variance(pauli(Pauli::Z), s0);
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(variance(pauli(Pauli::X) + pauli(Pauli::Y), s0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("qutrit family examples") {
  CHECK(qutrit_family(0.0).vector() == CVector{1.0, 0.0, 0.0});
  const auto pi_state = qutrit_family(kPi).vector();
  CHECK(std::abs(pi_state[0]) < 1e-16);
  CHECK(pi_state[2] == cplx(1.0));
  const auto j = spin1_ops();
  for (double t : {0.0, 1.0, 2.0, 3.0, 5.5}) {
    CHECK(variance(j.x + j.y, qutrit_family(t)) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("property: qubit family is pure everywhere") {
  for (double t : theta_grid(1000)) {
    CHECK(std::abs(purity(qubit_family(t)) - 1.0) <= 1e-10);
  }
}

TEST_CASE("property: qutrit closed forms hold on a 1000-point grid") {
  const auto j = spin1_ops();
  double worst = 0.0;
  for (double t : theta_grid(1000)) {
    const auto s = qutrit_family(t);
    const double sn = std::sin(t);
    const double expected[] = {
        0.5 * (1 + sn),           0.5 * (1 - sn),           sn * sn, 1.0, 0.5 * (1 - sn) + sn * sn,
        0.5 * (1 + sn) + sn * sn, 1 + sn * sn,
    };
    const double got[] = {
        variance(j.x, s),       variance(j.y, s),       variance(j.z, s), variance(j.x + j.y, s),
        variance(j.y + j.z, s), variance(j.x + j.z, s), variance(j.x + j.y + j.z, s),
    };
    for (int k = 0; k < 7; ++k) worst = std::max(worst, std::abs(expected[k] - got[k]));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("property: qubit closed forms hold on a 1000-point grid") {
  const auto x = pauli(Pauli::X), y = pauli(Pauli::Y), z = pauli(Pauli::Z);
  double worst = 0.0;
  for (double t : theta_grid(1000)) {
    const auto s = qubit_family(t);
    const double mixed_pair = 1.25 + 0.25 * std::cos(2 * t) - std::numbers::sqrt2 / 2 * std::sin(2 * t);
    worst = std::max(worst, std::abs(variance(x + y, s) - (1 - std::cos(2 * t))));
    worst = std::max(worst, std::abs(variance(y + z, s) - mixed_pair));
    worst = std::max(worst, std::abs(variance(x + z, s) - mixed_pair));
    worst = std::max(worst, std::abs(variance(x, s) + variance(y, s) + variance(z, s) - 2.0));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("SplitMix64 reference stream") {
  // Published reference outputs for seed 0.
  Rng rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("random generators: contracts and reproducibility") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
    const auto psi = random_pure(4, seed);
    CHECK(std::abs(norm2(psi.vector()) - 1.0) <= 1e-12);
    CHECK(random_pure(4, seed).vector() == psi.vector());

    const auto rho = random_density(3, seed);
    CHECK(std::abs(rho.density().trace().real() - 1.0) <= 1e-12);
    CHECK(hermitian_eigen(rho.density()).values.front() >= -1e-12);
    CHECK(rho.density() == random_density(3, seed).density());

    const auto h = random_hermitian(2, seed, 0.5);
    CHECK_NOTHROW(validate_observable(h.matrix()));
    CHECK(h.matrix() == random_hermitian(2, seed, 0.5).matrix());

    const auto u = random_unitary(5, seed);
    const auto id = u.adjoint() * u;
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) CHECK(std::abs(id(r, c) - (r == c ? 1.0 : 0.0)) < 1e-12);
  }
  CHECK(random_pure(4, 1).vector() != random_pure(4, 2).vector());
  CHECK_THROWS_AS(random_pure(1, 0), Error);
}

TEST_CASE("family names") {
  CHECK(parse_family("qubit-paper") == Family::QubitPaper);
  CHECK(parse_family("qutrit-paper") == Family::QutritPaper);
  CHECK(to_string(Family::QutritPaper) == "qutrit-paper");
  try {
    parse_family("ququart");
    FAIL("expected UnknownFamily");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFamily);
  }
}
