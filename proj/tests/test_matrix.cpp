#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "sumur/eigen.hpp"
#include "sumur/error.hpp"
#include "sumur/families.hpp"
#include "sumur/matrix.hpp"

using namespace sumur;

namespace {

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

ComplexMatrix diag_of(const std::vector<double>& values) {
  ComplexMatrix d(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) d(i, i) = values[i];
  return d;
}

}  // namespace

TEST_CASE("construction rejects bad shapes and non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), Error);
  try {
    ComplexMatrix(2, {1.0, 0.0, std::numeric_limits<double>::quiet_NaN(), 1.0});
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
  }
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), Error);
}

TEST_CASE("basic arithmetic") {
  const ComplexMatrix a{{1.0, cplx(0, 2)}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab = a * b;
  CHECK(ab(0, 0) == cplx(0, 2));
  CHECK(ab(0, 1) == cplx(1, 0));
  CHECK(ab(1, 0) == cplx(4, 0));
  CHECK(a.adjoint()(0, 1) == cplx(3, 0));
  CHECK(a.adjoint()(1, 0) == cplx(0, -2));
  CHECK(a.trace() == cplx(5, 0));
  CHECK(hermitian_deviation(b) == 0.0);
  CHECK(hermitian_deviation(a) == doctest::Approx(std::abs(cplx(0, 2) - 3.0)));
  CHECK_THROWS_AS(a * ComplexMatrix::identity(3), Error);
}

TEST_CASE("hs inner product") {
  const auto id = ComplexMatrix::identity(2);
  CHECK(hs_inner(id, id) == cplx(2, 0));
  const ComplexMatrix a{{cplx(0, 1), 0.0}, {0.0, 0.0}};
  CHECK(hs_inner(a, id) == cplx(0, -1));  // conjugate-linear in the first slot
}

TEST_CASE("Jacobi eigensolver on Pauli Y and spin-1 Jy") {
  auto ey = hermitian_eigen(pauli(Pauli::Y).matrix());
  CHECK(ey.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ey.values[1] == doctest::Approx(1.0).epsilon(1e-14));

  auto ej = hermitian_eigen(spin1_ops().y.matrix());
  CHECK(ej.values[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(std::abs(ej.values[1]) < 1e-13);
  CHECK(ej.values[2] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Jacobi eigensolver reconstructs random Hermitian matrices") {
  for (std::size_t dim : {2u, 3u, 5u, 8u, 16u, 32u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto h = random_hermitian(dim, seed * 97 + dim).matrix();
      const auto e = hermitian_eigen(h);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
      const auto& v = e.vectors;
      // V^dagger V = I and V diag V^dagger = H.
      CHECK(max_entry_diff(v.adjoint() * v, ComplexMatrix::identity(dim)) < 1e-12);
      CHECK(max_entry_diff(v * diag_of(e.values) * v.adjoint(), h) < 1e-11 * std::max(1.0, h.max_abs()));
      // Trace is preserved.
      double sum = 0.0;
      for (double x : e.values) sum += x;
      CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("Jacobi eigensolver handles degenerate and diagonal input") {
  const auto id = ComplexMatrix::identity(4);
  const auto e = hermitian_eigen(id);
  for (double x : e.values) CHECK(x == 1.0);
  const auto u = random_unitary(4, 11);
  const auto m = u * diag_of({2.0, 2.0, -1.0, -1.0}) * u.adjoint();
  const auto em = hermitian_eigen(m);
  CHECK(em.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(em.values[3] == doctest::Approx(2.0).epsilon(1e-12));
}
