#include "sumur/families.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/core.h>

#include "sumur/error.hpp"

namespace sumur {
namespace {

constexpr cplx I{0.0, 1.0};

void require_random_dim(std::size_t dim) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("random generators need dim >= 2, got {}", dim));
  }
}

}  // namespace

Observable pauli(Pauli which) {
  switch (which) {
    case Pauli::X: return validate_observable({{0.0, 1.0}, {1.0, 0.0}});
    case Pauli::Y: return validate_observable({{0.0, -I}, {I, 0.0}});
    case Pauli::Z: break;
  }
  return validate_observable({{1.0, 0.0}, {0.0, -1.0}});
}

Spin1 spin1_ops() {
  const double h = 1.0 / std::numbers::sqrt2;
  return Spin1{
      validate_observable({{0.0, h, 0.0}, {h, 0.0, h}, {0.0, h, 0.0}}),
      validate_observable({{0.0, -I * h, 0.0}, {I * h, 0.0, -I * h}, {0.0, I * h, 0.0}}),
      validate_observable({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}),
  };
}

QuantumState bloch_state(const std::array<double, 3>& r) {
  const auto [rx, ry, rz] = r;
  if (!std::isfinite(rx) || !std::isfinite(ry) || !std::isfinite(rz)) {
    throw Error(ErrorKind::NonFinite, "Bloch vector has non-finite components");
  }
  const double len = std::sqrt(rx * rx + ry * ry + rz * rz);
  if (len > 1.0 + kStateTol) {
    throw Error(ErrorKind::BlochVectorTooLong, fmt::format("Bloch vector length {:.12g} exceeds 1", len));
  }
  if (std::abs(len - 1.0) <= kStateTol) {
    // Eigenvector of rho for eigenvalue 1; pick the branch with the larger
    // normalizer to stay away from the poles.
    CVector v(2);
    if (rz >= 0.0) {
      v[0] = 1.0 + rz;
      v[1] = cplx(rx, ry);
    } else {
      v[0] = cplx(rx, -ry);
      v[1] = 1.0 - rz;
    }
    const double n = norm2(v);
    for (auto& z : v) z /= n;
    return validate_pure(std::move(v));
  }
  ComplexMatrix rho{{0.5 * (1.0 + rz), 0.5 * cplx(rx, -ry)}, {0.5 * cplx(rx, ry), 0.5 * (1.0 - rz)}};
  return validate_density(std::move(rho));
}

std::string_view to_string(Family f) {
  return f == Family::QubitPaper ? "qubit-paper" : "qutrit-paper";
}

Family parse_family(std::string_view name) {
  if (name == "qubit-paper") return Family::QubitPaper;
  if (name == "qutrit-paper") return Family::QutritPaper;
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

QuantumState qubit_family(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::NonFinite, "theta must be finite");
  const double c = std::cos(theta) / std::numbers::sqrt2;
  return bloch_state({c, c, std::sin(theta)});
}

QuantumState qutrit_family(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::NonFinite, "theta must be finite");
  return validate_pure({std::cos(theta / 2.0), 0.0, std::sin(theta / 2.0)});
}

QuantumState family_state(Family f, double theta) {
  return f == Family::QubitPaper ? qubit_family(theta) : qutrit_family(theta);
}

ComplexMatrix random_gaussian_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_gaussian();
  return g;
}

QuantumState random_pure(std::size_t dim, std::uint64_t seed) {
  require_random_dim(dim);
  Rng rng(seed);
  CVector v(dim);
  for (auto& z : v) z = rng.complex_gaussian();
  const double n = norm2(v);
  for (auto& z : v) z /= n;
  return validate_pure(std::move(v));
}

QuantumState random_density(std::size_t dim, std::uint64_t seed) {
  require_random_dim(dim);
  Rng rng(seed);
  const ComplexMatrix g = random_gaussian_matrix(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  // Exact Hermitian symmetry before normalizing.
  for (std::size_t r = 0; r < dim; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  rho *= 1.0 / rho.trace().real();
  return validate_density(std::move(rho));
}

Observable random_hermitian(std::size_t dim, std::uint64_t seed, double scale) {
  require_random_dim(dim);
  Rng rng(seed);
  const ComplexMatrix g = random_gaussian_matrix(dim, rng);
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = scale * g(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) {
      h(r, c) = 0.5 * scale * (g(r, c) + std::conj(g(c, r)));
      h(c, r) = std::conj(h(r, c));
    }
  }
  return validate_observable(std::move(h));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  require_random_dim(dim);
  Rng rng(seed);
  ComplexMatrix q = random_gaussian_matrix(dim, rng);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, j)) * q(r, k);
      for (std::size_t r = 0; r < dim; ++r) q(r, k) -= proj * q(r, j);
    }
    double n = 0.0;
    for (std::size_t r = 0; r < dim; ++r) n += std::norm(q(r, k));
    n = std::sqrt(n);
    for (std::size_t r = 0; r < dim; ++r) q(r, k) /= n;
  }
  return q;
}

}  // namespace sumur
