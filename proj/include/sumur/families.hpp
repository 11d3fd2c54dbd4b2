#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "sumur/hermitian.hpp"
#include "sumur/random.hpp"

namespace sumur {

enum class Pauli { X, Y, Z };

/// X = |0><1| + |1><0|, Y = -i|0><1| + i|1><0|, Z = |0><0| - |1><1|.
Observable pauli(Pauli which);

struct Spin1 {
  Observable x;
  Observable y;
  Observable z;
};

/// Spin-1 angular momentum operators (hbar = 1) in the |0>, |1>, |2> basis
/// with J_z = diag(1, 0, -1).
Spin1 spin1_ops();

/// rho = (I + r.sigma) / 2. Returned as a pure state vector when |r| = 1
/// within 1e-10, otherwise as a density matrix. Throws BlochVectorTooLong
/// when |r| > 1 + 1e-10.
QuantumState bloch_state(const std::array<double, 3>& r);

enum class Family { QubitPaper, QutritPaper };

std::string_view to_string(Family f);
/// Accepts "qubit-paper" and "qutrit-paper"; throws UnknownFamily otherwise.
Family parse_family(std::string_view name);

/// Bloch vector (cos t / sqrt2, cos t / sqrt2, sin t).
QuantumState qubit_family(double theta);
/// cos(t/2)|0> + sin(t/2)|2>.
QuantumState qutrit_family(double theta);
QuantumState family_state(Family f, double theta);

// Seeded generators. Same (dim, seed) gives bit-identical output. Entries are
// drawn row-major, one complex_gaussian() per entry.
QuantumState random_pure(std::size_t dim, std::uint64_t seed);
QuantumState random_density(std::size_t dim, std::uint64_t seed);
Observable random_hermitian(std::size_t dim, std::uint64_t seed, double scale = 1.0);
/// Unitary from modified Gram-Schmidt on the columns of a Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);
/// dim x dim matrix of complex standard normals.
ComplexMatrix random_gaussian_matrix(std::size_t dim, Rng& rng);

}  // namespace sumur
