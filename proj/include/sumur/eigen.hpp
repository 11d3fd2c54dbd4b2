#pragma once

#include <vector>

#include "sumur/matrix.hpp"

namespace sumur {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector for values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps over all (p, q) pairs until the off-diagonal Frobenius norm drops
/// below 1e-13 * ||M||_F. Throws NoConvergence after 100 sweeps. The input is
/// assumed Hermitian; only its upper triangle and diagonal real parts matter.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

}  // namespace sumur
