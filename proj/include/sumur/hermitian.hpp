#pragma once

#include <variant>

#include "sumur/matrix.hpp"

namespace sumur {

inline constexpr double kHermitianTol = 1e-10;  // relative, scaled by max(1, max|M|)
inline constexpr double kStateTol = 1e-10;
inline constexpr double kVarianceClamp = 1e-10;

/// A Hermitian matrix. Construct through validate_observable or the
/// closed operations below (sums and real scalings of observables).
class Observable {
 public:
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }

  friend Observable validate_observable(ComplexMatrix m);
  friend Observable operator+(const Observable& a, const Observable& b);
  friend Observable operator-(const Observable& a, const Observable& b);
  friend Observable operator*(double s, const Observable& a);
  friend Observable shifted(const Observable& a, double c);

 private:
  explicit Observable(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Throws NonFinite or NotHermitian (the message reports the deviation).
/// The matrix is kept as given; nothing is symmetrized.
Observable validate_observable(ComplexMatrix m);

Observable operator+(const Observable& a, const Observable& b);
Observable operator-(const Observable& a, const Observable& b);
Observable operator*(double s, const Observable& a);
/// a + c * Identity.
Observable shifted(const Observable& a, double c);

enum class StateKind { Pure, Mixed };

class QuantumState {
 public:
  StateKind kind() const noexcept { return kind_; }
  bool is_pure() const noexcept { return kind_ == StateKind::Pure; }
  std::size_t dim() const noexcept { return dim_; }
  /// Only meaningful for pure states.
  const CVector& vector() const noexcept { return vec_; }
  /// Only meaningful for mixed states; use to_density for either kind.
  const ComplexMatrix& density() const noexcept { return rho_; }
  /// Only meaningful for mixed states: psd_sqrt(density()), computed once
  /// during validation.
  const ComplexMatrix& sqrt_density() const noexcept { return sqrt_rho_; }

  friend QuantumState validate_pure(CVector v);
  friend QuantumState validate_density(ComplexMatrix rho);

 private:
  QuantumState() = default;
  StateKind kind_ = StateKind::Pure;
  std::size_t dim_ = 0;
  CVector vec_;
  ComplexMatrix rho_;
  ComplexMatrix sqrt_rho_;
};

/// Unit vector within 1e-10, otherwise NotNormalized. Not renormalized.
QuantumState validate_pure(CVector v);
/// Hermitian, unit trace, eigenvalues >= -1e-10. Each failure has its own
/// ErrorKind (DensityNotHermitian, DensityBadTrace, DensityNegative).
QuantumState validate_density(ComplexMatrix rho);

using RawState = std::variant<CVector, ComplexMatrix>;
QuantumState validate_state(RawState raw);

/// |psi><psi| for pure states, the stored matrix for mixed ones.
ComplexMatrix to_density(const QuantumState& s);
/// Re-expresses a pure state as a mixed-kind state with rho = |psi><psi|.
QuantumState as_mixed(const QuantumState& s);

/// <psi|M|psi> or Tr(rho M) for an arbitrary (not necessarily Hermitian) M.
cplx expectation_complex(const ComplexMatrix& m, const QuantumState& s);

/// Real expectation; throws ImaginaryExpectation when the raw imaginary part
/// exceeds 1e-10 * max(1, max|A|).
double expectation(const Observable& a, const QuantumState& s);

/// <A^2> - <A>^2, evaluated as the squared norm of (A - <A>)|psi> or of
/// (A - <A>) sqrt(rho). Values in [-1e-10, 0) clamp to 0; anything lower
/// throws NegativeVariance.
double variance(const Observable& a, const QuantumState& s);
/// The literal <A^2> - <A>^2 with both terms taken as traces, no clamping.
/// Kept as an independent route for cross-checks.
double variance_trace_form(const Observable& a, const QuantumState& s);
double stddev(const Observable& a, const QuantumState& s);

/// |<[A, B]>|.
double commutator_expectation(const Observable& a, const Observable& b, const QuantumState& s);

/// Hermitian PSD square root via Jacobi eigendecomposition. Throws NotPSD
/// when an eigenvalue is below -1e-10.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

/// A general matrix viewed as a vector under <A, B> = Tr(A^dagger B).
struct HSVector {
  ComplexMatrix matrix;
};

double hs_norm(const HSVector& v);
HSVector hs_add(const HSVector& v, const HSVector& w);

/// The proof vector for observable A in state s: (A - <A>)|psi> stored as
/// the first column of a dim x dim matrix for pure states, and
/// (A - <A>) sqrt(rho) for mixed states. Its HS norm equals stddev(A, s).
HSVector centered_vector(const Observable& a, const QuantumState& s);
/// Mixed-state variant reusing a precomputed psd_sqrt(rho).
HSVector centered_vector(const Observable& a, const QuantumState& s, const ComplexMatrix& sqrt_rho);

}  // namespace sumur
