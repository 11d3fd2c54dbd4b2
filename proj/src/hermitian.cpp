#include "sumur/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "sumur/eigen.hpp"
#include "sumur/error.hpp"

namespace sumur {
namespace {

double hermitian_tolerance(const ComplexMatrix& m) {
  return kHermitianTol * std::max(1.0, m.max_abs());
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, fmt::format("{}: dimension {} vs {}", what, a, b));
  }
}

}  // namespace

Observable validate_observable(ComplexMatrix m) {
  if (m.dim() == 0) throw Error(ErrorKind::NotSquare, "observable must have dimension >= 1");
  if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "observable has non-finite entries");
  const double dev = hermitian_deviation(m);
  if (dev > hermitian_tolerance(m)) {
    throw Error(ErrorKind::NotHermitian,
                fmt::format("matrix is not Hermitian (max |M - M^dagger| = {:.3e})", dev));
  }
  return Observable(std::move(m));
}

Observable operator+(const Observable& a, const Observable& b) { return Observable(a.m_ + b.m_); }
Observable operator-(const Observable& a, const Observable& b) { return Observable(a.m_ - b.m_); }
Observable operator*(double s, const Observable& a) { return Observable(cplx(s) * a.m_); }

Observable shifted(const Observable& a, double c) {
  return Observable(a.m_ + cplx(c) * ComplexMatrix::identity(a.dim()));
}

QuantumState validate_pure(CVector v) {
  if (v.empty()) throw Error(ErrorKind::NotNormalized, "state vector is empty");
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::NonFinite, "state vector has non-finite entries");
    }
  }
  const double n = norm2(v);
  if (std::abs(n - 1.0) > kStateTol) {
    throw Error(ErrorKind::NotNormalized, fmt::format("state vector norm is {:.12g}, expected 1", n));
  }
  QuantumState s;
  s.kind_ = StateKind::Pure;
  s.dim_ = v.size();
  s.vec_ = std::move(v);
  return s;
}

QuantumState validate_density(ComplexMatrix rho) {
  if (rho.dim() == 0) throw Error(ErrorKind::NotSquare, "density matrix must have dimension >= 1");
  if (!rho.all_finite()) throw Error(ErrorKind::NonFinite, "density matrix has non-finite entries");
  const double dev = hermitian_deviation(rho);
  if (dev > hermitian_tolerance(rho)) {
    throw Error(ErrorKind::DensityNotHermitian,
                fmt::format("density matrix is not Hermitian (max deviation {:.3e})", dev));
  }
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw Error(ErrorKind::DensityBadTrace,
                fmt::format("density matrix trace is {:.12g}, expected 1", tr.real()));
  }
  ComplexMatrix root;
  try {
    root = psd_sqrt(rho);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPSD) throw;
    throw Error(ErrorKind::DensityNegative, std::string("density matrix is not PSD: ") + e.what());
  }
  QuantumState s;
  s.kind_ = StateKind::Mixed;
  s.dim_ = rho.dim();
  s.rho_ = std::move(rho);
  s.sqrt_rho_ = std::move(root);
  return s;
}

QuantumState validate_state(RawState raw) {
  if (auto* v = std::get_if<CVector>(&raw)) return validate_pure(std::move(*v));
  return validate_density(std::move(std::get<ComplexMatrix>(raw)));
}

ComplexMatrix to_density(const QuantumState& s) {
  if (s.is_pure()) return ComplexMatrix::outer(s.vector(), s.vector());
  return s.density();
}

QuantumState as_mixed(const QuantumState& s) {
  if (!s.is_pure()) return s;
  return validate_density(to_density(s));
}

cplx expectation_complex(const ComplexMatrix& m, const QuantumState& s) {
  require_same_dim(m.dim(), s.dim(), "expectation");
  if (s.is_pure()) return inner(s.vector(), m * std::span<const cplx>(s.vector()));
  // Tr(rho M) = sum_{r,c} rho(r,c) M(c,r)
  const auto& rho = s.density();
  cplx acc = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) acc += rho(r, c) * m(c, r);
  return acc;
}

double expectation(const Observable& a, const QuantumState& s) {
  const cplx e = expectation_complex(a.matrix(), s);
  if (std::abs(e.imag()) > hermitian_tolerance(a.matrix())) {
    throw Error(ErrorKind::ImaginaryExpectation,
                fmt::format("expectation has imaginary part {:.3e}", e.imag()));
  }
  return e.real();
}

double variance(const Observable& a, const QuantumState& s) {
  const double mean = expectation(a, s);
  const Observable centered = shifted(a, -mean);
  double var = 0.0;
  if (s.is_pure()) {
    const double n = norm2(centered.matrix() * std::span<const cplx>(s.vector()));
    var = n * n;
  } else {
    const ComplexMatrix v = centered.matrix() * s.sqrt_density();
    var = hs_inner(v, v).real();
  }
  if (var < 0.0) {
    if (var < -kVarianceClamp) {
      throw Error(ErrorKind::NegativeVariance, fmt::format("variance {:.3e} is negative", var));
    }
    var = 0.0;
  }
  return var;
}

double variance_trace_form(const Observable& a, const QuantumState& s) {
  const double mean = expectation_complex(a.matrix(), s).real();
  return expectation_complex(a.matrix() * a.matrix(), s).real() - mean * mean;
}

double stddev(const Observable& a, const QuantumState& s) { return std::sqrt(variance(a, s)); }

double commutator_expectation(const Observable& a, const Observable& b, const QuantumState& s) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  const ComplexMatrix comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return std::abs(expectation_complex(comm, s));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
  const auto eig = hermitian_eigen(rho);
  const std::size_t n = rho.dim();
  if (eig.values.front() < -kStateTol) {
    throw Error(ErrorKind::NotPSD, fmt::format("matrix has eigenvalue {:.3e}", eig.values.front()));
  }
  // Eigenvalues at rounding level are zeros of a rank-deficient matrix; their
  // square roots (~1e-8) would otherwise leak into the null space.
  const double rank_floor =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(eig.values.back()));
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (lambda <= rank_floor) continue;
    const double root = std::sqrt(lambda);
    for (std::size_t r = 0; r < n; ++r) {
      const cplx vr = root * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

double hs_norm(const HSVector& v) { return std::sqrt(hs_inner(v.matrix, v.matrix).real()); }

HSVector hs_add(const HSVector& v, const HSVector& w) {
  require_same_dim(v.matrix.dim(), w.matrix.dim(), "hs_add");
  return HSVector{v.matrix + w.matrix};
}

HSVector centered_vector(const Observable& a, const QuantumState& s) {
  if (s.is_pure()) return centered_vector(a, s, ComplexMatrix{});
  return centered_vector(a, s, psd_sqrt(s.density()));
}

HSVector centered_vector(const Observable& a, const QuantumState& s, const ComplexMatrix& sqrt_rho) {
  const double mean = expectation(a, s);
  const ComplexMatrix centered = shifted(a, -mean).matrix();
  if (s.is_pure()) {
    const CVector col = centered * std::span<const cplx>(s.vector());
    ComplexMatrix m(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) m(r, 0) = col[r];
    return HSVector{std::move(m)};
  }
  require_same_dim(sqrt_rho.dim(), s.dim(), "centered_vector");
  return HSVector{centered * sqrt_rho};
}

}  // namespace sumur
