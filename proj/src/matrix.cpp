#include "sumur/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sumur/error.hpp"

namespace sumur {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DensityNotHermitian: return "DensityNotHermitian";
    case ErrorKind::DensityBadTrace: return "DensityBadTrace";
    case ErrorKind::DensityNegative: return "DensityNegative";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NegativeVariance: return "NegativeVariance";
    case ErrorKind::ImaginaryExpectation: return "ImaginaryExpectation";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BlochVectorTooLong: return "BlochVectorTooLong";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim_ == 0 || data_.size() != dim_ * dim_) {
    throw Error(ErrorKind::NotSquare, "expected " + std::to_string(dim_ * dim_) +
                                          " entries for dimension " + std::to_string(dim_) +
                                          ", got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  dim_ = rows.size();
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::NotSquare, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "outer: size mismatch");
  ComplexMatrix m(u.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix add: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sub: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw Error(ErrorKind::DimensionMismatch, "matrix product: dimension mismatch");
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

CVector operator*(const ComplexMatrix& a, std::span<const cplx> v) {
  const std::size_t n = a.dim();
  if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix-vector: dimension mismatch");
  CVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx acc = 0.0;
    for (std::size_t c = 0; c < n; ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double hermitian_deviation(const ComplexMatrix& m) {
  double dev = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      dev = std::max(dev, std::abs(m(r, c) - std::conj(m(c, r))));
  return dev;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "hs_inner: dimension mismatch");
  cplx acc = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) acc += std::conj(ea[i]) * eb[i];
  return acc;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "inner: size mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm2(std::span<const cplx> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace sumur
