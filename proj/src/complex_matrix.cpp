// SPDX-License-Identifier: Apache-2.0
#include "densig/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace densig {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimsError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                    " entries, got " + std::to_string(entries_.size()));
  }
  if (!all_finite()) {
    throw StateError("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Complex(1.0, 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex> &diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(i, i) = diag[i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto &row : rows) {
    if (row.size() != dim) {
      throw DimsError("ComplexMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(dim, std::move(entries));
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = std::conj(entries_[i]);
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex &z : entries_) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  double sum = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      sum += std::norm((*this)(r, c) - std::conj((*this)(c, r)));
    }
  }
  return std::sqrt(sum) <= tol;
}

ComplexMatrix ComplexMatrix::hermitized() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    }
  }
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex &z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      return false;
    }
  }
  return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) {
    throw DimsError("matrix add: dim mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
  }
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) {
    throw DimsError("matrix subtract: dim mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= other.entries_[i];
  }
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
  for (Complex &z : entries_) {
    z *= scalar;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) {
    throw DimsError("matrix multiply: dim mismatch");
  }
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += ark * b(k, c);
      }
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) {
    throw DimsError("frobenius_distance: dim mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  return a.dim() == b.dim() && frobenius_distance(a, b) <= tol;
}

} // namespace densig
