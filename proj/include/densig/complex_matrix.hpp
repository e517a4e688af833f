// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "densig/errors.hpp"

namespace densig {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. The single numeric carrier used
// everywhere in this library; dimensions stay at desk scale so everything
// is O(dim^3) at worst and nothing is blocked or sparse.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  // Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

  // Takes ownership of row-major entries. Rejects size mismatches and
  // non-finite values.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<Complex> &diag);
  // Row-by-row construction, mostly for tests and fixed constants.
  static ComplexMatrix
  from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex &operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  const std::vector<Complex> &entries() const { return entries_; }

  Complex trace() const;
  ComplexMatrix dagger() const;
  ComplexMatrix conjugate() const;
  double frobenius_norm() const;

  // ||m - m^dag||_F <= tol
  bool is_hermitian(double tol) const;
  // (m + m^dag) / 2
  ComplexMatrix hermitized() const;

  bool all_finite() const;

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
    m *= scalar;
    return m;
  }

  // Plain O(dim^3) matrix product.
  friend ComplexMatrix operator*(const ComplexMatrix &a,
                                 const ComplexMatrix &b);

private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// ||a - b||_F
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

} // namespace densig
