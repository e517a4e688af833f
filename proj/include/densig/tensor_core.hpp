// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "densig/complex_matrix.hpp"

namespace densig {

// Tolerances shared across the numeric layer.
//
// A matrix is accepted as Hermitian when ||h - h^dag||_F <= kHermTolFactor *
// ||h||_F; the eigensolver always symmetrizes before iterating, so round-off
// from long kron / partial-trace chains never trips it. The rank threshold is
// relative to the largest eigenvalue magnitude: far above eigensolver noise,
// far below anything physical at these dimensions.
inline constexpr double kHermTolFactor = 1e-10;
inline constexpr double kDefaultRankRelTol = 1e-9;

// Ordered subsystem dimensions of a composite space. The composite flat index
// is "A-major" throughout: for dims (n, m), flat = a*m + b; for (n, m, k),
// flat = a*m*k + b*k + c.
class DimsList {
public:
  DimsList(std::initializer_list<std::size_t> dims)
      : DimsList(std::vector<std::size_t>(dims)) {}
  explicit DimsList(std::vector<std::size_t> dims);

  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }
  std::size_t product() const;
  const std::vector<std::size_t> &values() const { return dims_; }

  friend bool operator==(const DimsList &a, const DimsList &b) {
    return a.dims_ == b.dims_;
  }

private:
  std::vector<std::size_t> dims_;
};

// Kronecker product in the A-major convention: the left factor owns the
// coarse index, so (kron(a,b))(i*bd+k, j*bd+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Trace out every subsystem not listed in `keep`. `keep` must be non-empty,
// strictly increasing and within range; the result is ordered like `keep`.
// Preserves the scalar trace.
ComplexMatrix partial_trace(const ComplexMatrix &m, const DimsList &dims,
                            const std::vector<std::size_t> &keep);

// Lift an operator acting on the `targets` subsystems to the full space,
// acting as the identity elsewhere. Targets must be strictly increasing but
// need not be contiguous; op is indexed in the same order as `targets`.
ComplexMatrix embed_op(const ComplexMatrix &op, const DimsList &dims,
                       const std::vector<std::size_t> &targets);

// Hilbert-Schmidt inner product tr(a * b^dag), i.e. sum_ij a_ij conj(b_ij).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigResult {
  // Real spectrum, sorted descending.
  std::vector<double> eigenvalues;
  // Unitary with eigenvectors as columns, ordered to match.
  ComplexMatrix eigenvectors;
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Input within kHermTolFactor of Hermitian is symmetrized and
// accepted; anything further off throws NotHermitianError.
EigResult hermitian_eig(const ComplexMatrix &h);

// Numerical rank of a descending spectrum: eigenvalues with
// |lambda| >= rel_tol * max|lambda| count as nonzero (ties at the threshold
// count); an all-zero spectrum has rank 0.
std::size_t rank_by_eigs(const std::vector<double> &eigenvalues,
                         double rel_tol);

} // namespace densig
