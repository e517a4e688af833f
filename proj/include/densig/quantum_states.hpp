// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "densig/complex_matrix.hpp"
#include "densig/tensor_core.hpp"

namespace densig {

// Constructor-time validation tolerances for state invariants.
inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kStatePsdTol = 1e-10;

// Normalized state vector over an explicit subsystem split.
class PureState {
public:
  PureState(DimsList dims, std::vector<Complex> amplitudes);

  const DimsList &dims() const { return dims_; }
  const std::vector<Complex> &amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return amplitudes_.size(); }

private:
  DimsList dims_;
  std::vector<Complex> amplitudes_;
};

// Validated density matrix: Hermitian, unit trace, positive semidefinite.
// Hermiticity noise below kHermTolFactor * ||mat||_F is silently symmetrized;
// anything worse is rejected, as are trace and positivity violations.
class DensityMatrix {
public:
  DensityMatrix(DimsList dims, ComplexMatrix mat);

  const DimsList &dims() const { return dims_; }
  const ComplexMatrix &mat() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }

  // tr(rho^2)
  double purity() const;

private:
  DimsList dims_;
  ComplexMatrix mat_;
};

// Density matrix over an A (dim n) x B (dim m) split, A-major flat layout.
class BipartiteDensityMatrix {
public:
  BipartiteDensityMatrix(std::size_t n, std::size_t m, ComplexMatrix mat);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const ComplexMatrix &mat() const { return mat_; }
  double purity() const;

  DensityMatrix as_density() const {
    return DensityMatrix(DimsList{n_, m_}, mat_);
  }

private:
  std::size_t n_;
  std::size_t m_;
  ComplexMatrix mat_;
};

// |psi><psi|
DensityMatrix density_from_pure(const PureState &psi);

// rho_a (x) rho_b from two single-system states.
BipartiteDensityMatrix product_state(const DensityMatrix &rho_a,
                                     const DensityMatrix &rho_b);

// Convex mixture sum_i w_i * rho_i^A (x) rho_i^B. Weights must be
// non-negative and sum to one; all pairs must share the same (n, m).
BipartiteDensityMatrix
separable_mixture(const std::vector<double> &weights,
                  const std::vector<std::pair<DensityMatrix, DensityMatrix>> &pairs);

// Two-qubit classically correlated channel:
// (|00><00| + |11><11|) / 2 = diag(1/2, 0, 0, 1/2).
BipartiteDensityMatrix classical_corr_channel();

// Maximally entangled two-qubit channel (|00> + |11>) / sqrt(2).
PureState bell_channel();

// Tripartite Schmidt-form state sum_i sqrt(w_i) |i i i> over three factors.
// The number of weights may not exceed any factor dimension.
PureState tripartite_pure(const std::vector<double> &weights,
                          const DimsList &dims);

enum class PairSelector { AB, AC, BC };

// Reduction of a three-factor pure state onto the selected pair of
// subsystems.
BipartiteDensityMatrix reduce_tripartite(const PureState &psi,
                                         PairSelector keep);

const char *to_string(PairSelector keep);

} // namespace densig
