// SPDX-License-Identifier: Apache-2.0
#include "densig/quantum_states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace densig {

namespace {

// Shared validation for density-matrix types. Returns the (possibly
// symmetrized) matrix or throws StateError.
ComplexMatrix validate_density(ComplexMatrix mat, std::size_t expected_dim) {
  if (mat.dim() != expected_dim) {
    throw DimsError("density matrix: dims product " +
                    std::to_string(expected_dim) + " != matrix dim " +
                    std::to_string(mat.dim()));
  }
  const double scale = mat.frobenius_norm();
  if (!mat.is_hermitian(kHermTolFactor * scale)) {
    throw StateError("density matrix: not Hermitian within tolerance");
  }
  mat = mat.hermitized();
  const Complex tr = mat.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTraceTol) {
    throw StateError("density matrix: trace != 1 (got " +
                     std::to_string(tr.real()) + ")");
  }
  const EigResult eig = hermitian_eig(mat);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -kStatePsdTol) {
    throw StateError("density matrix: not positive semidefinite (min "
                     "eigenvalue " +
                     std::to_string(eig.eigenvalues.back()) + ")");
  }
  return mat;
}

double real_purity(const ComplexMatrix &mat) {
  // tr(rho^2) = <rho, rho>_HS for Hermitian rho.
  return hs_inner(mat, mat).real();
}

} // namespace

PureState::PureState(DimsList dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.product() != amplitudes_.size()) {
    throw DimsError("PureState: dims product != amplitude count");
  }
  double norm_sq = 0.0;
  for (const Complex &z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw StateError("PureState: non-finite amplitude");
    }
    norm_sq += std::norm(z);
  }
  if (std::abs(std::sqrt(norm_sq) - 1.0) > kStateNormTol) {
    throw StateError("PureState: not normalized (norm " +
                     std::to_string(std::sqrt(norm_sq)) + ")");
  }
}

DensityMatrix::DensityMatrix(DimsList dims, ComplexMatrix mat)
    : dims_(std::move(dims)),
      mat_(validate_density(std::move(mat), dims_.product())) {}

double DensityMatrix::purity() const { return real_purity(mat_); }

BipartiteDensityMatrix::BipartiteDensityMatrix(std::size_t n, std::size_t m,
                                               ComplexMatrix mat)
    : n_(n), m_(m), mat_(ComplexMatrix()) {
  if (n == 0 || m == 0) {
    throw DimsError("BipartiteDensityMatrix: zero subsystem dimension");
  }
  mat_ = validate_density(std::move(mat), n * m);
}

double BipartiteDensityMatrix::purity() const { return real_purity(mat_); }

DensityMatrix density_from_pure(const PureState &psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix mat(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      mat(r, c) = psi.amplitudes()[r] * std::conj(psi.amplitudes()[c]);
    }
  }
  return DensityMatrix(psi.dims(), std::move(mat));
}

BipartiteDensityMatrix product_state(const DensityMatrix &rho_a,
                                     const DensityMatrix &rho_b) {
  if (rho_a.dims().size() != 1 || rho_b.dims().size() != 1) {
    throw StateError("product_state: factors must be single-system states");
  }
  return BipartiteDensityMatrix(rho_a.dim(), rho_b.dim(),
                                kron(rho_a.mat(), rho_b.mat()));
}

BipartiteDensityMatrix separable_mixture(
    const std::vector<double> &weights,
    const std::vector<std::pair<DensityMatrix, DensityMatrix>> &pairs) {
  if (weights.size() != pairs.size() || weights.empty()) {
    throw WeightError("separable_mixture: need one weight per pair");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw WeightError("separable_mixture: negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kStateTraceTol) {
    throw WeightError("separable_mixture: weights sum to " +
                      std::to_string(sum) + ", expected 1");
  }

  const std::size_t n = pairs.front().first.dim();
  const std::size_t m = pairs.front().second.dim();
  ComplexMatrix acc(n * m);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto &[a, b] = pairs[i];
    if (a.dim() != n || b.dim() != m) {
      throw DimsError("separable_mixture: pair " + std::to_string(i) +
                      " has mismatched dims");
    }
    acc += Complex(weights[i], 0.0) * kron(a.mat(), b.mat());
  }
  return BipartiteDensityMatrix(n, m, std::move(acc));
}

BipartiteDensityMatrix classical_corr_channel() {
  ComplexMatrix mat = ComplexMatrix::diagonal(
      {Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
       Complex(0.5, 0.0)});
  return BipartiteDensityMatrix(2, 2, std::move(mat));
}

PureState bell_channel() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return PureState(DimsList{2, 2},
                   {Complex(inv_sqrt2, 0.0), Complex(0.0, 0.0),
                    Complex(0.0, 0.0), Complex(inv_sqrt2, 0.0)});
}

PureState tripartite_pure(const std::vector<double> &weights,
                          const DimsList &dims) {
  if (dims.size() != 3) {
    throw DimsError("tripartite_pure: need exactly three factor dims");
  }
  const std::size_t r = weights.size();
  if (r == 0) {
    throw WeightError("tripartite_pure: no weights");
  }
  for (std::size_t s = 0; s < 3; ++s) {
    if (r > dims[s]) {
      throw DimsError("tripartite_pure: " + std::to_string(r) +
                      " terms exceed factor dim " + std::to_string(dims[s]));
    }
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw WeightError("tripartite_pure: negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kStateTraceTol) {
    throw WeightError("tripartite_pure: weights sum to " +
                      std::to_string(sum) + ", expected 1");
  }

  std::vector<Complex> amps(dims.product(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    // |i i i> at A-major flat index i*(m*k) + i*k + i.
    const std::size_t flat = i * dims[1] * dims[2] + i * dims[2] + i;
    amps[flat] = Complex(std::sqrt(weights[i]), 0.0);
  }
  return PureState(dims, std::move(amps));
}

BipartiteDensityMatrix reduce_tripartite(const PureState &psi,
                                         PairSelector keep) {
  if (psi.dims().size() != 3) {
    throw DimsError("reduce_tripartite: state must have three factors");
  }
  std::vector<std::size_t> kept;
  switch (keep) {
  case PairSelector::AB:
    kept = {0, 1};
    break;
  case PairSelector::AC:
    kept = {0, 2};
    break;
  case PairSelector::BC:
    kept = {1, 2};
    break;
  }
  const DensityMatrix full = density_from_pure(psi);
  ComplexMatrix reduced = partial_trace(full.mat(), psi.dims(), kept);
  return BipartiteDensityMatrix(psi.dims()[kept[0]], psi.dims()[kept[1]],
                                std::move(reduced));
}

const char *to_string(PairSelector keep) {
  switch (keep) {
  case PairSelector::AB:
    return "AB";
  case PairSelector::AC:
    return "AC";
  case PairSelector::BC:
    return "BC";
  }
  return "?";
}

} // namespace densig
