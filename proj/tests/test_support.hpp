// SPDX-License-Identifier: Apache-2.0
//
// Seeded random state generators and brute-force oracles shared by the test
// binaries. Everything here is independent of the library paths it checks:
// oracles work directly on amplitudes and entries.
#pragma once

#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "densig/complex_matrix.hpp"
#include "densig/entanglement_signature.hpp"
#include "densig/quantum_states.hpp"
#include "densig/tensor_core.hpp"

namespace densig::testutil {

inline std::vector<Complex> random_amplitudes(std::mt19937 &rng,
                                              std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  double norm_sq = 0.0;
  for (Complex &z : amps) {
    z = Complex(gauss(rng), gauss(rng));
    norm_sq += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Complex &z : amps) {
    z *= inv;
  }
  return amps;
}

inline PureState random_pure(std::mt19937 &rng, const DimsList &dims) {
  return PureState(dims, random_amplitudes(rng, dims.product()));
}

inline std::vector<double> random_weights(std::mt19937 &rng, int terms) {
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<double> weights(terms);
  double sum = 0.0;
  for (double &w : weights) {
    w = uniform(rng);
    sum += w;
  }
  for (double &w : weights) {
    w /= sum;
  }
  return weights;
}

// Mixture of random pure states on a single system of the given dimension.
inline DensityMatrix random_density(std::mt19937 &rng, std::size_t dim,
                                    int terms = 3) {
  const auto weights = random_weights(rng, terms);
  ComplexMatrix mat(dim);
  for (int t = 0; t < terms; ++t) {
    const auto amps = random_amplitudes(rng, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        mat(r, c) += weights[t] * amps[r] * std::conj(amps[c]);
      }
    }
  }
  return DensityMatrix(DimsList{dim}, std::move(mat));
}

// Mixture of random bipartite pure states: a generic mixed, generically
// entangled n (x) m state.
inline BipartiteDensityMatrix random_bipartite(std::mt19937 &rng,
                                               std::size_t n, std::size_t m,
                                               int terms = 3) {
  const auto weights = random_weights(rng, terms);
  ComplexMatrix mat(n * m);
  for (int t = 0; t < terms; ++t) {
    const auto amps = random_amplitudes(rng, n * m);
    for (std::size_t r = 0; r < n * m; ++r) {
      for (std::size_t c = 0; c < n * m; ++c) {
        mat(r, c) += weights[t] * amps[r] * std::conj(amps[c]);
      }
    }
  }
  return BipartiteDensityMatrix(n, m, std::move(mat));
}

inline BipartiteDensityMatrix random_product(std::mt19937 &rng, std::size_t n,
                                             std::size_t m) {
  return product_state(random_density(rng, n), random_density(rng, m));
}

inline BipartiteDensityMatrix random_separable(std::mt19937 &rng,
                                               std::size_t n, std::size_t m,
                                               int terms) {
  const auto weights = random_weights(rng, terms);
  std::vector<std::pair<DensityMatrix, DensityMatrix>> pairs;
  pairs.reserve(terms);
  for (int t = 0; t < terms; ++t) {
    pairs.emplace_back(random_density(rng, n), random_density(rng, m));
  }
  return separable_mixture(weights, pairs);
}

// Haar-ish random unitary: Gram-Schmidt over Gaussian columns.
inline ComplexMatrix random_unitary(std::mt19937 &rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Complex> col(dim);
    for (Complex &z : col) {
      z = Complex(gauss(rng), gauss(rng));
    }
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap(0.0, 0.0);
      for (std::size_t r = 0; r < dim; ++r) {
        overlap += std::conj(u(r, prev)) * col[r];
      }
      for (std::size_t r = 0; r < dim; ++r) {
        col[r] -= overlap * u(r, prev);
      }
    }
    double norm_sq = 0.0;
    for (const Complex &z : col) {
      norm_sq += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t r = 0; r < dim; ++r) {
      u(r, c) = col[r] * inv;
    }
  }
  return u;
}

// Conjugate a bipartite state by U_A (x) U_B.
inline BipartiteDensityMatrix rotate_local(const BipartiteDensityMatrix &rho,
                                           const ComplexMatrix &u_a,
                                           const ComplexMatrix &u_b) {
  const ComplexMatrix u = kron(u_a, u_b);
  return BipartiteDensityMatrix(rho.n(), rho.m(), u * rho.mat() * u.dagger());
}

// Number of linearly independent matrices among the expansion blocks,
// counted by modified Gram-Schmidt over the Hilbert-Schmidt inner product.
// The drop threshold mirrors a relative eigenvalue cutoff: eigenvalues scale
// as squared norms, so residual norms compare against sqrt(rel_tol) of the
// largest block norm.
inline std::size_t gram_schmidt_block_rank(const ExpansionBlocks &blocks,
                                           double rel_tol) {
  std::vector<ComplexMatrix> basis;
  double max_norm = 0.0;
  for (std::size_t i = 0; i < blocks.n(); ++i) {
    for (std::size_t ip = 0; ip < blocks.n(); ++ip) {
      max_norm =
          std::max(max_norm, blocks.block(i, ip).frobenius_norm());
    }
  }
  if (max_norm == 0.0) {
    return 0;
  }
  const double threshold = std::sqrt(rel_tol) * max_norm;
  for (std::size_t i = 0; i < blocks.n(); ++i) {
    for (std::size_t ip = 0; ip < blocks.n(); ++ip) {
      ComplexMatrix v = blocks.block(i, ip);
      for (const ComplexMatrix &u : basis) {
        const Complex overlap = hs_inner(v, u);
        v -= overlap * u;
      }
      const double residual = v.frobenius_norm();
      if (residual > threshold) {
        v *= Complex(1.0 / residual, 0.0);
        basis.push_back(std::move(v));
      }
    }
  }
  return basis.size();
}

// Brute-force teleportation oracle working purely on amplitudes. The channel
// is given as a mixture of pure two-qubit states psi_t on A (x) B; the
// measurement projects A and C onto each of the four maximally entangled
// states. Returns (probability, unnormalized-then-normalized B matrix) per
// outcome.
struct OracleOutcome {
  double probability = 0.0;
  ComplexMatrix post_b{2};
};

inline std::array<OracleOutcome, 4>
oracle_teleport(const std::vector<std::pair<double, std::array<Complex, 4>>>
                    &channel_terms,
                Complex c1, Complex c2) {
  const double r = 1.0 / std::sqrt(2.0);
  // Amplitudes over A (x) C, flat a*2+c.
  const std::array<std::array<Complex, 4>, 4> bell = {{
      {Complex(r, 0), Complex(0, 0), Complex(0, 0), Complex(r, 0)},
      {Complex(r, 0), Complex(0, 0), Complex(0, 0), Complex(-r, 0)},
      {Complex(0, 0), Complex(r, 0), Complex(r, 0), Complex(0, 0)},
      {Complex(0, 0), Complex(r, 0), Complex(-r, 0), Complex(0, 0)},
  }};
  const std::array<Complex, 2> psi_c = {c1, c2};

  std::array<OracleOutcome, 4> outcomes;
  for (int k = 0; k < 4; ++k) {
    double p = 0.0;
    ComplexMatrix accum(2);
    for (const auto &[weight, phi] : channel_terms) {
      // v[b] = sum_{a,c} conj(bell_k[a*2+c]) * phi[a*2+b] * psi_c[c]
      std::array<Complex, 2> v = {Complex(0, 0), Complex(0, 0)};
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t c = 0; c < 2; ++c) {
          for (std::size_t b = 0; b < 2; ++b) {
            v[b] += std::conj(bell[k][a * 2 + c]) * phi[a * 2 + b] * psi_c[c];
          }
        }
      }
      const double branch = std::norm(v[0]) + std::norm(v[1]);
      p += weight * branch;
      for (std::size_t rr = 0; rr < 2; ++rr) {
        for (std::size_t cc = 0; cc < 2; ++cc) {
          accum(rr, cc) += weight * v[rr] * std::conj(v[cc]);
        }
      }
    }
    outcomes[k].probability = p;
    if (p > 0.0) {
      accum *= Complex(1.0 / p, 0.0);
    }
    outcomes[k].post_b = std::move(accum);
  }
  return outcomes;
}

} // namespace densig::testutil
