// SPDX-License-Identifier: Apache-2.0
#include "densig/entanglement_signature.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace densig {

namespace {

constexpr double kBlockPairingTol = 1e-12;
constexpr double kBasisUnitaryTol = 1e-10;

bool is_unitary(const ComplexMatrix &u, double tol) {
  const ComplexMatrix gram = u.dagger() * u;
  return frobenius_distance(gram, ComplexMatrix::identity(u.dim())) <= tol;
}

} // namespace

ExpansionBlocks::ExpansionBlocks(std::size_t n, std::size_t m,
                                 std::vector<std::vector<ComplexMatrix>> blocks,
                                 ComplexMatrix a_basis)
    : n_(n), m_(m), blocks_(std::move(blocks)), a_basis_(std::move(a_basis)) {
  if (blocks_.size() != n_) {
    throw DimsError("ExpansionBlocks: expected " + std::to_string(n_) +
                    " block rows");
  }
  for (const auto &row : blocks_) {
    if (row.size() != n_) {
      throw DimsError("ExpansionBlocks: ragged block grid");
    }
    for (const auto &b : row) {
      if (b.dim() != m_) {
        throw DimsError("ExpansionBlocks: block dim != m");
      }
    }
  }
  if (a_basis_.dim() != n_) {
    throw DimsError("ExpansionBlocks: basis dim != n");
  }
  // Hermiticity pairing inherited from the source state:
  // block(i', i) = block(i, i')^dag.
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t ip = i; ip < n_; ++ip) {
      if (frobenius_distance(blocks_[ip][i], blocks_[i][ip].dagger()) >
          kBlockPairingTol) {
        throw StateError("ExpansionBlocks: blocks violate Hermiticity "
                         "pairing");
      }
    }
  }
}

bool ExpansionBlocks::computational_basis() const {
  return frobenius_distance(a_basis_, ComplexMatrix::identity(n_)) == 0.0;
}

ExpansionBlocks expand(const BipartiteDensityMatrix &rho) {
  return expand(rho, ComplexMatrix::identity(rho.n()));
}

ExpansionBlocks expand(const BipartiteDensityMatrix &rho,
                       const ComplexMatrix &a_basis) {
  const std::size_t n = rho.n();
  const std::size_t m = rho.m();
  if (a_basis.dim() != n) {
    throw DimsError("expand: basis dim " + std::to_string(a_basis.dim()) +
                    " != A dim " + std::to_string(n));
  }
  if (!is_unitary(a_basis, kBasisUnitaryTol)) {
    throw BasisError("expand: A basis is not unitary within tolerance");
  }

  // block(i,i')(j,j') = <A_i (x) j| rho |A_i' (x) j'>
  //                   = sum_{a,a'} conj(U(a,i)) rho(a*m+j, a'*m+j') U(a',i').
  std::vector<std::vector<ComplexMatrix>> blocks(
      n, std::vector<ComplexMatrix>(n, ComplexMatrix(m)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t ip = 0; ip < n; ++ip) {
      ComplexMatrix &b = blocks[i][ip];
      for (std::size_t a = 0; a < n; ++a) {
        const Complex left = std::conj(a_basis(a, i));
        if (left == Complex(0.0, 0.0)) {
          continue;
        }
        for (std::size_t ap = 0; ap < n; ++ap) {
          const Complex w = left * a_basis(ap, ip);
          if (w == Complex(0.0, 0.0)) {
            continue;
          }
          for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t jp = 0; jp < m; ++jp) {
              b(j, jp) += w * rho.mat()(a * m + j, ap * m + jp);
            }
          }
        }
      }
    }
  }
  return ExpansionBlocks(n, m, std::move(blocks), a_basis);
}

BipartiteDensityMatrix reconstruct(const ExpansionBlocks &blocks) {
  const std::size_t n = blocks.n();
  const std::size_t m = blocks.m();
  ComplexMatrix out(n * m);
  // rho(a*m+j, a'*m+j') = sum_{i,i'} U(a,i) conj(U(a',i')) block(i,i')(j,j').
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t ip = 0; ip < n; ++ip) {
      const ComplexMatrix &b = blocks.block(i, ip);
      for (std::size_t a = 0; a < n; ++a) {
        const Complex left = blocks.a_basis()(a, i);
        if (left == Complex(0.0, 0.0)) {
          continue;
        }
        for (std::size_t ap = 0; ap < n; ++ap) {
          const Complex w = left * std::conj(blocks.a_basis()(ap, ip));
          if (w == Complex(0.0, 0.0)) {
            continue;
          }
          for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t jp = 0; jp < m; ++jp) {
              out(a * m + j, ap * m + jp) += w * b(j, jp);
            }
          }
        }
      }
    }
  }
  return BipartiteDensityMatrix(n, m, std::move(out));
}

XMatrix::XMatrix(std::size_t n, ComplexMatrix mat) : n_(n), mat_(std::move(mat)) {
  if (mat_.dim() != n_ * n_) {
    throw DimsError("XMatrix: dim != n^2");
  }
}

XMatrix x_matrix(const ExpansionBlocks &blocks) {
  const std::size_t n = blocks.n();
  ComplexMatrix mat(n * n);
  for (std::size_t alpha = 0; alpha < n * n; ++alpha) {
    const ComplexMatrix &ba = blocks.block(alpha / n, alpha % n);
    for (std::size_t beta = alpha; beta < n * n; ++beta) {
      const ComplexMatrix &bb = blocks.block(beta / n, beta % n);
      const Complex value = hs_inner(ba, bb);
      mat(alpha, beta) = value;
      // Gram symmetry: fill the mirror entry so X is exactly Hermitian.
      mat(beta, alpha) = std::conj(value);
    }
    mat(alpha, alpha) = Complex(mat(alpha, alpha).real(), 0.0);
  }
  return XMatrix(n, std::move(mat));
}

Signature signature(const BipartiteDensityMatrix &rho, double rel_tol) {
  Signature sig = signature(rho, ComplexMatrix::identity(rho.n()), rel_tol);
  sig.basis_label = "computational";
  return sig;
}

Signature signature(const BipartiteDensityMatrix &rho,
                    const ComplexMatrix &a_basis, double rel_tol) {
  const ExpansionBlocks blocks = expand(rho, a_basis);
  const XMatrix x = x_matrix(blocks);
  const EigResult eig = hermitian_eig(x.mat());

  Signature sig;
  sig.eigenvalues = eig.eigenvalues;
  sig.rank = rank_by_eigs(eig.eigenvalues, rel_tol);
  sig.is_product = (sig.rank == 1);
  sig.purity = rho.purity();
  sig.basis_label =
      blocks.computational_basis() ? "computational" : "custom unitary";
  return sig;
}

ProductTestResult product_test(const BipartiteDensityMatrix &rho, double tol) {
  const DimsList dims{rho.n(), rho.m()};
  const ComplexMatrix rho_a = partial_trace(rho.mat(), dims, {0});
  const ComplexMatrix rho_b = partial_trace(rho.mat(), dims, {1});
  const double deviation = frobenius_distance(rho.mat(), kron(rho_a, rho_b));
  return ProductTestResult{deviation < tol, deviation};
}

} // namespace densig
