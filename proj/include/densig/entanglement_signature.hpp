// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "densig/complex_matrix.hpp"
#include "densig/quantum_states.hpp"
#include "densig/tensor_core.hpp"

namespace densig {

// Block expansion of a bipartite state over an orthonormal A basis:
// rho = sum_{i,i'} |A_i><A_i'| (x) block(i, i'). The blocks are m x m
// B-system operators; their (j, j') entries are the expansion coefficients
// p(i, i', j, j'). The basis used is kept so the expansion can be
// reassembled exactly.
class ExpansionBlocks {
public:
  ExpansionBlocks(std::size_t n, std::size_t m,
                  std::vector<std::vector<ComplexMatrix>> blocks,
                  ComplexMatrix a_basis);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  const ComplexMatrix &block(std::size_t i, std::size_t ip) const {
    return blocks_[i][ip];
  }
  Complex p(std::size_t i, std::size_t ip, std::size_t j,
            std::size_t jp) const {
    return blocks_[i][ip](j, jp);
  }

  // Unitary whose columns are the A basis vectors used by expand().
  const ComplexMatrix &a_basis() const { return a_basis_; }
  bool computational_basis() const;

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<ComplexMatrix>> blocks_;
  ComplexMatrix a_basis_;
};

// Expand rho over the computational A basis / a caller-supplied unitary A
// basis (columns are the basis vectors). A non-unitary basis throws
// BasisError.
ExpansionBlocks expand(const BipartiteDensityMatrix &rho);
ExpansionBlocks expand(const BipartiteDensityMatrix &rho,
                       const ComplexMatrix &a_basis);

// Reassemble sum_{i,i'} |A_i><A_i'| (x) block(i, i') in the basis the blocks
// were expanded in. Round-trips expand() up to round-off.
BipartiteDensityMatrix reconstruct(const ExpansionBlocks &blocks);

// Gram matrix of the expansion blocks under the Hilbert-Schmidt inner
// product, with block index pairs flattened row-major: entry
// (i1*n + i1', i2*n + i2') = tr(block(i1,i1') * block(i2,i2')^dag).
// Hermitian and positive semidefinite by construction; its trace equals
// tr(rho^2).
class XMatrix {
public:
  XMatrix(std::size_t n, ComplexMatrix mat);

  std::size_t n() const { return n_; }
  const ComplexMatrix &mat() const { return mat_; }

private:
  std::size_t n_;
  ComplexMatrix mat_;
};

XMatrix x_matrix(const ExpansionBlocks &blocks);

// Spectral summary of the X matrix. The rank counts eigenvalues above
// rel_tol of the largest; rank 1 means every block is proportional to the
// same B operator, i.e. the state is a product. No scalar degree is
// derived from the spectrum: the eigenvalue magnitudes mix entanglement
// structure with mixedness, so the raw spectrum and the purity are
// reported side by side instead.
struct Signature {
  std::vector<double> eigenvalues; // descending
  std::size_t rank = 0;
  bool is_product = false;
  double purity = 0.0;
  std::string basis_label;
};

Signature signature(const BipartiteDensityMatrix &rho,
                    double rel_tol = kDefaultRankRelTol);
Signature signature(const BipartiteDensityMatrix &rho,
                    const ComplexMatrix &a_basis,
                    double rel_tol = kDefaultRankRelTol);

// Independent product-state check: deviation = ||rho - tr_B(rho) (x)
// tr_A(rho)||_F. A state is a product exactly when the deviation vanishes.
struct ProductTestResult {
  bool is_product = false;
  double deviation = 0.0;
};

inline constexpr double kDefaultProductTol = 1e-8;

ProductTestResult product_test(const BipartiteDensityMatrix &rho,
                               double tol = kDefaultProductTol);

} // namespace densig
