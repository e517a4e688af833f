// SPDX-License-Identifier: Apache-2.0
#include "densig/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace densig {

namespace {

// Flat offsets contributed by one group of subsystems. `strides[s]` is the
// full-space stride of subsystem `positions[s]`; the table has one entry per
// flat index over the group's own dims.
std::vector<std::size_t> group_offsets(const DimsList &dims,
                                       const std::vector<std::size_t> &positions,
                                       const std::vector<std::size_t> &strides) {
  std::size_t count = 1;
  for (std::size_t pos : positions) {
    count *= dims[pos];
  }
  std::vector<std::size_t> offsets(count, 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    std::size_t offset = 0;
    // The group's own flat index is row-major over its positions.
    for (std::size_t s = positions.size(); s-- > 0;) {
      const std::size_t d = dims[positions[s]];
      offset += (rest % d) * strides[positions[s]];
      rest /= d;
    }
    offsets[flat] = offset;
  }
  return offsets;
}

std::vector<std::size_t> full_strides(const DimsList &dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t s = dims.size() - 1; s-- > 0;) {
    strides[s] = strides[s + 1] * dims[s + 1];
  }
  return strides;
}

void check_subsystem_selection(const DimsList &dims,
                               const std::vector<std::size_t> &selection,
                               const char *what) {
  if (selection.empty()) {
    throw DimsError(std::string(what) + ": empty subsystem selection");
  }
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i] >= dims.size()) {
      throw DimsError(std::string(what) + ": subsystem index out of range");
    }
    if (i > 0 && selection[i] <= selection[i - 1]) {
      throw DimsError(std::string(what) +
                      ": subsystem indices must be strictly increasing");
    }
  }
}

} // namespace

DimsList::DimsList(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw DimsError("DimsList: empty");
  }
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw DimsError("DimsList: zero subsystem dimension");
    }
  }
}

std::size_t DimsList::product() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                         std::multiplies<>());
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t ad = a.dim();
  const std::size_t bd = b.dim();
  ComplexMatrix out(ad * bd);
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < ad; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) {
        continue;
      }
      for (std::size_t k = 0; k < bd; ++k) {
        for (std::size_t l = 0; l < bd; ++l) {
          out(i * bd + k, j * bd + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, const DimsList &dims,
                            const std::vector<std::size_t> &keep) {
  if (dims.product() != m.dim()) {
    throw DimsError("partial_trace: dims product " +
                    std::to_string(dims.product()) + " != matrix dim " +
                    std::to_string(m.dim()));
  }
  check_subsystem_selection(dims, keep, "partial_trace");

  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) {
      traced.push_back(s);
    }
  }

  const auto strides = full_strides(dims);
  const auto keep_offsets = group_offsets(dims, keep, strides);
  const auto trace_offsets = group_offsets(dims, traced, strides);

  const std::size_t kept_dim = keep_offsets.size();
  ComplexMatrix out(kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r) {
    for (std::size_t c = 0; c < kept_dim; ++c) {
      Complex sum(0.0, 0.0);
      for (std::size_t t : trace_offsets) {
        sum += m(keep_offsets[r] + t, keep_offsets[c] + t);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix embed_op(const ComplexMatrix &op, const DimsList &dims,
                       const std::vector<std::size_t> &targets) {
  check_subsystem_selection(dims, targets, "embed_op");
  std::size_t target_dim = 1;
  for (std::size_t t : targets) {
    target_dim *= dims[t];
  }
  if (op.dim() != target_dim) {
    throw DimsError("embed_op: operator dim " + std::to_string(op.dim()) +
                    " != target dims product " + std::to_string(target_dim));
  }

  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (std::find(targets.begin(), targets.end(), s) == targets.end()) {
      rest.push_back(s);
    }
  }

  const auto strides = full_strides(dims);
  const auto target_offsets = group_offsets(dims, targets, strides);
  const auto rest_offsets = group_offsets(dims, rest, strides);

  ComplexMatrix out(dims.product());
  for (std::size_t tr = 0; tr < target_dim; ++tr) {
    for (std::size_t tc = 0; tc < target_dim; ++tc) {
      const Complex value = op(tr, tc);
      if (value == Complex(0.0, 0.0)) {
        continue;
      }
      for (std::size_t r : rest_offsets) {
        out(target_offsets[tr] + r, target_offsets[tc] + r) = value;
      }
    }
  }
  return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) {
    throw DimsError("hs_inner: dim mismatch");
  }
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += a.entries()[i] * std::conj(b.entries()[i]);
  }
  return sum;
}

EigResult hermitian_eig(const ComplexMatrix &h) {
  const std::size_t d = h.dim();
  const double scale = h.frobenius_norm();
  if (!h.is_hermitian(kHermTolFactor * scale)) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian within "
                            "tolerance");
  }

  ComplexMatrix a = h.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(d);

  auto off_norm = [&]() {
    double sum = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        sum += 2.0 * std::norm(a(p, q));
      }
    }
    return std::sqrt(sum);
  };

  const double target = 1e-14 * std::max(scale, 1e-300);
  const int max_sweeps = 60;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > max_sweeps) {
      throw NumericalError("hermitian_eig: Jacobi sweeps did not converge");
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex beta = a(p, q);
        const double abs_beta = std::abs(beta);
        if (abs_beta <= 1e-300) {
          continue;
        }
        // Unitary plane rotation zeroing a(p,q): the 2x2 Hermitian block
        // [[alpha, beta], [conj(beta), gamma]] is diagonalized by angle
        // theta with tan(2*theta) = 2|beta| / (alpha - gamma) and phase
        // e^{i*phi} = beta / |beta|.
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * abs_beta, alpha - gamma);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex phase = beta / abs_beta;
        const Complex sp = s * phase;             // s * e^{i phi}
        const Complex spc = s * std::conj(phase); // s * e^{-i phi}

        // Column update: A <- A G.
        for (std::size_t r = 0; r < d; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp + spc * arq;
          a(r, q) = -sp * arp + c * arq;
        }
        // Row update: A <- G^dag A.
        for (std::size_t col = 0; col < d; ++col) {
          const Complex apc = a(p, col);
          const Complex aqc = a(q, col);
          a(p, col) = c * apc + sp * aqc;
          a(q, col) = -spc * apc + c * aqc;
        }
        // Pin the rotated block to exact Hermitian form.
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        // Accumulate V <- V G.
        for (std::size_t r = 0; r < d; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp + spc * vrq;
          v(r, q) = -sp * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigResult result;
  result.eigenvalues.resize(d);
  result.eigenvectors = ComplexMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    result.eigenvalues[i] = a(order[i], order[i]).real();
    for (std::size_t r = 0; r < d; ++r) {
      result.eigenvectors(r, i) = v(r, order[i]);
    }
  }
  return result;
}

std::size_t rank_by_eigs(const std::vector<double> &eigenvalues,
                         double rel_tol) {
  double max_abs = 0.0;
  for (double lambda : eigenvalues) {
    max_abs = std::max(max_abs, std::abs(lambda));
  }
  if (max_abs == 0.0) {
    return 0;
  }
  const double threshold = rel_tol * max_abs;
  std::size_t count = 0;
  for (double lambda : eigenvalues) {
    if (std::abs(lambda) >= threshold) {
      ++count;
    }
  }
  return count;
}

} // namespace densig
