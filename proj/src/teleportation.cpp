// SPDX-License-Identifier: Apache-2.0
#include "densig/teleportation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "densig/tensor_core.hpp"

namespace densig {

InputStateC::InputStateC(Complex c1, Complex c2) : c1_(c1), c2_(c2) {
  const double norm_sq = std::norm(c1_) + std::norm(c2_);
  if (!std::isfinite(norm_sq) ||
      std::abs(std::sqrt(norm_sq) - 1.0) > kStateNormTol) {
    throw StateError("InputStateC: |c1|^2 + |c2|^2 != 1");
  }
}

std::array<PureState, 4> bell_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex z(0.0, 0.0);
  const Complex p(r, 0.0);
  const Complex n(-r, 0.0);
  const DimsList dims{2, 2};
  return {
      PureState(dims, {p, z, z, p}),
      PureState(dims, {p, z, z, n}),
      PureState(dims, {z, p, p, z}),
      PureState(dims, {z, p, n, z}),
  };
}

std::vector<TeleportOutcome> teleport(const BipartiteDensityMatrix &channel,
                                      const InputStateC &input) {
  if (channel.n() != 2 || channel.m() != 2) {
    throw DimsError("teleport: channel must be 2 (x) 2");
  }

  const PureState psi_c(DimsList{2}, {input.c1(), input.c2()});
  const DensityMatrix rho_c = density_from_pure(psi_c);

  // A (x) B (x) C with the fixed A-major flat layout: appending C to the
  // A (x) B channel keeps every existing index in place.
  const DimsList dims{2, 2, 2};
  const ComplexMatrix rho_total = kron(channel.mat(), rho_c.mat());

  const std::array<PureState, 4> basis = bell_basis();
  std::vector<TeleportOutcome> outcomes;
  outcomes.reserve(4);
  for (int k = 0; k < 4; ++k) {
    const DensityMatrix projector_ac = density_from_pure(basis[k]);
    const ComplexMatrix p_k = embed_op(projector_ac.mat(), dims, {0, 2});
    const ComplexMatrix projected = p_k * rho_total * p_k;

    TeleportOutcome outcome;
    outcome.outcome_index = k + 1;
    outcome.probability = projected.trace().real();
    if (outcome.probability >= kProbabilityFloor) {
      ComplexMatrix b = partial_trace(projected, dims, {1});
      b *= Complex(1.0 / outcome.probability, 0.0);
      outcome.post_state_b = DensityMatrix(DimsList{2}, std::move(b));
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

double coherence_info(const DensityMatrix &rho_b) {
  if (rho_b.dim() != 2) {
    throw DimsError("coherence_info: state must be a single qubit");
  }
  return std::abs(rho_b.mat()(0, 1)) + std::abs(rho_b.mat()(1, 0));
}

namespace {

double aggregate_coherence(const std::vector<TeleportOutcome> &outcomes) {
  double total = 0.0;
  for (const TeleportOutcome &o : outcomes) {
    if (o.post_state_b) {
      total += o.probability * coherence_info(*o.post_state_b);
    }
  }
  return total;
}

} // namespace

ChannelComparison channel_comparison(const InputStateC &input) {
  const BipartiteDensityMatrix bell(2, 2,
                                    density_from_pure(bell_channel()).mat());

  ChannelComparison cmp{input, {}, {}, 0.0, 0.0};
  cmp.classical_outcomes = teleport(classical_corr_channel(), input);
  cmp.bell_outcomes = teleport(bell, input);
  cmp.classical_coherence = aggregate_coherence(cmp.classical_outcomes);
  cmp.bell_coherence = aggregate_coherence(cmp.bell_outcomes);

  // The two named channels have closed-form aggregates; a miss here means
  // the simulation itself went wrong.
  const double expected_bell =
      2.0 * std::abs(input.c1() * std::conj(input.c2()));
  if (std::abs(cmp.classical_coherence) > 1e-10 ||
      std::abs(cmp.bell_coherence - expected_bell) > 1e-10) {
    throw NumericalError("channel_comparison: aggregate coherence deviates "
                         "from closed form");
  }
  return cmp;
}

} // namespace densig
