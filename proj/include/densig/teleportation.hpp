// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "densig/quantum_states.hpp"

namespace densig {

// Outcomes with probability below this floor report the probability but omit
// the post-measurement state instead of dividing by near-zero. Never reached
// by the two named channels, whose outcomes are all exactly 1/4.
inline constexpr double kProbabilityFloor = 1e-12;

// Single-qubit input state c1|0> + c2|1> held by the C system.
class InputStateC {
public:
  InputStateC(Complex c1, Complex c2);

  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }

private:
  Complex c1_;
  Complex c2_;
};

// One Bell-measurement branch: which of the four basis states fired, with
// what probability, and the B state left behind (no correction unitaries
// are applied; the raw post-measurement state is reported).
struct TeleportOutcome {
  int outcome_index = 0; // 1..4
  double probability = 0.0;
  std::optional<DensityMatrix> post_state_b;
};

// The four maximally entangled two-qubit measurement states on A (x) C:
//   1: (|00> + |11>)/sqrt(2)   2: (|00> - |11>)/sqrt(2)
//   3: (|01> + |10>)/sqrt(2)   4: (|01> - |10>)/sqrt(2)
// Mutually orthonormal and complete.
std::array<PureState, 4> bell_basis();

// Joint measurement of A and C on channel (x) |psi_C><psi_C| over the
// A (x) B (x) C space. Accepts any 2 (x) 2 channel. Returns the four
// outcomes in basis order; probabilities sum to one.
std::vector<TeleportOutcome> teleport(const BipartiteDensityMatrix &channel,
                                      const InputStateC &input);

// Off-diagonal l1 mass |rho_01| + |rho_10| of a qubit state: the carrier of
// relative-phase information in the post-measurement B states.
double coherence_info(const DensityMatrix &rho_b);

// Side-by-side run of the classically correlated channel and the Bell
// channel on the same input, with probability-weighted aggregate coherence
// per channel.
struct ChannelComparison {
  InputStateC input;
  std::vector<TeleportOutcome> classical_outcomes;
  std::vector<TeleportOutcome> bell_outcomes;
  double classical_coherence = 0.0;
  double bell_coherence = 0.0;
};

ChannelComparison channel_comparison(const InputStateC &input);

} // namespace densig
