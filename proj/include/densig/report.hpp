// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "densig/entanglement_signature.hpp"
#include "densig/program.hpp"
#include "densig/teleportation.hpp"

namespace densig {

// One line of the validation summary: every ket and rho the program defined,
// with the numbers its invariants were checked against.
struct StateSummary {
  std::string kind; // "ket" or "rho"
  std::string name;
  std::vector<std::size_t> dims;
  double norm = 0.0;   // kets
  double trace = 0.0;  // rhos
  double purity = 0.0; // rhos
};

struct AnalysisSection {
  std::string target;
  ExpansionBlocks blocks;
  ComplexMatrix x_mat;
  Signature sig;
  ProductTestResult ptest;
};

struct TeleportSection {
  std::string target;
  Complex c1;
  Complex c2;
  std::vector<TeleportOutcome> outcomes;
};

struct CompareSection {
  ChannelComparison cmp;
};

using ReportSection =
    std::variant<AnalysisSection, TeleportSection, CompareSection>;

struct Report {
  std::vector<StateSummary> states;
  std::vector<ReportSection> sections;
};

// Execute a validated program. Numeric and state errors are rethrown with
// the originating statement's line prefixed to the message.
Report run(const StateProgram &program,
           double rank_rel_tol = kDefaultRankRelTol);

// Deterministic fixed-precision text rendering: identical reports produce
// byte-identical text.
std::string render_report(const Report &report);

} // namespace densig
