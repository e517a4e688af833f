// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "densig/complex_matrix.hpp"
#include "densig/quantum_states.hpp"

namespace densig {

// State-description language, line oriented with '#' comments:
//
//   program   := line*
//   line      := dims | ketdef | rhodef | action | comment | blank
//   dims      := "dims" INT INT
//   ketdef    := "ket" NAME "=" term ("+" term)*
//   term      := complex "|" INT ("," INT)* ">"
//   complex   := "(" FLOAT ("+"|"-") FLOAT "i" ")" | FLOAT
//   rhodef    := "rho" NAME "=" rexpr
//   rexpr     := NAME | "proj(" NAME ")" | "kron(" rexpr "," rexpr ")"
//              | "mix" (FLOAT rexpr)+ | "matrix" "[" row (";" row)* "]"
//              | "classical_corr" | "bell"
//              | "tripartite(" FLOAT ("," FLOAT)* ")" "." ("AB"|"AC"|"BC")
//   row       := complex+
//   action    := "analyze" NAME | "teleport" NAME "with" complex complex
//              | "compare" complex complex
//
// Bare floats are real-valued complex numbers. A NAME rexpr references a
// rho defined on an earlier line; proj() references a ket. "dims" defaults
// to 2 2 when omitted.

struct SourceLocation {
  int line = 0;
  int col = 0;
};

struct KetTerm {
  Complex amplitude;
  std::vector<std::size_t> labels; // one basis label per factor
};

struct RhoExpr;

struct NameRef {
  std::string name;
};
struct ProjExpr {
  std::string ket;
};
struct KronExpr {
  std::unique_ptr<RhoExpr> left;
  std::unique_ptr<RhoExpr> right;
};
struct MixTerm {
  double weight;
  std::unique_ptr<RhoExpr> part;
};
struct MixExpr {
  std::vector<MixTerm> terms;
};
struct MatrixExpr {
  std::size_t dim = 0;
  std::vector<Complex> entries; // row-major, dim x dim
};
struct ClassicalCorrExpr {};
struct BellExpr {};
struct TripartiteExpr {
  std::vector<double> weights;
  PairSelector keep = PairSelector::AB;
};

struct RhoExpr {
  std::variant<NameRef, ProjExpr, KronExpr, MixExpr, MatrixExpr,
               ClassicalCorrExpr, BellExpr, TripartiteExpr>
      node;
  SourceLocation loc;
};

struct DimsStatement {
  std::size_t n = 2;
  std::size_t m = 2;
  SourceLocation loc;
};
struct KetDef {
  std::string name;
  std::vector<KetTerm> terms;
  SourceLocation loc;
};
struct RhoDef {
  std::string name;
  RhoExpr expr;
  SourceLocation loc;
};
struct AnalyzeAction {
  std::string target;
  SourceLocation loc;
};
struct TeleportAction {
  std::string target;
  Complex c1;
  Complex c2;
  SourceLocation loc;
};
struct CompareAction {
  Complex c1;
  Complex c2;
  SourceLocation loc;
};

using Statement = std::variant<DimsStatement, KetDef, RhoDef, AnalyzeAction,
                               TeleportAction, CompareAction>;

struct StateProgram {
  std::vector<Statement> statements;
};

// Parse and validate a program. Throws ParseError for syntax, NameError for
// undefined / duplicate names, DimsError for dimension inconsistencies that
// are visible statically (ragged ket terms, labels outside declared dims,
// non-square matrix literals).
StateProgram parse_state_spec(std::string_view text);

// Render a program back to source text that parses to an equivalent program.
std::string canonical_text(const StateProgram &program);

} // namespace densig
