// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>
#include <variant>

#include "densig/errors.hpp"
#include "densig/program.hpp"

using namespace densig;

namespace {

bool rexpr_equal(const RhoExpr &a, const RhoExpr &b);

struct RexprEq {
  const RhoExpr &other;

  bool operator()(const NameRef &n) const {
    const auto *o = std::get_if<NameRef>(&other.node);
    return o && o->name == n.name;
  }
  bool operator()(const ProjExpr &n) const {
    const auto *o = std::get_if<ProjExpr>(&other.node);
    return o && o->ket == n.ket;
  }
  bool operator()(const KronExpr &n) const {
    const auto *o = std::get_if<KronExpr>(&other.node);
    return o && rexpr_equal(*n.left, *o->left) &&
           rexpr_equal(*n.right, *o->right);
  }
  bool operator()(const MixExpr &n) const {
    const auto *o = std::get_if<MixExpr>(&other.node);
    if (!o || o->terms.size() != n.terms.size()) {
      return false;
    }
    for (std::size_t i = 0; i < n.terms.size(); ++i) {
      if (n.terms[i].weight != o->terms[i].weight ||
          !rexpr_equal(*n.terms[i].part, *o->terms[i].part)) {
        return false;
      }
    }
    return true;
  }
  bool operator()(const MatrixExpr &n) const {
    const auto *o = std::get_if<MatrixExpr>(&other.node);
    return o && o->dim == n.dim && o->entries == n.entries;
  }
  bool operator()(const ClassicalCorrExpr &) const {
    return std::holds_alternative<ClassicalCorrExpr>(other.node);
  }
  bool operator()(const BellExpr &) const {
    return std::holds_alternative<BellExpr>(other.node);
  }
  bool operator()(const TripartiteExpr &n) const {
    const auto *o = std::get_if<TripartiteExpr>(&other.node);
    return o && o->weights == n.weights && o->keep == n.keep;
  }
};

bool rexpr_equal(const RhoExpr &a, const RhoExpr &b) {
  return std::visit(RexprEq{b}, a.node);
}

struct StatementEq {
  const Statement &other;

  bool operator()(const DimsStatement &s) const {
    const auto *o = std::get_if<DimsStatement>(&other);
    return o && o->n == s.n && o->m == s.m;
  }
  bool operator()(const KetDef &s) const {
    const auto *o = std::get_if<KetDef>(&other);
    if (!o || o->name != s.name || o->terms.size() != s.terms.size()) {
      return false;
    }
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (o->terms[i].amplitude != s.terms[i].amplitude ||
          o->terms[i].labels != s.terms[i].labels) {
        return false;
      }
    }
    return true;
  }
  bool operator()(const RhoDef &s) const {
    const auto *o = std::get_if<RhoDef>(&other);
    return o && o->name == s.name && rexpr_equal(s.expr, o->expr);
  }
  bool operator()(const AnalyzeAction &s) const {
    const auto *o = std::get_if<AnalyzeAction>(&other);
    return o && o->target == s.target;
  }
  bool operator()(const TeleportAction &s) const {
    const auto *o = std::get_if<TeleportAction>(&other);
    return o && o->target == s.target && o->c1 == s.c1 && o->c2 == s.c2;
  }
  bool operator()(const CompareAction &s) const {
    const auto *o = std::get_if<CompareAction>(&other);
    return o && o->c1 == s.c1 && o->c2 == s.c2;
  }
};

bool program_equal(const StateProgram &a, const StateProgram &b) {
  if (a.statements.size() != b.statements.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!std::visit(StatementEq{b.statements[i]}, a.statements[i])) {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("three-statement program") {
  const StateProgram program =
      parse_state_spec("dims 2 2\nrho R = classical_corr\nanalyze R\n");
  REQUIRE(program.statements.size() == 3);
  CHECK(std::holds_alternative<DimsStatement>(program.statements[0]));
  const auto &def = std::get<RhoDef>(program.statements[1]);
  CHECK(def.name == "R");
  CHECK(std::holds_alternative<ClassicalCorrExpr>(def.expr.node));
  CHECK(std::get<AnalyzeAction>(program.statements[2]).target == "R");
}

TEST_CASE("ket definition with complex literals") {
  const StateProgram program = parse_state_spec(
      "ket k = (0.7071+0i)|0,0> + (0.7071+0i)|1,1>\n"
      "rho R = proj(k)\n"
      "analyze R\n");
  REQUIRE(program.statements.size() == 3);
  const auto &ket = std::get<KetDef>(program.statements[0]);
  REQUIRE(ket.terms.size() == 2);
  CHECK(ket.terms[0].amplitude == Complex(0.7071, 0.0));
  CHECK(ket.terms[0].labels == std::vector<std::size_t>{0, 0});
  CHECK(ket.terms[1].labels == std::vector<std::size_t>{1, 1});
  CHECK(std::get<ProjExpr>(std::get<RhoDef>(program.statements[1]).expr.node)
            .ket == "k");
}

TEST_CASE("complex literal shapes") {
  const StateProgram program = parse_state_spec(
      "compare (0.5-0.25i) -0.8\n"
      "compare (-0.6+0.0i) (0.0+0.8i)\n");
  const auto &first = std::get<CompareAction>(program.statements[0]);
  CHECK(first.c1 == Complex(0.5, -0.25));
  CHECK(first.c2 == Complex(-0.8, 0.0));
  const auto &second = std::get<CompareAction>(program.statements[1]);
  CHECK(second.c1 == Complex(-0.6, 0.0));
  CHECK(second.c2 == Complex(0.0, 0.8));
}

TEST_CASE("nested constructors") {
  const StateProgram program = parse_state_spec(
      "rho A = matrix [ 1 0 ; 0 0 ]\n"
      "rho B = matrix [ 0 0 ; 0 1 ]\n"
      "rho R = mix 0.5 kron(A,B) 0.5 kron(B,A)\n"
      "rho T = tripartite(0.25, 0.75).AC\n");
  const auto &mix =
      std::get<MixExpr>(std::get<RhoDef>(program.statements[2]).expr.node);
  REQUIRE(mix.terms.size() == 2);
  CHECK(mix.terms[0].weight == 0.5);
  CHECK(std::holds_alternative<KronExpr>(mix.terms[0].part->node));

  const auto &tri = std::get<TripartiteExpr>(
      std::get<RhoDef>(program.statements[3]).expr.node);
  CHECK(tri.weights == std::vector<double>{0.25, 0.75});
  CHECK(tri.keep == PairSelector::AC);
}

TEST_CASE("undefined and misused names") {
  // The kron arguments reference rhos that were never defined.
  try {
    parse_state_spec("rho R = mix 0.5 kron(A,B)\n");
    FAIL("expected NameError");
  } catch (const NameError &e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 22); // points at 'A'
  }

  CHECK_THROWS_AS(parse_state_spec("analyze R\n"), NameError);
  CHECK_THROWS_AS(parse_state_spec("ket k = 1|0>\nrho R = proj(k)\n"
                                   "rho S = kron(k, k)\n"),
                  NameError); // k is a ket, not a rho
  CHECK_THROWS_AS(parse_state_spec("ket k = 1|0>\nrho R = proj(R)\n"),
                  NameError);
  CHECK_THROWS_AS(
      parse_state_spec("rho R = bell\nrho R = classical_corr\n"), NameError);
  CHECK_THROWS_AS(parse_state_spec("rho bell = classical_corr\n"), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_state_spec("dims 2 2\nrho R = classical_corr\nanalyze @\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 9);
  }

  try {
    parse_state_spec("ket k = 1|0,0\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 14); // end of line, where '>' was expected
  }

  CHECK_THROWS_AS(parse_state_spec("teleport R 0.6 0.8\n"), NameError);
  CHECK_THROWS_AS(
      parse_state_spec("rho R = bell\nteleport R 0.6 0.8\n"), ParseError);
  CHECK_THROWS_AS(parse_state_spec("frobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_state_spec("rho R = bell extra\n"), ParseError);
  CHECK_THROWS_AS(parse_state_spec("dims 2.5 2\n"), ParseError);
  CHECK_THROWS_AS(parse_state_spec("rho R = mix\n"), ParseError);
  CHECK_THROWS_AS(
      parse_state_spec("rho R = tripartite(0.5, 0.5).XY\n"), ParseError);
}

TEST_CASE("static dimension checks") {
  CHECK_THROWS_AS(parse_state_spec("dims 0 2\n"), DimsError);
  CHECK_THROWS_AS(parse_state_spec("ket k = 1|0,0> + 1|0>\n"), DimsError);
  CHECK_THROWS_AS(parse_state_spec("ket k = 1|2,0>\n"), DimsError);
  CHECK_NOTHROW(parse_state_spec("dims 3 2\nket k = 1|2,0>\n"));
  CHECK_THROWS_AS(parse_state_spec("rho M = matrix [ 1 0 ; 0 ]\n"), DimsError);
}

TEST_CASE("comments and blank lines are ignored") {
  const StateProgram program = parse_state_spec(
      "# header comment\n"
      "\n"
      "dims 2 2   # trailing comment\n"
      "   \t\n"
      "rho R = bell\n");
  CHECK(program.statements.size() == 2);
}

TEST_CASE("canonical text round-trips the parse tree") {
  const char *samples[] = {
      "dims 2 2\nrho R = classical_corr\nanalyze R\n",

      "ket k = (0.70710678118654752+0i)|0,0> + (0.70710678118654752+0i)|1,1>\n"
      "rho R = proj(k)\nanalyze R\nteleport R with 0.6 (0.0+0.8i)\n",

      "dims 2 2\n"
      "rho A = matrix [ (0.5+0i) (0.1-0.2i) ; (0.1+0.2i) (0.5+0i) ]\n"
      "rho B = matrix [ 1 0 ; 0 0 ]\n"
      "rho R = mix 0.25 kron(A,B) 0.75 kron(B,A)\n"
      "analyze R\ncompare (0.6+0i) (0.8-0i)\n",

      "rho T = tripartite(0.125, 0.875).BC\nanalyze T\n",

      "dims 3 2\nket k = 1|2,1>\nrho R = proj(k)\n",
  };
  for (const char *text : samples) {
    CAPTURE(text);
    const StateProgram first = parse_state_spec(text);
    const std::string rendered = canonical_text(first);
    const StateProgram second = parse_state_spec(rendered);
    CHECK(program_equal(first, second));
    // Rendering is idempotent once canonical.
    CHECK(canonical_text(second) == rendered);
  }
}
