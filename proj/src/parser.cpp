// SPDX-License-Identifier: Apache-2.0
#include "densig/program.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "densig/errors.hpp"

namespace densig {

namespace {

enum class TokKind {
  Ident,
  Number,
  LParen,
  RParen,
  Plus,
  Minus,
  Pipe,
  Greater,
  Comma,
  Dot,
  LBracket,
  RBracket,
  Semicolon,
  Equals,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  double value = 0.0;
  int line = 0;
  int col = 0;
};

const std::set<std::string> kKeywords = {
    "dims",    "ket",  "rho",            "analyze", "teleport",
    "compare", "with", "proj",           "kron",    "mix",
    "matrix",  "bell", "classical_corr", "tripartite",
    "i",       "AB",   "AC",             "BC"};

std::vector<Token> lex_line(const std::string &text, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      break;
    }
    const int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      tokens.push_back(
          {TokKind::Ident, text.substr(i, j - i), 0.0, line_no, col});
      i = j;
      continue;
    }
    const bool starts_number =
        std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])));
    if (starts_number) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) ||
              text[j] == '.')) {
        ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
          ++k;
        }
        if (k < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[k]))) {
            ++k;
          }
          j = k;
        }
      }
      const std::string number = text.substr(i, j - i);
      char *end = nullptr;
      const double value = std::strtod(number.c_str(), &end);
      if (end == nullptr || *end != '\0') {
        throw ParseError(line_no, col, "malformed number '" + number + "'");
      }
      tokens.push_back({TokKind::Number, number, value, line_no, col});
      i = j;
      continue;
    }
    TokKind kind;
    switch (c) {
    case '(':
      kind = TokKind::LParen;
      break;
    case ')':
      kind = TokKind::RParen;
      break;
    case '+':
      kind = TokKind::Plus;
      break;
    case '-':
      kind = TokKind::Minus;
      break;
    case '|':
      kind = TokKind::Pipe;
      break;
    case '>':
      kind = TokKind::Greater;
      break;
    case ',':
      kind = TokKind::Comma;
      break;
    case '.':
      kind = TokKind::Dot;
      break;
    case '[':
      kind = TokKind::LBracket;
      break;
    case ']':
      kind = TokKind::RBracket;
      break;
    case ';':
      kind = TokKind::Semicolon;
      break;
    case '=':
      kind = TokKind::Equals;
      break;
    default:
      throw ParseError(line_no, col,
                       std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, std::string(1, c), 0.0, line_no, col});
    ++i;
  }
  tokens.push_back({TokKind::End, "", 0.0, line_no,
                    static_cast<int>(text.size()) + 1});
  return tokens;
}

const char *describe(TokKind kind) {
  switch (kind) {
  case TokKind::Ident:
    return "name";
  case TokKind::Number:
    return "number";
  case TokKind::LParen:
    return "'('";
  case TokKind::RParen:
    return "')'";
  case TokKind::Plus:
    return "'+'";
  case TokKind::Minus:
    return "'-'";
  case TokKind::Pipe:
    return "'|'";
  case TokKind::Greater:
    return "'>'";
  case TokKind::Comma:
    return "','";
  case TokKind::Dot:
    return "'.'";
  case TokKind::LBracket:
    return "'['";
  case TokKind::RBracket:
    return "']'";
  case TokKind::Semicolon:
    return "';'";
  case TokKind::Equals:
    return "'='";
  case TokKind::End:
    return "end of line";
  }
  return "?";
}

enum class SymbolKind { Ket, Rho };

// Per-call parse state: one cursor over the current line plus the accumulated
// symbol table and active dims declaration.
class Parser {
public:
  StateProgram parse(std::string_view text) {
    StateProgram program;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
      ++line_no;
      tokens_ = lex_line(line, line_no);
      pos_ = 0;
      if (peek().kind == TokKind::End) {
        continue;
      }
      program.statements.push_back(parse_statement());
      expect(TokKind::End, "end of statement");
    }
    return program;
  }

private:
  const Token &peek() const { return tokens_[pos_]; }

  Token advance() {
    const Token tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) {
      ++pos_; // the trailing End token is sticky
    }
    return tok;
  }

  Token expect(TokKind kind, const char *what) {
    if (peek().kind != kind) {
      throw ParseError(peek().line, peek().col,
                       std::string("expected ") + what + ", found " +
                           describe(peek().kind));
    }
    return advance();
  }

  Statement parse_statement() {
    const Token head = expect(TokKind::Ident, "statement keyword");
    if (head.text == "dims") {
      return parse_dims(head);
    }
    if (head.text == "ket") {
      return parse_ketdef(head);
    }
    if (head.text == "rho") {
      return parse_rhodef(head);
    }
    if (head.text == "analyze") {
      AnalyzeAction action;
      action.target = rho_name_ref();
      action.loc = {head.line, head.col};
      return action;
    }
    if (head.text == "teleport") {
      TeleportAction action;
      action.target = rho_name_ref();
      const Token with = expect(TokKind::Ident, "'with'");
      if (with.text != "with") {
        throw ParseError(with.line, with.col, "expected 'with'");
      }
      action.c1 = parse_complex();
      action.c2 = parse_complex();
      action.loc = {head.line, head.col};
      return action;
    }
    if (head.text == "compare") {
      CompareAction action;
      action.c1 = parse_complex();
      action.c2 = parse_complex();
      action.loc = {head.line, head.col};
      return action;
    }
    throw ParseError(head.line, head.col,
                     "unknown statement '" + head.text + "'");
  }

  Statement parse_dims(const Token &head) {
    DimsStatement st;
    st.n = parse_positive_int("subsystem dimension");
    st.m = parse_positive_int("subsystem dimension");
    st.loc = {head.line, head.col};
    cur_n_ = st.n;
    cur_m_ = st.m;
    return st;
  }

  Statement parse_ketdef(const Token &head) {
    KetDef def;
    def.name = define_name(SymbolKind::Ket);
    def.loc = {head.line, head.col};
    expect(TokKind::Equals, "'='");
    def.terms.push_back(parse_ket_term());
    while (peek().kind == TokKind::Plus) {
      advance();
      def.terms.push_back(parse_ket_term());
    }
    const std::size_t arity = def.terms.front().labels.size();
    for (const KetTerm &term : def.terms) {
      if (term.labels.size() != arity) {
        throw DimsError("line " + std::to_string(head.line) +
                        ": ket terms disagree on factor count");
      }
    }
    if (arity == 2) {
      for (const KetTerm &term : def.terms) {
        if (term.labels[0] >= cur_n_ || term.labels[1] >= cur_m_) {
          throw DimsError("line " + std::to_string(head.line) +
                          ": ket label outside declared dims " +
                          std::to_string(cur_n_) + " " +
                          std::to_string(cur_m_));
        }
      }
    }
    return def;
  }

  Statement parse_rhodef(const Token &head) {
    RhoDef def;
    def.name = define_name(SymbolKind::Rho);
    expect(TokKind::Equals, "'='");
    def.expr = parse_rexpr();
    def.loc = {head.line, head.col};
    return def;
  }

  KetTerm parse_ket_term() {
    KetTerm term;
    term.amplitude = parse_complex();
    expect(TokKind::Pipe, "'|'");
    term.labels.push_back(parse_label());
    while (peek().kind == TokKind::Comma) {
      advance();
      term.labels.push_back(parse_label());
    }
    expect(TokKind::Greater, "'>'");
    return term;
  }

  std::size_t parse_label() {
    const Token tok = expect(TokKind::Number, "basis label");
    const double v = tok.value;
    if (v != std::floor(v) || v < 0.0) {
      throw ParseError(tok.line, tok.col, "basis label must be a "
                                          "non-negative integer");
    }
    return static_cast<std::size_t>(v);
  }

  std::size_t parse_positive_int(const char *what) {
    const Token tok = expect(TokKind::Number, what);
    const double v = tok.value;
    if (v != std::floor(v)) {
      throw ParseError(tok.line, tok.col,
                       std::string(what) + " must be an integer");
    }
    if (v < 1.0) {
      throw DimsError("line " + std::to_string(tok.line) + ", col " +
                      std::to_string(tok.col) + ": " + what +
                      " must be positive");
    }
    return static_cast<std::size_t>(v);
  }

  double parse_float() {
    bool negative = false;
    if (peek().kind == TokKind::Minus) {
      advance();
      negative = true;
    } else if (peek().kind == TokKind::Plus) {
      advance();
    }
    const Token tok = expect(TokKind::Number, "number");
    return negative ? -tok.value : tok.value;
  }

  bool at_float() const {
    return peek().kind == TokKind::Number || peek().kind == TokKind::Minus;
  }

  Complex parse_complex() {
    if (peek().kind == TokKind::LParen) {
      advance();
      const double re = parse_float();
      double im = 0.0;
      if (peek().kind == TokKind::Plus) {
        advance();
        im = parse_imag_magnitude();
      } else if (peek().kind == TokKind::Minus) {
        advance();
        im = -parse_imag_magnitude();
      } else {
        throw ParseError(peek().line, peek().col,
                         "expected '+' or '-' before imaginary part");
      }
      expect(TokKind::RParen, "')'");
      return Complex(re, im);
    }
    return Complex(parse_float(), 0.0);
  }

  double parse_imag_magnitude() {
    const Token tok = expect(TokKind::Number, "imaginary part");
    const Token unit = expect(TokKind::Ident, "'i'");
    if (unit.text != "i") {
      throw ParseError(unit.line, unit.col, "expected 'i' after imaginary "
                                            "part");
    }
    return tok.value;
  }

  RhoExpr parse_rexpr() {
    const Token head = peek();
    if (head.kind != TokKind::Ident) {
      throw ParseError(head.line, head.col, "expected a state expression");
    }
    RhoExpr expr;
    expr.loc = {head.line, head.col};

    if (head.text == "proj") {
      advance();
      expect(TokKind::LParen, "'('");
      ProjExpr node;
      node.ket = ket_name_ref();
      expect(TokKind::RParen, "')'");
      expr.node = std::move(node);
      return expr;
    }
    if (head.text == "kron") {
      advance();
      expect(TokKind::LParen, "'('");
      KronExpr node;
      node.left = std::make_unique<RhoExpr>(parse_rexpr());
      expect(TokKind::Comma, "','");
      node.right = std::make_unique<RhoExpr>(parse_rexpr());
      expect(TokKind::RParen, "')'");
      expr.node = std::move(node);
      return expr;
    }
    if (head.text == "mix") {
      advance();
      MixExpr node;
      if (!at_float()) {
        throw ParseError(peek().line, peek().col,
                         "mix needs at least one weighted term");
      }
      while (at_float()) {
        MixTerm term;
        term.weight = parse_float();
        term.part = std::make_unique<RhoExpr>(parse_rexpr());
        node.terms.push_back(std::move(term));
      }
      expr.node = std::move(node);
      return expr;
    }
    if (head.text == "matrix") {
      advance();
      expr.node = parse_matrix_literal(head);
      return expr;
    }
    if (head.text == "classical_corr") {
      advance();
      expr.node = ClassicalCorrExpr{};
      return expr;
    }
    if (head.text == "bell") {
      advance();
      expr.node = BellExpr{};
      return expr;
    }
    if (head.text == "tripartite") {
      advance();
      expect(TokKind::LParen, "'('");
      TripartiteExpr node;
      node.weights.push_back(parse_float());
      while (peek().kind == TokKind::Comma) {
        advance();
        node.weights.push_back(parse_float());
      }
      expect(TokKind::RParen, "')'");
      expect(TokKind::Dot, "'.'");
      const Token pair = expect(TokKind::Ident, "pair selector AB, AC or BC");
      if (pair.text == "AB") {
        node.keep = PairSelector::AB;
      } else if (pair.text == "AC") {
        node.keep = PairSelector::AC;
      } else if (pair.text == "BC") {
        node.keep = PairSelector::BC;
      } else {
        throw ParseError(pair.line, pair.col,
                         "expected pair selector AB, AC or BC");
      }
      expr.node = std::move(node);
      return expr;
    }

    // Plain name: reference to a rho defined earlier.
    NameRef node;
    node.name = rho_name_ref();
    expr.node = std::move(node);
    return expr;
  }

  MatrixExpr parse_matrix_literal(const Token &head) {
    expect(TokKind::LBracket, "'['");
    MatrixExpr node;
    std::vector<std::vector<Complex>> rows;
    rows.emplace_back();
    for (;;) {
      if (peek().kind == TokKind::RBracket) {
        advance();
        break;
      }
      if (peek().kind == TokKind::Semicolon) {
        advance();
        rows.emplace_back();
        continue;
      }
      rows.back().push_back(parse_complex());
    }
    if (rows.back().empty() && rows.size() > 1) {
      rows.pop_back(); // tolerate a trailing ';'
    }
    const std::size_t dim = rows.size();
    for (const auto &row : rows) {
      if (row.size() != dim) {
        throw DimsError("line " + std::to_string(head.line) +
                        ": matrix literal must be square");
      }
    }
    node.dim = dim;
    for (const auto &row : rows) {
      node.entries.insert(node.entries.end(), row.begin(), row.end());
    }
    return node;
  }

  std::string define_name(SymbolKind kind) {
    const Token tok = expect(TokKind::Ident, "name");
    if (kKeywords.count(tok.text) != 0) {
      throw ParseError(tok.line, tok.col,
                       "'" + tok.text + "' is a reserved word");
    }
    if (symbols_.count(tok.text) != 0) {
      throw NameError(tok.line, tok.col,
                      "name '" + tok.text + "' already defined");
    }
    symbols_[tok.text] = kind;
    return tok.text;
  }

  std::string name_ref(SymbolKind expected, const char *kind_word) {
    const Token tok = expect(TokKind::Ident, "name");
    const auto it = symbols_.find(tok.text);
    if (it == symbols_.end()) {
      throw NameError(tok.line, tok.col, "undefined name '" + tok.text + "'");
    }
    if (it->second != expected) {
      throw NameError(tok.line, tok.col,
                      "'" + tok.text + "' is not a " + kind_word);
    }
    return tok.text;
  }

  std::string rho_name_ref() { return name_ref(SymbolKind::Rho, "rho"); }
  std::string ket_name_ref() { return name_ref(SymbolKind::Ket, "ket"); }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, SymbolKind> symbols_;
  std::size_t cur_n_ = 2;
  std::size_t cur_m_ = 2;
};

std::string fmt_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_complex_literal(Complex z) {
  const double im = z.imag();
  std::string out = "(" + fmt_float(z.real());
  out += (im < 0.0) ? "-" : "+";
  out += fmt_float(std::abs(im));
  out += "i)";
  return out;
}

std::string rexpr_text(const RhoExpr &expr);

struct RexprPrinter {
  std::string operator()(const NameRef &node) const { return node.name; }
  std::string operator()(const ProjExpr &node) const {
    return "proj(" + node.ket + ")";
  }
  std::string operator()(const KronExpr &node) const {
    return "kron(" + rexpr_text(*node.left) + ", " + rexpr_text(*node.right) +
           ")";
  }
  std::string operator()(const MixExpr &node) const {
    std::string out = "mix";
    for (const MixTerm &term : node.terms) {
      out += " " + fmt_float(term.weight) + " " + rexpr_text(*term.part);
    }
    return out;
  }
  std::string operator()(const MatrixExpr &node) const {
    std::string out = "matrix [";
    for (std::size_t r = 0; r < node.dim; ++r) {
      if (r > 0) {
        out += " ;";
      }
      for (std::size_t c = 0; c < node.dim; ++c) {
        out += " " + fmt_complex_literal(node.entries[r * node.dim + c]);
      }
    }
    out += " ]";
    return out;
  }
  std::string operator()(const ClassicalCorrExpr &) const {
    return "classical_corr";
  }
  std::string operator()(const BellExpr &) const { return "bell"; }
  std::string operator()(const TripartiteExpr &node) const {
    std::string out = "tripartite(";
    for (std::size_t i = 0; i < node.weights.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += fmt_float(node.weights[i]);
    }
    out += ").";
    out += to_string(node.keep);
    return out;
  }
};

std::string rexpr_text(const RhoExpr &expr) {
  return std::visit(RexprPrinter{}, expr.node);
}

struct StatementPrinter {
  std::string operator()(const DimsStatement &st) const {
    return "dims " + std::to_string(st.n) + " " + std::to_string(st.m);
  }
  std::string operator()(const KetDef &st) const {
    std::string out = "ket " + st.name + " =";
    for (std::size_t t = 0; t < st.terms.size(); ++t) {
      out += (t == 0) ? " " : " + ";
      out += fmt_complex_literal(st.terms[t].amplitude);
      out += "|";
      for (std::size_t l = 0; l < st.terms[t].labels.size(); ++l) {
        if (l > 0) {
          out += ",";
        }
        out += std::to_string(st.terms[t].labels[l]);
      }
      out += ">";
    }
    return out;
  }
  std::string operator()(const RhoDef &st) const {
    return "rho " + st.name + " = " + rexpr_text(st.expr);
  }
  std::string operator()(const AnalyzeAction &st) const {
    return "analyze " + st.target;
  }
  std::string operator()(const TeleportAction &st) const {
    return "teleport " + st.target + " with " + fmt_complex_literal(st.c1) +
           " " + fmt_complex_literal(st.c2);
  }
  std::string operator()(const CompareAction &st) const {
    return "compare " + fmt_complex_literal(st.c1) + " " +
           fmt_complex_literal(st.c2);
  }
};

} // namespace

StateProgram parse_state_spec(std::string_view text) {
  return Parser{}.parse(text);
}

std::string canonical_text(const StateProgram &program) {
  std::string out;
  for (const Statement &st : program.statements) {
    out += std::visit(StatementPrinter{}, st);
    out += "\n";
  }
  return out;
}

} // namespace densig
