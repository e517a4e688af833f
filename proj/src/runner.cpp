// SPDX-License-Identifier: Apache-2.0
#include "densig/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "densig/errors.hpp"
#include "densig/tensor_core.hpp"

namespace densig {

namespace {

// Rethrow library errors with the statement's line number prefixed, keeping
// the dynamic type so the CLI can map it to an exit code.
template <typename Fn>
auto at_line(const SourceLocation &loc, Fn &&fn) -> decltype(fn()) {
  const std::string prefix = "line " + std::to_string(loc.line) + ": ";
  try {
    return fn();
  } catch (const ParseError &) {
    throw;
  } catch (const NameError &) {
    throw;
  } catch (const DimsError &e) {
    throw DimsError(prefix + e.what());
  } catch (const WeightError &e) {
    throw WeightError(prefix + e.what());
  } catch (const BasisError &e) {
    throw BasisError(prefix + e.what());
  } catch (const StateError &e) {
    throw StateError(prefix + e.what());
  } catch (const NotHermitianError &e) {
    throw NotHermitianError(prefix + e.what());
  } catch (const NumericalError &e) {
    throw NumericalError(prefix + e.what());
  }
}

class Interpreter {
public:
  explicit Interpreter(double rank_rel_tol) : rank_rel_tol_(rank_rel_tol) {}

  Report execute(const StateProgram &program) {
    for (const Statement &st : program.statements) {
      std::visit([this](const auto &s) { this->apply(s); }, st);
    }
    return std::move(report_);
  }

private:
  void apply(const DimsStatement &st) {
    cur_n_ = st.n;
    cur_m_ = st.m;
  }

  void apply(const KetDef &st) {
    at_line(st.loc, [&] {
      const DimsList dims = ket_dims(st);
      std::vector<Complex> amps(dims.product(), Complex(0.0, 0.0));
      for (const KetTerm &term : st.terms) {
        std::size_t flat = 0;
        for (std::size_t f = 0; f < term.labels.size(); ++f) {
          flat = flat * dims[f] + term.labels[f];
        }
        amps[flat] += term.amplitude;
      }
      PureState ket(dims, std::move(amps));

      StateSummary summary;
      summary.kind = "ket";
      summary.name = st.name;
      summary.dims = ket.dims().values();
      double norm_sq = 0.0;
      for (const Complex &z : ket.amplitudes()) {
        norm_sq += std::norm(z);
      }
      summary.norm = std::sqrt(norm_sq);
      report_.states.push_back(std::move(summary));

      kets_.emplace(st.name, std::move(ket));
    });
  }

  void apply(const RhoDef &st) {
    at_line(st.loc, [&] {
      DensityMatrix rho = evaluate(st.expr);

      StateSummary summary;
      summary.kind = "rho";
      summary.name = st.name;
      summary.dims = rho.dims().values();
      summary.trace = rho.mat().trace().real();
      summary.purity = rho.purity();
      report_.states.push_back(std::move(summary));

      rhos_.emplace(st.name, std::move(rho));
    });
  }

  void apply(const AnalyzeAction &st) {
    at_line(st.loc, [&] {
      const BipartiteDensityMatrix rho = bipartite(st.target);
      ExpansionBlocks blocks = expand(rho);
      XMatrix x = x_matrix(blocks);
      AnalysisSection section{st.target, std::move(blocks), x.mat(),
                              signature(rho, rank_rel_tol_),
                              product_test(rho)};
      report_.sections.push_back(std::move(section));
    });
  }

  void apply(const TeleportAction &st) {
    at_line(st.loc, [&] {
      const BipartiteDensityMatrix channel = bipartite(st.target);
      const InputStateC input(st.c1, st.c2);
      TeleportSection section{st.target, st.c1, st.c2,
                              teleport(channel, input)};
      report_.sections.push_back(std::move(section));
    });
  }

  void apply(const CompareAction &st) {
    at_line(st.loc, [&] {
      CompareSection section{channel_comparison(InputStateC(st.c1, st.c2))};
      report_.sections.push_back(std::move(section));
    });
  }

  // Factor dimensions of a ket: two-factor kets live on the declared
  // (n, m); other arities infer each factor as max(2, largest label + 1).
  DimsList ket_dims(const KetDef &st) const {
    const std::size_t arity = st.terms.front().labels.size();
    if (arity == 2) {
      return DimsList{cur_n_, cur_m_};
    }
    std::vector<std::size_t> dims(arity, 2);
    for (const KetTerm &term : st.terms) {
      for (std::size_t f = 0; f < arity; ++f) {
        dims[f] = std::max(dims[f], term.labels[f] + 1);
      }
    }
    return DimsList(std::move(dims));
  }

  DensityMatrix evaluate(const RhoExpr &expr) {
    return std::visit([&](const auto &node) { return eval_node(node); },
                      expr.node);
  }

  DensityMatrix eval_node(const NameRef &node) { return rhos_.at(node.name); }

  DensityMatrix eval_node(const ProjExpr &node) {
    return density_from_pure(kets_.at(node.ket));
  }

  DensityMatrix eval_node(const KronExpr &node) {
    const DensityMatrix left = evaluate(*node.left);
    const DensityMatrix right = evaluate(*node.right);
    // The product splits the result into two factors regardless of any
    // finer structure of the operands.
    return DensityMatrix(DimsList{left.dim(), right.dim()},
                         kron(left.mat(), right.mat()));
  }

  DensityMatrix eval_node(const MixExpr &node) {
    double sum = 0.0;
    for (const MixTerm &term : node.terms) {
      if (term.weight < 0.0) {
        throw WeightError("mix: negative weight");
      }
      sum += term.weight;
    }
    if (std::abs(sum - 1.0) > kStateTraceTol) {
      throw WeightError("mix: weights sum to " + std::to_string(sum) +
                        ", expected 1");
    }
    DensityMatrix first = evaluate(*node.terms.front().part);
    ComplexMatrix acc =
        Complex(node.terms.front().weight, 0.0) * first.mat();
    for (std::size_t t = 1; t < node.terms.size(); ++t) {
      const DensityMatrix part = evaluate(*node.terms[t].part);
      if (!(part.dims() == first.dims())) {
        throw DimsError("mix: parts have mismatched dims");
      }
      acc += Complex(node.terms[t].weight, 0.0) * part.mat();
    }
    return DensityMatrix(first.dims(), std::move(acc));
  }

  DensityMatrix eval_node(const MatrixExpr &node) {
    ComplexMatrix mat(node.dim, node.entries);
    // A literal matching the declared bipartite size gets the (n, m) split;
    // anything else is treated as a single system.
    DimsList dims = (node.dim == cur_n_ * cur_m_)
                        ? DimsList{cur_n_, cur_m_}
                        : DimsList{node.dim};
    return DensityMatrix(std::move(dims), std::move(mat));
  }

  DensityMatrix eval_node(const ClassicalCorrExpr &) {
    return classical_corr_channel().as_density();
  }

  DensityMatrix eval_node(const BellExpr &) {
    return density_from_pure(bell_channel());
  }

  DensityMatrix eval_node(const TripartiteExpr &node) {
    const std::size_t d = std::max<std::size_t>(2, node.weights.size());
    const PureState psi = tripartite_pure(node.weights, DimsList{d, d, d});
    return reduce_tripartite(psi, node.keep).as_density();
  }

  BipartiteDensityMatrix bipartite(const std::string &name) const {
    const DensityMatrix &rho = rhos_.at(name);
    if (rho.dims().size() != 2) {
      throw DimsError("'" + name + "' is a single-system state; expected a "
                      "bipartite one");
    }
    return BipartiteDensityMatrix(rho.dims()[0], rho.dims()[1], rho.mat());
  }

  double rank_rel_tol_;
  std::size_t cur_n_ = 2;
  std::size_t cur_m_ = 2;
  std::map<std::string, PureState> kets_;
  std::map<std::string, DensityMatrix> rhos_;
  Report report_;
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

// Fixed six-decimal formats keep reports byte-stable. Values that would
// print as "-0.000000" are flushed to zero first.
double displayable(double v) { return std::abs(v) < 5e-7 ? 0.0 : v; }

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", displayable(v));
  return buf;
}

std::string fmt_entry(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", displayable(z.real()),
                displayable(z.imag()));
  return buf;
}

void render_matrix(std::string &out, const ComplexMatrix &mat,
                   const char *indent) {
  for (std::size_t r = 0; r < mat.dim(); ++r) {
    out += indent;
    for (std::size_t c = 0; c < mat.dim(); ++c) {
      if (c > 0) {
        out += " ";
      }
      out += fmt_entry(mat(r, c));
    }
    out += "\n";
  }
}

void render_outcomes(std::string &out,
                     const std::vector<TeleportOutcome> &outcomes) {
  for (const TeleportOutcome &o : outcomes) {
    out += "outcome " + std::to_string(o.outcome_index) +
           ": p=" + fmt_real(o.probability) + "\n";
    if (o.post_state_b) {
      render_matrix(out, o.post_state_b->mat(), "  ");
    } else {
      out += "  (post state omitted: probability below floor)\n";
    }
  }
}

struct SectionRenderer {
  std::string &out;

  void operator()(const AnalysisSection &s) const {
    out += "\n[analyze " + s.target + "]\n";
    out += "A basis: " + s.sig.basis_label + "\n";
    const std::size_t n = s.blocks.n();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t ip = 0; ip < n; ++ip) {
        out += "block[" + std::to_string(i) + "][" + std::to_string(ip) +
               "]:\n";
        render_matrix(out, s.blocks.block(i, ip), "  ");
      }
    }
    out += "X matrix:\n";
    render_matrix(out, s.x_mat, "  ");
    out += "eigenvalues:";
    for (double lambda : s.sig.eigenvalues) {
      out += " " + fmt_real(lambda);
    }
    out += "\n";
    out += "product: ";
    out += s.sig.is_product ? "yes" : "no";
    out += " (rank=" + std::to_string(s.sig.rank) +
           ", purity=" + fmt_real(s.sig.purity) + ")\n";
    out += "product_test: ";
    out += s.ptest.is_product ? "yes" : "no";
    out += " (deviation=" + fmt_real(s.ptest.deviation) + ")\n";
  }

  void operator()(const TeleportSection &s) const {
    out += "\n[teleport " + s.target + " with c1=" + fmt_entry(s.c1) +
           " c2=" + fmt_entry(s.c2) + "]\n";
    render_outcomes(out, s.outcomes);
  }

  void operator()(const CompareSection &s) const {
    out += "\n[compare c1=" + fmt_entry(s.cmp.input.c1()) +
           " c2=" + fmt_entry(s.cmp.input.c2()) + "]\n";
    out += "classical channel:\n";
    render_outcomes(out, s.cmp.classical_outcomes);
    out += "bell channel:\n";
    render_outcomes(out, s.cmp.bell_outcomes);
    out += "coherence classical=" + fmt_real(s.cmp.classical_coherence) +
           " bell=" + fmt_real(s.cmp.bell_coherence) + "\n";
  }
};

} // namespace

Report run(const StateProgram &program, double rank_rel_tol) {
  return Interpreter(rank_rel_tol).execute(program);
}

std::string render_report(const Report &report) {
  std::string out;
  out += "[states]\n";
  for (const StateSummary &s : report.states) {
    out += s.kind + " " + s.name + ": dims ";
    for (std::size_t i = 0; i < s.dims.size(); ++i) {
      if (i > 0) {
        out += "x";
      }
      out += std::to_string(s.dims[i]);
    }
    if (s.kind == "ket") {
      out += "  norm=" + fmt_real(s.norm);
    } else {
      out += "  trace=" + fmt_real(s.trace) + "  purity=" + fmt_real(s.purity);
    }
    out += "\n";
  }
  for (const ReportSection &section : report.sections) {
    std::visit(SectionRenderer{out}, section);
  }
  return out;
}

} // namespace densig
