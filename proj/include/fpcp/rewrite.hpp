#pragma once

#include "fpcp/model.hpp"

#include <iosfwd>

namespace fpcp {

/// Partition of M0's constraints into auxiliary definitions and main
/// constraints. Auxiliary definitions are the Bool/FP define-fun macros
/// (RoundingMode macros are pure syntax and counted separately).
struct AuxPartition {
    std::vector<const Macro*> c_aux;
    std::vector<TermId> c_main;
    size_t rm_macros = 0;
};

AuxPartition identify_aux(const ModelM0& m0);

/// Macro expansion to a fixpoint: every macro reference is replaced by its
/// (recursively expanded) body, with DAG sharing preserved. The macros and
/// their defining entries are dropped; X1 is the set of declared variables.
ModelM1 inline_closure(const ModelM0& m0);

/// Factors every non-leaf floating-point subterm occurring at least twice
/// into a fresh __cse<k> variable with a single defining equation. Applied
/// bottom-up to a fixpoint; purely structural (identical rounding modes
/// required, no algebraic normalization).
ModelM1 factor_cse(const ModelM1& m1);

/// Decomposition into elementary constraints. Interior nodes get fresh
/// __dec<k> auxiliaries, one per occurrence (shared subterms must have been
/// factored by factor_cse to be reused). z = t*t with both operands the same
/// variable becomes a Square constraint.
ModelM2 decompose(const ModelM1& m1);

/// The "default model": per-macro decomposition of M0 without inlining,
/// used for constraint-graph comparisons against the reconstructed model.
ModelM2 decompose_naive(const ModelM0& m0);

/// Symbolic inequality-cycle check over variable-to-variable comparisons:
/// x<y edges have weight 1, x<=y and equalities weight 0 (both directions);
/// any cycle of total weight >= 1 is an UNSAT witness.
struct CycleWitness {
    bool unsat = false;
    std::vector<size_t> constraints;  // indices into ModelM2::constraints
};
CycleWitness detect_ineq_cycle(const ModelM2& m2);

/// Constraint graph: nodes are the model's variables, with an edge between
/// two variables that occur in the same constraint. Writes Graphviz DOT when
/// a stream is given and always returns the node/edge counts.
GraphStats export_constraint_graph(const ModelM2& m2, std::ostream* dot);
GraphStats export_constraint_graph(const ModelM1& m1, std::ostream* dot);

}  // namespace fpcp
