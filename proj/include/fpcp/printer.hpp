#pragma once

#include "fpcp/parser.hpp"

#include <string>
#include <vector>

namespace fpcp {

/// Bit-exact (fp #b.. #b.. #b..) spelling.
std::string print_fp_bits(const FpValue& v);
/// Model-output spelling: special forms for NaN, infinities and zeros,
/// (fp ...) otherwise.
std::string print_fp_model(const FpValue& v);

std::string print_sort(const Sort& s);
std::string print_term(const TermArena& arena, TermId id);

/// Whole-script printing; parse(print(parse(x))) is a fixpoint.
std::string print_script(const ModelM0& m);

/// Model text: one define-fun per variable.
std::string print_model(const ModelAssignment& m);

/// Re-emits an inlined model as SMT-LIB, introducing shared temporaries for
/// DAG nodes referenced more than once (keeps the output linear in DAG size).
std::string print_inlined_script(const TermArena& arena,
                                 const std::vector<std::pair<std::string, Sort>>& vars,
                                 const std::vector<TermId>& assertions);

}  // namespace fpcp
