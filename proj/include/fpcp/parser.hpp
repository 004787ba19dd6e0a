#pragma once

#include "fpcp/sexpr.hpp"
#include "fpcp/term.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fpcp {

struct Macro {
    std::string name;
    Sort sort;
    TermId body;
};

/// The initial model: declarations, define-fun macros in definition order,
/// and the asserted constraints. Terms live in the shared arena; macro
/// references appear as named variable nodes.
struct ModelM0 {
    std::shared_ptr<TermArena> arena;
    std::vector<std::pair<std::string, Sort>> declared;
    std::vector<Macro> macros;
    std::vector<TermId> assertions;
    std::string logic;
    bool has_check_sat = false;

    /// Macros that define CSP variables (Bool or FP sorted; RoundingMode
    /// macros are pure syntax).
    size_t num_aux_macros() const;
    bool is_macro(const std::string& name) const;
    const Macro* find_macro(const std::string& name) const;
};

/// A full assignment to the declared variables.
struct ModelAssignment {
    std::vector<std::pair<std::string, FpValue>> fp_vars;
    std::vector<std::pair<std::string, bool>> bool_vars;
};

ModelM0 parse_script(std::string_view text);

/// IEEE interpretation of the concatenated bit pattern; the bit-string widths
/// must be 1, ebits and sbits-1 (WidthMismatch otherwise). Accepts #b and #x
/// spellings.
FpValue parse_fp_literal(const std::string& sign_bits, const std::string& exp_bits,
                         const std::string& mant_bits, FpFormat target);

}  // namespace fpcp
