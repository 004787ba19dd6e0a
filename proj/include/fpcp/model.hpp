#pragma once

#include "fpcp/domain.hpp"
#include "fpcp/parser.hpp"

#include <iosfwd>
#include <vector>

namespace fpcp {

/// The abstract model produced by inlining: decision variables and
/// macro-free constraints. After factorization it additionally carries the
/// definitions of the fresh shared-subexpression variables.
struct ModelM1 {
    std::shared_ptr<TermArena> arena;
    std::vector<std::pair<std::string, Sort>> vars;  // X1, declaration order
    std::vector<TermId> constraints;
    std::vector<Macro> defs;  // CSE definitions (empty before factor_cse)
};

using VarId = uint32_t;

enum class VarClass : uint8_t { Decision, Aux, Const };

struct VarInfo {
    std::string name;
    Sort sort;
    VarClass cls = VarClass::Decision;
    FpValue const_val;  // Const only
};

enum class CKind : uint8_t {
    TernArith,   // z = x op_mode y
    Square,      // z = x *_mode x
    Unary,       // z = op(x)
    MinMax,      // z = min/max(x, y)
    IteFp,       // z = b ? x : y
    Cmp,         // x rel y
    ReifCmp,     // b <-> (x rel y)
    Pred,        // b <-> pred(x)
    BoolClause,  // disjunction of literals (empty clause = false)
    BoolGate,    // b <-> gate(inputs)
};

enum class ArithOp : uint8_t { Add, Sub, Mul, Div };
enum class UnOp : uint8_t { Neg, Abs };
// Eq/Ne/Lt/Le use IEEE semantics (false on NaN, zeros identified);
// EqObj/NeObj are SMT object (dis)equality (NaNs identified, -0 != +0).
enum class CmpRel : uint8_t { Eq, Ne, Lt, Le, EqObj, NeObj };
enum class PredKind : uint8_t { IsNan, IsInf, IsZero };
enum class GateKind : uint8_t { And, Or, Eqv, IteB };

struct Literal {
    VarId var;
    bool neg = false;
};

struct ElemConstraint {
    CKind kind;
    ArithOp aop = ArithOp::Add;
    UnOp uop = UnOp::Neg;
    CmpRel rel = CmpRel::Eq;
    PredKind pred = PredKind::IsNan;
    GateKind gate = GateKind::And;
    bool is_min = true;  // MinMax
    RoundingMode mode = RoundingMode::RNE;
    VarId z = 0, x = 0, y = 0, b = 0;
    std::vector<Literal> lits;  // BoolClause literals / BoolGate inputs

    /// Variables in the constraint's scope.
    std::vector<VarId> scope() const;
};

std::string to_string(const ElemConstraint& c, const std::vector<VarInfo>& vars);

/// The concrete model: elementary constraints over a flat variable table.
struct ModelM2 {
    std::vector<VarInfo> vars;
    std::vector<ElemConstraint> constraints;
    std::vector<VarId> decision_fp;    // X1 floats, declaration order
    std::vector<VarId> decision_bool;  // X1 booleans, declaration order
    /// Fresh variables in defining order; def_constraint[v] is the index of
    /// the constraint that functionally defines v (-1 for none).
    std::vector<VarId> aux_order;
    std::vector<int> def_constraint;

    bool var_is_bool(VarId v) const { return vars[v].sort.is_bool(); }
    FpDomain initial_fp_domain(VarId v) const;
};

struct GraphStats {
    size_t nodes = 0;
    size_t edges = 0;
};

}  // namespace fpcp
