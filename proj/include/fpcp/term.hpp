#pragma once

#include "fpcp/fp.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace fpcp {

enum class SortKind : uint8_t { Bool, RoundingMode, Fp };

struct Sort {
    SortKind kind = SortKind::Bool;
    FpFormat fmt;  // meaningful for Fp

    static Sort boolean() { return {SortKind::Bool, {}}; }
    static Sort rounding_mode() { return {SortKind::RoundingMode, {}}; }
    static Sort fp(FpFormat f) { return {SortKind::Fp, f}; }

    bool is_bool() const { return kind == SortKind::Bool; }
    bool is_rm() const { return kind == SortKind::RoundingMode; }
    bool is_fp() const { return kind == SortKind::Fp; }

    friend bool operator==(const Sort& a, const Sort& b) {
        if (a.kind != b.kind) return false;
        return a.kind != SortKind::Fp || a.fmt == b.fmt;
    }
    friend bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }
};

std::string to_string(const Sort& s);

enum class Op : uint8_t {
    FpAdd, FpSub, FpMul, FpDiv, FpNeg, FpAbs, FpMin, FpMax,
    FpEq, FpLt, FpLeq, FpGt, FpGeq,
    FpIsNan, FpIsInf, FpIsZero,
    Ite,
    And, Or, Not, Implies, Eq, Distinct,
};

const char* op_name(Op op);
/// Returns false when the symbol is not a supported operator.
bool op_from_name(const std::string& name, Op& out);

enum class TermKind : uint8_t { Var, FpLit, BoolLit, RmLit, App };

using TermId = uint32_t;

struct TermNode {
    TermKind kind;
    Sort sort;
    Op op = Op::And;                // App only
    std::vector<TermId> children;   // App only
    std::string name;               // Var only
    FpValue fp_lit;                 // FpLit only
    bool bool_lit = false;          // BoolLit only
    RoundingMode rm_lit = RoundingMode::RNE;  // RmLit only
};

/// Hash-consed expression DAG. Structurally identical terms share one node id
/// within an arena.
class TermArena {
public:
    TermId var(const std::string& name, Sort sort);
    TermId fp_lit(const FpValue& v);
    TermId bool_lit(bool b);
    TermId rm_lit(RoundingMode m);
    /// Builds an application. The caller must have sort-checked the argument
    /// list with check_app.
    TermId app(Op op, std::vector<TermId> children);

    const TermNode& node(TermId id) const { return nodes_[id]; }
    Sort sort(TermId id) const { return nodes_[id].sort; }
    size_t size() const { return nodes_.size(); }

    /// Result sort of an application, or an error message (empty on success).
    std::string check_app(Op op, const std::vector<TermId>& args, Sort& out) const;

private:
    std::vector<TermNode> nodes_;
    std::unordered_map<std::string, TermId> table_;

    TermId intern(const std::string& key, TermNode node);
};

/// Re-checks operator signatures over the entire DAG (audit pass).
/// Throws std::logic_error on violation.
void audit_sorts(const TermArena& arena);

}  // namespace fpcp
