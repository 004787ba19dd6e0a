#pragma once

#include "fpcp/parser.hpp"

#include <optional>
#include <unordered_map>

namespace fpcp {

/// A term value: exactly one member is meaningful per sort.
struct Value {
    SortKind kind = SortKind::Bool;
    bool b = false;
    FpValue fv;
    RoundingMode rm = RoundingMode::RNE;

    static Value of(bool v) {
        Value x;
        x.kind = SortKind::Bool;
        x.b = v;
        return x;
    }
    static Value of(const FpValue& v) {
        Value x;
        x.kind = SortKind::Fp;
        x.fv = v;
        return x;
    }
    static Value of(RoundingMode m) {
        Value x;
        x.kind = SortKind::RoundingMode;
        x.rm = m;
        return x;
    }
};

/// Exact IEEE evaluation of terms under a variable assignment. SMT equality
/// on floats is object equality (all NaNs identified, +0 distinct from -0);
/// fp.eq and the fp.* orderings use IEEE comparison semantics.
class Evaluator {
public:
    explicit Evaluator(const TermArena& arena) : arena_(&arena), cache_(arena.size()) {}

    void clear_vars() {
        vars_.clear();
        generation_++;
    }
    void set_var(const std::string& name, const Value& v) {
        vars_[name] = v;
        generation_++;
    }

    Value eval(TermId id);

private:
    const TermArena* arena_;
    std::unordered_map<std::string, Value> vars_;
    struct Slot {
        uint64_t gen = 0;
        Value v;
    };
    std::vector<Slot> cache_;
    uint64_t generation_ = 1;
};

/// Evaluates a whole script: binds declared variables from the assignment,
/// evaluates macros in definition order, then checks every assertion.
bool check_model_m0(const ModelM0& m, const ModelAssignment& assignment);

bool fp_values_object_equal(const FpValue& a, const FpValue& b);

}  // namespace fpcp
