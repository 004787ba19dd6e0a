#include "fpcp/eval.hpp"

#include <stdexcept>

namespace fpcp {

bool fp_values_object_equal(const FpValue& a, const FpValue& b) { return fp_obj_eq(a, b); }

Value Evaluator::eval(TermId id) {
    if (cache_.size() < arena_->size()) cache_.resize(arena_->size());
    Slot& slot = cache_[id];
    if (slot.gen == generation_) return slot.v;

    const TermNode& n = arena_->node(id);
    Value out;
    switch (n.kind) {
        case TermKind::Var: {
            auto it = vars_.find(n.name);
            if (it == vars_.end())
                throw std::logic_error("evaluation of unbound variable '" + n.name + "'");
            out = it->second;
            break;
        }
        case TermKind::FpLit:
            out = Value::of(n.fp_lit);
            break;
        case TermKind::BoolLit:
            out = Value::of(n.bool_lit);
            break;
        case TermKind::RmLit:
            out = Value::of(n.rm_lit);
            break;
        case TermKind::App: {
            auto fv = [&](size_t i) { return eval(n.children[i]).fv; };
            auto bv = [&](size_t i) { return eval(n.children[i]).b; };
            switch (n.op) {
                case Op::FpAdd:
                    out = Value::of(fp_add(fv(1), fv(2), eval(n.children[0]).rm));
                    break;
                case Op::FpSub:
                    out = Value::of(fp_sub(fv(1), fv(2), eval(n.children[0]).rm));
                    break;
                case Op::FpMul:
                    out = Value::of(fp_mul(fv(1), fv(2), eval(n.children[0]).rm));
                    break;
                case Op::FpDiv:
                    out = Value::of(fp_div(fv(1), fv(2), eval(n.children[0]).rm));
                    break;
                case Op::FpNeg:
                    out = Value::of(fp_neg(fv(0)));
                    break;
                case Op::FpAbs:
                    out = Value::of(fp_abs(fv(0)));
                    break;
                case Op::FpMin:
                    out = Value::of(fp_min(fv(0), fv(1)));
                    break;
                case Op::FpMax:
                    out = Value::of(fp_max(fv(0), fv(1)));
                    break;
                case Op::FpEq:
                case Op::FpLt:
                case Op::FpLeq:
                case Op::FpGt:
                case Op::FpGeq: {
                    bool ok = true;  // chainable
                    for (size_t i = 0; i + 1 < n.children.size() && ok; ++i) {
                        FpValue a = fv(i), b = fv(i + 1);
                        switch (n.op) {
                            case Op::FpEq: ok = fp_ieee_eq(a, b); break;
                            case Op::FpLt: ok = fp_ieee_lt(a, b); break;
                            case Op::FpLeq: ok = fp_ieee_le(a, b); break;
                            case Op::FpGt: ok = fp_ieee_lt(b, a); break;
                            default: ok = fp_ieee_le(b, a); break;
                        }
                    }
                    out = Value::of(ok);
                    break;
                }
                case Op::FpIsNan:
                    out = Value::of(fv(0).is_nan());
                    break;
                case Op::FpIsInf:
                    out = Value::of(fv(0).is_inf());
                    break;
                case Op::FpIsZero:
                    out = Value::of(fv(0).is_zero());
                    break;
                case Op::Ite:
                    out = eval(n.children[bv(0) ? 1 : 2]);
                    break;
                case Op::And: {
                    bool ok = true;
                    for (size_t i = 0; i < n.children.size(); ++i) ok = ok && bv(i);
                    out = Value::of(ok);
                    break;
                }
                case Op::Or: {
                    bool ok = false;
                    for (size_t i = 0; i < n.children.size(); ++i) ok = ok || bv(i);
                    out = Value::of(ok);
                    break;
                }
                case Op::Not:
                    out = Value::of(!bv(0));
                    break;
                case Op::Implies: {
                    // right-associative: (=> a b c) = a -> (b -> c)
                    bool r = bv(n.children.size() - 1);
                    for (size_t i = n.children.size() - 1; i-- > 0;) r = !bv(i) || r;
                    out = Value::of(r);
                    break;
                }
                case Op::Eq: {
                    bool ok = true;
                    bool is_fp = arena_->sort(n.children[0]).is_fp();
                    for (size_t i = 0; i + 1 < n.children.size() && ok; ++i) {
                        if (is_fp) ok = fp_obj_eq(fv(i), fv(i + 1));
                        else ok = bv(i) == bv(i + 1);
                    }
                    out = Value::of(ok);
                    break;
                }
                case Op::Distinct: {
                    bool ok = true;
                    bool is_fp = arena_->sort(n.children[0]).is_fp();
                    for (size_t i = 0; i < n.children.size() && ok; ++i) {
                        for (size_t j = i + 1; j < n.children.size() && ok; ++j) {
                            if (is_fp) ok = !fp_obj_eq(fv(i), fv(j));
                            else ok = bv(i) != bv(j);
                        }
                    }
                    out = Value::of(ok);
                    break;
                }
            }
            break;
        }
    }
    slot.gen = generation_;
    slot.v = out;
    return out;
}

bool check_model_m0(const ModelM0& m, const ModelAssignment& assignment) {
    Evaluator ev(*m.arena);
    for (const auto& [name, v] : assignment.fp_vars) ev.set_var(name, Value::of(v));
    for (const auto& [name, b] : assignment.bool_vars) ev.set_var(name, Value::of(b));
    for (const Macro& mac : m.macros) {
        ev.set_var(mac.name, ev.eval(mac.body));
    }
    for (TermId a : m.assertions) {
        if (!ev.eval(a).b) return false;
    }
    return true;
}

}  // namespace fpcp
