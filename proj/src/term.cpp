#include "fpcp/term.hpp"

#include <stdexcept>

namespace fpcp {

std::string to_string(const Sort& s) {
    switch (s.kind) {
        case SortKind::Bool: return "Bool";
        case SortKind::RoundingMode: return "RoundingMode";
        case SortKind::Fp:
            return "(_ FloatingPoint " + std::to_string(s.fmt.ebits) + " " +
                   std::to_string(s.fmt.sbits) + ")";
    }
    return "?";
}

const char* op_name(Op op) {
    switch (op) {
        case Op::FpAdd: return "fp.add";
        case Op::FpSub: return "fp.sub";
        case Op::FpMul: return "fp.mul";
        case Op::FpDiv: return "fp.div";
        case Op::FpNeg: return "fp.neg";
        case Op::FpAbs: return "fp.abs";
        case Op::FpMin: return "fp.min";
        case Op::FpMax: return "fp.max";
        case Op::FpEq: return "fp.eq";
        case Op::FpLt: return "fp.lt";
        case Op::FpLeq: return "fp.leq";
        case Op::FpGt: return "fp.gt";
        case Op::FpGeq: return "fp.geq";
        case Op::FpIsNan: return "fp.isNaN";
        case Op::FpIsInf: return "fp.isInfinite";
        case Op::FpIsZero: return "fp.isZero";
        case Op::Ite: return "ite";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Not: return "not";
        case Op::Implies: return "=>";
        case Op::Eq: return "=";
        case Op::Distinct: return "distinct";
    }
    return "?";
}

bool op_from_name(const std::string& name, Op& out) {
    static const std::unordered_map<std::string, Op> table = {
        {"fp.add", Op::FpAdd},       {"fp.sub", Op::FpSub},
        {"fp.mul", Op::FpMul},       {"fp.div", Op::FpDiv},
        {"fp.neg", Op::FpNeg},       {"fp.abs", Op::FpAbs},
        {"fp.min", Op::FpMin},       {"fp.max", Op::FpMax},
        {"fp.eq", Op::FpEq},         {"fp.lt", Op::FpLt},
        {"fp.leq", Op::FpLeq},       {"fp.gt", Op::FpGt},
        {"fp.geq", Op::FpGeq},       {"fp.isNaN", Op::FpIsNan},
        {"fp.isInfinite", Op::FpIsInf}, {"fp.isZero", Op::FpIsZero},
        {"ite", Op::Ite},            {"and", Op::And},
        {"or", Op::Or},              {"not", Op::Not},
        {"=>", Op::Implies},         {"=", Op::Eq},
        {"distinct", Op::Distinct},
    };
    auto it = table.find(name);
    if (it == table.end()) return false;
    out = it->second;
    return true;
}

namespace {

void key_append_sort(std::string& key, const Sort& s) {
    key.push_back(char('0' + int(s.kind)));
    if (s.is_fp()) {
        key += std::to_string(s.fmt.ebits);
        key.push_back(',');
        key += std::to_string(s.fmt.sbits);
    }
}

}  // namespace

TermId TermArena::intern(const std::string& key, TermNode node) {
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    TermId id = TermId(nodes_.size());
    nodes_.push_back(std::move(node));
    table_.emplace(key, id);
    return id;
}

TermId TermArena::var(const std::string& name, Sort sort) {
    std::string key = "v:";
    key_append_sort(key, sort);
    key.push_back(':');
    key += name;
    TermNode n;
    n.kind = TermKind::Var;
    n.sort = sort;
    n.name = name;
    return intern(key, std::move(n));
}

TermId TermArena::fp_lit(const FpValue& v) {
    std::string key = "f:";
    key += std::to_string(v.format().ebits);
    key.push_back(',');
    key += std::to_string(v.format().sbits);
    key.push_back(':');
    key += std::to_string(v.bits());
    TermNode n;
    n.kind = TermKind::FpLit;
    n.sort = Sort::fp(v.format());
    n.fp_lit = v;
    return intern(key, std::move(n));
}

TermId TermArena::bool_lit(bool b) {
    TermNode n;
    n.kind = TermKind::BoolLit;
    n.sort = Sort::boolean();
    n.bool_lit = b;
    return intern(b ? "b:1" : "b:0", std::move(n));
}

TermId TermArena::rm_lit(RoundingMode m) {
    TermNode n;
    n.kind = TermKind::RmLit;
    n.sort = Sort::rounding_mode();
    n.rm_lit = m;
    return intern(std::string("r:") + to_string(m), std::move(n));
}

TermId TermArena::app(Op op, std::vector<TermId> children) {
    Sort out;
    std::string err = check_app(op, children, out);
    if (!err.empty()) throw std::logic_error("ill-sorted application: " + err);
    std::string key = "a:";
    key += std::to_string(int(op));
    for (TermId c : children) {
        key.push_back(':');
        key += std::to_string(c);
    }
    TermNode n;
    n.kind = TermKind::App;
    n.sort = out;
    n.op = op;
    n.children = std::move(children);
    return intern(key, std::move(n));
}

std::string TermArena::check_app(Op op, const std::vector<TermId>& args, Sort& out) const {
    auto sort_of = [&](size_t i) { return nodes_[args[i]].sort; };
    auto all_fp_same = [&](size_t from) -> std::string {
        if (!sort_of(from).is_fp()) return "expected FloatingPoint operand";
        for (size_t i = from + 1; i < args.size(); ++i) {
            if (sort_of(i) != sort_of(from)) return "operand formats differ";
        }
        return "";
    };
    switch (op) {
        case Op::FpAdd:
        case Op::FpSub:
        case Op::FpMul:
        case Op::FpDiv: {
            if (args.size() != 3) return "expected 3 arguments (RoundingMode and 2 operands)";
            if (!sort_of(0).is_rm()) return "first argument must be a RoundingMode";
            std::string e = all_fp_same(1);
            if (!e.empty()) return e;
            out = sort_of(1);
            return "";
        }
        case Op::FpNeg:
        case Op::FpAbs: {
            if (args.size() != 1) return "expected 1 argument";
            if (!sort_of(0).is_fp()) return "expected FloatingPoint operand";
            out = sort_of(0);
            return "";
        }
        case Op::FpMin:
        case Op::FpMax: {
            if (args.size() != 2) return "expected 2 arguments";
            std::string e = all_fp_same(0);
            if (!e.empty()) return e;
            out = sort_of(0);
            return "";
        }
        case Op::FpEq:
        case Op::FpLt:
        case Op::FpLeq:
        case Op::FpGt:
        case Op::FpGeq: {
            if (args.size() < 2) return "expected at least 2 arguments";
            std::string e = all_fp_same(0);
            if (!e.empty()) return e;
            out = Sort::boolean();
            return "";
        }
        case Op::FpIsNan:
        case Op::FpIsInf:
        case Op::FpIsZero: {
            if (args.size() != 1) return "expected 1 argument";
            if (!sort_of(0).is_fp()) return "expected FloatingPoint operand";
            out = Sort::boolean();
            return "";
        }
        case Op::Ite: {
            if (args.size() != 3) return "expected 3 arguments";
            if (!sort_of(0).is_bool()) return "ite condition must be Bool";
            if (sort_of(1) != sort_of(2)) return "ite branches have different sorts";
            if (sort_of(1).is_rm()) return "ite on RoundingMode is not supported";
            out = sort_of(1);
            return "";
        }
        case Op::And:
        case Op::Or: {
            if (args.size() < 2) return "expected at least 2 arguments";
            for (size_t i = 0; i < args.size(); ++i) {
                if (!sort_of(i).is_bool()) return "expected Bool operands";
            }
            out = Sort::boolean();
            return "";
        }
        case Op::Not: {
            if (args.size() != 1) return "expected 1 argument";
            if (!sort_of(0).is_bool()) return "expected Bool operand";
            out = Sort::boolean();
            return "";
        }
        case Op::Implies: {
            if (args.size() < 2) return "expected at least 2 arguments";
            for (size_t i = 0; i < args.size(); ++i) {
                if (!sort_of(i).is_bool()) return "expected Bool operands";
            }
            out = Sort::boolean();
            return "";
        }
        case Op::Eq:
        case Op::Distinct: {
            if (args.size() < 2) return "expected at least 2 arguments";
            for (size_t i = 1; i < args.size(); ++i) {
                if (sort_of(i) != sort_of(0)) return "operands have different sorts";
            }
            if (sort_of(0).is_rm()) return "equality on RoundingMode is not supported";
            out = Sort::boolean();
            return "";
        }
    }
    return "unknown operator";
}

void audit_sorts(const TermArena& arena) {
    for (TermId id = 0; id < arena.size(); ++id) {
        const TermNode& n = arena.node(id);
        if (n.kind != TermKind::App) continue;
        Sort out;
        std::string err = arena.check_app(n.op, n.children, out);
        if (!err.empty() || out != n.sort) {
            throw std::logic_error("sort audit failed at node " + std::to_string(id) + ": " +
                                   (err.empty() ? "result sort mismatch" : err));
        }
    }
}

}  // namespace fpcp
