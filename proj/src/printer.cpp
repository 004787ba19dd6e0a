#include "fpcp/printer.hpp"

#include <functional>
#include <unordered_map>

namespace fpcp {

namespace {

std::string bit_string(uint64_t bits, int width) {
    std::string s = "#b";
    for (int i = width - 1; i >= 0; --i) s.push_back((bits >> i) & 1 ? '1' : '0');
    return s;
}

}  // namespace

std::string print_fp_bits(const FpValue& v) {
    FpFormat fmt = v.format();
    std::string s = "(fp ";
    s += bit_string(v.sign() ? 1 : 0, 1);
    s += ' ';
    s += bit_string(v.biased_exp(), fmt.ebits);
    s += ' ';
    s += bit_string(v.mantissa(), fmt.mant_bits());
    s += ')';
    return s;
}

std::string print_fp_model(const FpValue& v) {
    FpFormat fmt = v.format();
    std::string idx = std::to_string(fmt.ebits) + " " + std::to_string(fmt.sbits);
    if (v.is_nan()) return "(_ NaN " + idx + ")";
    if (v.is_inf()) return std::string("(_ ") + (v.sign() ? "-oo " : "+oo ") + idx + ")";
    if (v.is_zero()) return std::string("(_ ") + (v.sign() ? "-zero " : "+zero ") + idx + ")";
    return print_fp_bits(v);
}

std::string print_sort(const Sort& s) { return to_string(s); }

namespace {

const char* rm_name(RoundingMode m) { return to_string(m); }

void print_term_rec(const TermArena& arena, TermId id, std::string& out) {
    const TermNode& n = arena.node(id);
    switch (n.kind) {
        case TermKind::Var:
            out += n.name;
            return;
        case TermKind::FpLit:
            out += print_fp_bits(n.fp_lit);
            return;
        case TermKind::BoolLit:
            out += n.bool_lit ? "true" : "false";
            return;
        case TermKind::RmLit:
            out += rm_name(n.rm_lit);
            return;
        case TermKind::App: {
            out += '(';
            out += op_name(n.op);
            for (TermId c : n.children) {
                out += ' ';
                print_term_rec(arena, c, out);
            }
            out += ')';
            return;
        }
    }
}

}  // namespace

std::string print_term(const TermArena& arena, TermId id) {
    std::string s;
    print_term_rec(arena, id, s);
    return s;
}

std::string print_script(const ModelM0& m) {
    std::string s;
    s += "(set-logic " + (m.logic.empty() ? std::string("QF_FP") : m.logic) + ")\n";
    for (const auto& [name, sort] : m.declared) {
        s += "(declare-fun " + name + " () " + print_sort(sort) + ")\n";
    }
    for (const Macro& mac : m.macros) {
        s += "(define-fun " + mac.name + " () " + print_sort(mac.sort) + " " +
             print_term(*m.arena, mac.body) + ")\n";
    }
    for (TermId a : m.assertions) {
        s += "(assert " + print_term(*m.arena, a) + ")\n";
    }
    s += "(check-sat)\n(exit)\n";
    return s;
}

std::string print_model(const ModelAssignment& m) {
    std::string s;
    for (const auto& [name, v] : m.fp_vars) {
        s += "(define-fun " + name + " () " + print_sort(Sort::fp(v.format())) + " " +
             print_fp_model(v) + ")\n";
    }
    for (const auto& [name, b] : m.bool_vars) {
        s += "(define-fun " + name + " () Bool " + (b ? "true" : "false") + ")\n";
    }
    return s;
}

std::string print_inlined_script(const TermArena& arena,
                                 const std::vector<std::pair<std::string, Sort>>& vars,
                                 const std::vector<TermId>& assertions) {
    // count references to find shared interior nodes
    std::unordered_map<TermId, int> refs;
    std::vector<TermId> stack(assertions.begin(), assertions.end());
    std::unordered_map<TermId, bool> seen;
    for (TermId root : assertions) refs[root]++;
    while (!stack.empty()) {
        TermId id = stack.back();
        stack.pop_back();
        if (seen[id]) continue;
        seen[id] = true;
        const TermNode& n = arena.node(id);
        for (TermId c : n.children) {
            refs[c]++;
            stack.push_back(c);
        }
    }

    std::unordered_map<TermId, std::string> named;
    std::vector<std::pair<TermId, std::string>> temps;  // in dependency order
    // assign temporaries bottom-up
    std::vector<TermId> order;
    seen.clear();
    std::vector<std::pair<TermId, bool>> walk;
    for (TermId root : assertions) walk.push_back({root, false});
    while (!walk.empty()) {
        auto [id, done] = walk.back();
        walk.pop_back();
        if (done) {
            order.push_back(id);
            continue;
        }
        if (seen[id]) continue;
        seen[id] = true;
        walk.push_back({id, true});
        for (TermId c : arena.node(id).children) walk.push_back({c, false});
    }
    int counter = 0;
    for (TermId id : order) {
        const TermNode& n = arena.node(id);
        if (n.kind == TermKind::App && refs[id] >= 2) {
            named.emplace(id, "__s" + std::to_string(counter++));
            temps.push_back({id, named[id]});
        }
    }

    auto print_with_temps = [&](TermId id, bool is_def_root) {
        std::string out;
        // recursive print that stops at named nodes
        std::function<void(TermId, bool)> rec = [&](TermId t, bool root) {
            auto it = named.find(t);
            if (!root && it != named.end()) {
                out += it->second;
                return;
            }
            const TermNode& n = arena.node(t);
            switch (n.kind) {
                case TermKind::Var: out += n.name; return;
                case TermKind::FpLit: out += print_fp_bits(n.fp_lit); return;
                case TermKind::BoolLit: out += n.bool_lit ? "true" : "false"; return;
                case TermKind::RmLit: out += rm_name(n.rm_lit); return;
                case TermKind::App:
                    out += '(';
                    out += op_name(n.op);
                    for (TermId c : n.children) {
                        out += ' ';
                        rec(c, false);
                    }
                    out += ')';
                    return;
            }
        };
        rec(id, is_def_root);
        return out;
    };

    std::string s = "(set-logic QF_FP)\n";
    for (const auto& [name, sort] : vars) {
        s += "(declare-fun " + name + " () " + print_sort(sort) + ")\n";
    }
    for (const auto& [id, name] : temps) {
        s += "(define-fun " + name + " () " + print_sort(arena.sort(id)) + " " +
             print_with_temps(id, true) + ")\n";
    }
    for (TermId a : assertions) {
        s += "(assert " + print_with_temps(a, false) + ")\n";
    }
    s += "(check-sat)\n(exit)\n";
    return s;
}

}  // namespace fpcp
