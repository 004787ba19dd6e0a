#include "fpcp/parser.hpp"

#include <optional>
#include <unordered_map>

namespace fpcp {

size_t ModelM0::num_aux_macros() const {
    size_t n = 0;
    for (const Macro& m : macros) {
        if (!m.sort.is_rm()) ++n;
    }
    return n;
}

bool ModelM0::is_macro(const std::string& name) const { return find_macro(name) != nullptr; }

const Macro* ModelM0::find_macro(const std::string& name) const {
    for (const Macro& m : macros) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

namespace {

std::optional<uint64_t> bits_of(const std::string& text, int& width) {
    if (text.size() < 3 || text[0] != '#') return std::nullopt;
    uint64_t v = 0;
    if (text[1] == 'b') {
        width = int(text.size()) - 2;
        if (width > 64) return std::nullopt;
        for (size_t i = 2; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') return std::nullopt;
            v = (v << 1) | uint64_t(text[i] - '0');
        }
        return v;
    }
    if (text[1] == 'x') {
        width = (int(text.size()) - 2) * 4;
        if (width > 64) return std::nullopt;
        for (size_t i = 2; i < text.size(); ++i) {
            int d;
            char c = text[i];
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else return std::nullopt;
            v = (v << 4) | uint64_t(d);
        }
        return v;
    }
    return std::nullopt;
}

bool is_numeral(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit((unsigned char)c)) return false;
    }
    return true;
}

bool is_decimal(const std::string& s) {
    size_t dot = s.find('.');
    if (dot == std::string::npos) return false;
    return is_numeral(s.substr(0, dot)) && is_numeral(s.substr(dot + 1));
}

// Bounded numeral parse; anything that does not fit an int is unsupported.
std::optional<int> small_int(const std::string& s) {
    if (!is_numeral(s) || s.size() > 6) return std::nullopt;
    return std::stoi(s);
}

std::optional<RoundingMode> rm_of_name(const std::string& s) {
    if (s == "RNE" || s == "roundNearestTiesToEven") return RoundingMode::RNE;
    if (s == "RNA" || s == "roundNearestTiesToAway") return RoundingMode::RNA;
    if (s == "RTP" || s == "roundTowardPositive") return RoundingMode::RTP;
    if (s == "RTN" || s == "roundTowardNegative") return RoundingMode::RTN;
    if (s == "RTZ" || s == "roundTowardZero") return RoundingMode::RTZ;
    return std::nullopt;
}

// Exact conversion of numeral/decimal text into fmt; nullopt when the value
// is not exactly representable.
std::optional<FpValue> exact_decimal(const std::string& text, FpFormat fmt) {
    std::string digits = text;
    int frac_digits = 0;
    size_t dot = text.find('.');
    if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        frac_digits = int(text.size() - dot - 1);
    }
    u128 num = 0;
    for (char c : digits) {
        if (num > (u128(-1) / 10)) return std::nullopt;  // overflow guard
        num = num * 10 + u128(c - '0');
    }
    // value = num / 10^frac = num / (2^frac * 5^frac)
    for (int i = 0; i < frac_digits; ++i) {
        if (num % 5 != 0) return std::nullopt;
        num /= 5;
    }
    if (num == 0) return FpValue::zero(fmt, false);
    FpValue down = fp_from_exact(fmt, false, -frac_digits, num, false, RoundingMode::RTZ);
    FpValue up = fp_from_exact(fmt, false, -frac_digits, num, false, RoundingMode::RTP);
    if (down != up) return std::nullopt;  // would need rounding
    return down;
}

class ScriptParser {
public:
    explicit ScriptParser(std::string_view text) : forms_(read_sexprs(text)) {
        model_.arena = std::make_shared<TermArena>();
    }

    ModelM0 run() {
        for (const SExpr& form : forms_) command(form);
        return std::move(model_);
    }

private:
    std::vector<SExpr> forms_;
    ModelM0 model_;
    std::unordered_map<std::string, Sort> globals_;  // declared vars and macros

    [[noreturn]] void fail(const std::string& code, const std::string& msg, SourcePos pos) {
        throw ParseError(code, msg, pos);
    }

    const SExpr& arg(const SExpr& form, size_t i) {
        if (form.children.size() <= i)
            fail("ArityError", "command is missing arguments", form.pos);
        return form.children[i];
    }

    void expect_arity(const SExpr& form, size_t n) {
        if (form.children.size() != n)
            fail("ArityError", "wrong number of arguments to '" +
                                   form.children[0].atom + "'", form.pos);
    }

    void command(const SExpr& form) {
        if (form.is_atom || form.children.empty() || !form.children[0].is_atom)
            fail("UnsupportedCommand", "expected a command form", form.pos);
        const std::string& head = form.children[0].atom;
        if (head == "set-logic") {
            expect_arity(form, 2);
            const SExpr& l = arg(form, 1);
            if (!l.is_atom || l.atom != "QF_FP")
                fail("UnsupportedLogic",
                     "only QF_FP is supported, got '" + print_sexpr(l) + "'", l.pos);
            model_.logic = l.atom;
            return;
        }
        if (head == "set-info") return;  // parsed and ignored (:status is never consulted)
        if (head == "declare-fun") {
            expect_arity(form, 4);
            const SExpr& name = arg(form, 1);
            const SExpr& params = arg(form, 2);
            if (!name.is_atom) fail("SortError", "expected a symbol", name.pos);
            if (params.is_atom || !params.children.empty())
                fail("ArityError",
                     "non-zero-arity uninterpreted functions are not supported", params.pos);
            declare(name.atom, parse_sort(arg(form, 3)), name.pos);
            return;
        }
        if (head == "declare-const") {
            expect_arity(form, 3);
            const SExpr& name = arg(form, 1);
            if (!name.is_atom) fail("SortError", "expected a symbol", name.pos);
            declare(name.atom, parse_sort(arg(form, 2)), name.pos);
            return;
        }
        if (head == "define-fun") {
            expect_arity(form, 5);
            const SExpr& name = arg(form, 1);
            const SExpr& params = arg(form, 2);
            if (!name.is_atom) fail("SortError", "expected a symbol", name.pos);
            if (params.is_atom || !params.children.empty())
                fail("ArityError", "define-fun with parameters is not supported", params.pos);
            Sort sort = parse_sort(arg(form, 3));
            Env env;
            TermId body = term(arg(form, 4), env);
            if (model_.arena->sort(body) != sort)
                fail("SortError",
                     "define-fun body sort does not match the declared sort", form.pos);
            if (globals_.count(name.atom))
                fail("SortError", "symbol '" + name.atom + "' is already defined", name.pos);
            globals_.emplace(name.atom, sort);
            model_.macros.push_back({name.atom, sort, body});
            return;
        }
        if (head == "assert") {
            expect_arity(form, 2);
            Env env;
            TermId t = term(arg(form, 1), env);
            if (!model_.arena->sort(t).is_bool())
                fail("SortError", "asserted term is not Bool", arg(form, 1).pos);
            model_.assertions.push_back(t);
            return;
        }
        if (head == "check-sat") {
            expect_arity(form, 1);
            model_.has_check_sat = true;
            return;
        }
        if (head == "exit") {
            expect_arity(form, 1);
            return;
        }
        fail("UnsupportedCommand", "unsupported command '" + head + "'", form.pos);
    }

    void declare(const std::string& name, Sort sort, SourcePos pos) {
        if (sort.is_rm())
            fail("UnsupportedSort", "RoundingMode variables are not supported", pos);
        if (globals_.count(name))
            fail("SortError", "symbol '" + name + "' is already defined", pos);
        globals_.emplace(name, sort);
        model_.declared.emplace_back(name, sort);
    }

    Sort parse_sort(const SExpr& s) {
        if (s.is_atom) {
            if (s.atom == "Bool") return Sort::boolean();
            if (s.atom == "RoundingMode") return Sort::rounding_mode();
            if (s.atom == "Float16") return Sort::fp(FpFormat(5, 11));
            if (s.atom == "Float32") return Sort::fp(FpFormat::binary32());
            if (s.atom == "Float64") return Sort::fp(FpFormat::binary64());
            fail("UnsupportedSort", "unsupported sort '" + s.atom + "'", s.pos);
        }
        // (_ FloatingPoint e s)
        if (s.children.size() == 4 && s.children[0].is_atom && s.children[0].atom == "_" &&
            s.children[1].is_atom && s.children[1].atom == "FloatingPoint" &&
            s.children[2].is_atom && is_numeral(s.children[2].atom) &&
            s.children[3].is_atom && is_numeral(s.children[3].atom)) {
            auto e = small_int(s.children[2].atom);
            auto p = small_int(s.children[3].atom);
            if (!e || !p || *e < 2 || *p < 2 || !FpFormat(*e, *p).valid())
                fail("UnsupportedSort",
                     "unsupported floating-point format (" + s.children[2].atom + ", " +
                         s.children[3].atom + ")", s.pos);
            return Sort::fp(FpFormat(*e, *p));
        }
        fail("UnsupportedSort", "unsupported sort '" + print_sexpr(s) + "'", s.pos);
    }

    using Env = std::vector<std::pair<std::string, TermId>>;  // let bindings, innermost last

    TermId term(const SExpr& e, Env& env) {
        TermArena& arena = *model_.arena;
        if (e.is_atom) {
            const std::string& a = e.atom;
            if (a == "true") return arena.bool_lit(true);
            if (a == "false") return arena.bool_lit(false);
            if (auto rm = rm_of_name(a)) return arena.rm_lit(*rm);
            for (auto it = env.rbegin(); it != env.rend(); ++it) {
                if (it->first == a) return it->second;  // let binding, expanded in place
            }
            auto g = globals_.find(a);
            if (g != globals_.end()) return arena.var(a, g->second);
            fail("UnboundSymbol", "unbound symbol '" + a + "'", e.pos);
        }
        if (e.children.empty())
            fail("UnsupportedOperator", "empty application", e.pos);
        const SExpr& head = e.children[0];

        // (fp #b.. #b.. #b..)
        if (head.is_atom && head.atom == "fp") {
            if (e.children.size() != 4)
                fail("ArityError", "fp literal takes 3 bit-vectors", e.pos);
            for (int i = 1; i <= 3; ++i) {
                if (!e.children[i].is_atom)
                    fail("UnsupportedLiteral", "malformed fp literal", e.pos);
            }
            int ws, we, wm;
            auto bs = bits_of(e.children[1].atom, ws);
            auto be = bits_of(e.children[2].atom, we);
            auto bm = bits_of(e.children[3].atom, wm);
            if (!bs || !be || !bm)
                fail("UnsupportedLiteral", "malformed fp literal", e.pos);
            FpFormat fmt(we, wm + 1);
            if (ws != 1 || !fmt.valid())
                fail("WidthMismatch", "fp literal widths are unsupported", e.pos);
            return arena.fp_lit(
                parse_fp_literal(e.children[1].atom, e.children[2].atom, e.children[3].atom, fmt));
        }

        // (_ +oo e s) and friends
        if (head.is_atom && head.atom == "_") {
            if (e.children.size() != 4 || !e.children[1].is_atom ||
                !e.children[2].is_atom || !e.children[3].is_atom ||
                !is_numeral(e.children[2].atom) || !is_numeral(e.children[3].atom))
                fail("UnsupportedLiteral",
                     "unsupported indexed term '" + print_sexpr(e) + "'", e.pos);
            auto fe = small_int(e.children[2].atom);
            auto fs = small_int(e.children[3].atom);
            if (!fe || !fs || !FpFormat(*fe, *fs).valid())
                fail("UnsupportedSort", "unsupported floating-point format", e.pos);
            FpFormat fmt(*fe, *fs);
            const std::string& w = e.children[1].atom;
            if (w == "+oo") return arena.fp_lit(FpValue::inf(fmt, false));
            if (w == "-oo") return arena.fp_lit(FpValue::inf(fmt, true));
            if (w == "+zero") return arena.fp_lit(FpValue::zero(fmt, false));
            if (w == "-zero") return arena.fp_lit(FpValue::zero(fmt, true));
            if (w == "NaN") return arena.fp_lit(FpValue::nan(fmt));
            fail("UnsupportedLiteral", "unsupported indexed term '" + w + "'", e.pos);
        }

        // ((_ to_fp e s) RM constant)
        if (head.is_list() && head.children.size() == 4 && head.children[0].is_atom &&
            head.children[0].atom == "_" && head.children[1].is_atom &&
            head.children[1].atom == "to_fp") {
            if (!head.children[2].is_atom || !head.children[3].is_atom ||
                !is_numeral(head.children[2].atom) || !is_numeral(head.children[3].atom))
                fail("UnsupportedLiteral", "malformed to_fp", e.pos);
            auto fe = small_int(head.children[2].atom);
            auto fs = small_int(head.children[3].atom);
            if (!fe || !fs || !FpFormat(*fe, *fs).valid())
                fail("UnsupportedSort", "unsupported floating-point format", e.pos);
            FpFormat fmt(*fe, *fs);
            if (e.children.size() != 3)
                fail("ArityError", "to_fp takes a rounding mode and a constant", e.pos);
            const SExpr& rm = e.children[1];
            if (!rm.is_atom || !rm_of_name(rm.atom))
                fail("UnsupportedLiteral", "to_fp requires a rounding-mode literal", rm.pos);
            const SExpr& c = e.children[2];
            bool negate = false;
            std::string text;
            if (c.is_atom && (is_numeral(c.atom) || is_decimal(c.atom))) {
                text = c.atom;
            } else if (c.is_list() && c.children.size() == 2 && c.children[0].is_atom &&
                       c.children[0].atom == "-" && c.children[1].is_atom &&
                       (is_numeral(c.children[1].atom) || is_decimal(c.children[1].atom))) {
                negate = true;
                text = c.children[1].atom;
            } else {
                fail("UnsupportedLiteral",
                     "to_fp supports numeral and decimal constants only", c.pos);
            }
            auto v = exact_decimal(text, fmt);
            if (!v)
                fail("UnsupportedLiteral",
                     "constant '" + text + "' is not exactly representable", c.pos);
            return arena.fp_lit(negate ? fp_neg(*v) : *v);
        }

        // (let ((x t) ...) body)
        if (head.is_atom && head.atom == "let") {
            if (e.children.size() != 3 || e.children[1].is_atom)
                fail("ArityError", "malformed let", e.pos);
            size_t base = env.size();
            std::vector<std::pair<std::string, TermId>> bindings;
            for (const SExpr& b : e.children[1].children) {
                if (b.is_atom || b.children.size() != 2 || !b.children[0].is_atom)
                    fail("ArityError", "malformed let binding", b.pos);
                bindings.emplace_back(b.children[0].atom, term(b.children[1], env));
            }
            for (auto& kv : bindings) env.push_back(std::move(kv));  // parallel let
            TermId body = term(e.children[2], env);
            env.resize(base);
            return body;
        }

        if (!head.is_atom)
            fail("UnsupportedOperator", "unsupported term '" + print_sexpr(e) + "'", e.pos);

        Op op;
        if (!op_from_name(head.atom, op)) {
            if (globals_.count(head.atom))
                fail("ArityError",
                     "'" + head.atom + "' is a zero-arity symbol and cannot be applied",
                     head.pos);
            fail("UnsupportedOperator", "unsupported operator '" + head.atom + "'", head.pos);
        }
        std::vector<TermId> args;
        args.reserve(e.children.size() - 1);
        for (size_t i = 1; i < e.children.size(); ++i) args.push_back(term(e.children[i], env));
        Sort out;
        std::string err = model_.arena->check_app(op, args, out);
        if (!err.empty()) {
            // distinguish arity problems from sort problems for diagnostics
            if (err.find("argument") != std::string::npos)
                fail("ArityError", "'" + head.atom + "': " + err, e.pos);
            fail("SortError", "'" + head.atom + "': " + err, e.pos);
        }
        return model_.arena->app(op, std::move(args));
    }
};

}  // namespace

FpValue parse_fp_literal(const std::string& sign_bits, const std::string& exp_bits,
                         const std::string& mant_bits, FpFormat target) {
    int ws, we, wm;
    auto s = bits_of(sign_bits, ws);
    auto e = bits_of(exp_bits, we);
    auto m = bits_of(mant_bits, wm);
    SourcePos nowhere{0, 0};
    if (!s || !e || !m)
        throw ParseError("UnsupportedLiteral", "malformed fp literal", nowhere);
    if (ws != 1 || we != target.ebits || wm != target.sbits - 1)
        throw ParseError("WidthMismatch",
                         "fp literal widths do not match the target format", nowhere);
    uint64_t bits = (*s << (target.total_bits() - 1)) | (*e << target.mant_bits()) | *m;
    return FpValue(target, bits);
}

ModelM0 parse_script(std::string_view text) {
    ScriptParser p(text);
    ModelM0 m = p.run();
    audit_sorts(*m.arena);
    return m;
}

}  // namespace fpcp
