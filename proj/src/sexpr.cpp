#include "fpcp/sexpr.hpp"

namespace fpcp {

namespace {

bool is_symbol_char(char c) {
    if (std::isalnum((unsigned char)c)) return true;
    switch (c) {
        case '~': case '!': case '@': case '$': case '%': case '^': case '&':
        case '*': case '_': case '-': case '+': case '=': case '<': case '>':
        case '.': case '?': case '/':
            return true;
        default:
            return false;
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < input.size()) {
        char c = input[i];
        SourcePos pos{line, col};
        if (c == ';') {
            while (i < input.size() && input[i] != '\n') {
                bump(input[i]);
                ++i;
            }
            continue;
        }
        if (std::isspace((unsigned char)c)) {
            bump(c);
            ++i;
            continue;
        }
        if (c == '(') {
            out.push_back({Token::LParen, "(", pos});
            bump(c);
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({Token::RParen, ")", pos});
            bump(c);
            ++i;
            continue;
        }
        if (c == '"') {
            std::string text;
            text.push_back(c);
            bump(c);
            ++i;
            while (true) {
                if (i >= input.size())
                    throw ParseError("UnterminatedString", "unterminated string literal", pos);
                char d = input[i];
                text.push_back(d);
                bump(d);
                ++i;
                if (d == '"') {
                    if (i < input.size() && input[i] == '"') {  // "" escape
                        text.push_back('"');
                        bump('"');
                        ++i;
                        continue;
                    }
                    break;
                }
            }
            out.push_back({Token::Atom, text, pos});
            continue;
        }
        if (c == '|') {
            std::string text;
            text.push_back(c);
            bump(c);
            ++i;
            while (true) {
                if (i >= input.size())
                    throw ParseError("UnterminatedString", "unterminated quoted symbol", pos);
                char d = input[i];
                text.push_back(d);
                bump(d);
                ++i;
                if (d == '|') break;
            }
            out.push_back({Token::Atom, text, pos});
            continue;
        }
        if (c == ':' || is_symbol_char(c)) {
            std::string text;
            if (c == ':') {
                text.push_back(c);
                bump(c);
                ++i;
            }
            while (i < input.size() && is_symbol_char(input[i])) {
                text.push_back(input[i]);
                bump(input[i]);
                ++i;
            }
            if (text.empty() || text == ":")
                throw ParseError("IllegalCharacter", "stray ':'", pos);
            out.push_back({Token::Atom, text, pos});
            continue;
        }
        if (c == '#') {
            // #b... or #x...
            std::string text;
            text.push_back(c);
            bump(c);
            ++i;
            while (i < input.size() && (is_symbol_char(input[i]))) {
                text.push_back(input[i]);
                bump(input[i]);
                ++i;
            }
            if (text.size() < 3 || (text[1] != 'b' && text[1] != 'x'))
                throw ParseError("IllegalCharacter", "malformed #-literal '" + text + "'", pos);
            out.push_back({Token::Atom, text, pos});
            continue;
        }
        throw ParseError("IllegalCharacter",
                         std::string("illegal character '") + c + "'", pos);
    }
    return out;
}

namespace {

SExpr read_one(const std::vector<Token>& toks, size_t& i) {
    const Token& t = toks[i];
    if (t.kind == Token::Atom) {
        ++i;
        SExpr e;
        e.is_atom = true;
        e.atom = t.text;
        e.pos = t.pos;
        return e;
    }
    if (t.kind == Token::RParen)
        throw ParseError("UnbalancedParentheses", "unexpected ')'", t.pos);
    SExpr e;
    e.is_atom = false;
    e.pos = t.pos;
    ++i;  // consume '('
    while (true) {
        if (i >= toks.size())
            throw ParseError("UnbalancedParentheses", "missing ')'", t.pos);
        if (toks[i].kind == Token::RParen) {
            ++i;
            return e;
        }
        e.children.push_back(read_one(toks, i));
    }
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view input) {
    std::vector<Token> toks = tokenize(input);
    std::vector<SExpr> out;
    size_t i = 0;
    while (i < toks.size()) out.push_back(read_one(toks, i));
    return out;
}

std::string print_sexpr(const SExpr& e) {
    if (e.is_atom) return e.atom;
    std::string s = "(";
    for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += ' ';
        s += print_sexpr(e.children[i]);
    }
    s += ')';
    return s;
}

bool sexpr_equal(const SExpr& a, const SExpr& b) {
    if (a.is_atom != b.is_atom) return false;
    if (a.is_atom) return a.atom == b.atom;
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i) {
        if (!sexpr_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

}  // namespace fpcp
