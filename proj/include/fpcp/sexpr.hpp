#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpcp {

struct SourcePos {
    int line = 0;
    int col = 0;
};

/// Frontend error with a machine-readable code (UnterminatedString,
/// IllegalCharacter, UnsupportedCommand, UnsupportedLogic, SortError,
/// ArityError, UnboundSymbol, WidthMismatch, UnsupportedOperator,
/// UnsupportedLiteral, UnsupportedSort, CyclicDefinition, ...).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, const std::string& message, SourcePos pos)
        : std::runtime_error(message + " at " + std::to_string(pos.line) + ":" +
                             std::to_string(pos.col)),
          code_(std::move(code)),
          pos_(pos) {}

    const std::string& code() const { return code_; }
    SourcePos pos() const { return pos_; }

private:
    std::string code_;
    SourcePos pos_;
};

struct Token {
    enum Kind : uint8_t { LParen, RParen, Atom };
    Kind kind;
    std::string text;  // atoms keep their raw spelling (strings keep quotes)
    SourcePos pos;
};

std::vector<Token> tokenize(std::string_view input);

/// S-expression: an atom or a list, with the source position of its first
/// token.
struct SExpr {
    bool is_atom = true;
    std::string atom;
    std::vector<SExpr> children;
    SourcePos pos;

    bool is_list() const { return !is_atom; }
};

/// Reads all top-level forms.
std::vector<SExpr> read_sexprs(std::string_view input);

std::string print_sexpr(const SExpr& e);

bool sexpr_equal(const SExpr& a, const SExpr& b);

}  // namespace fpcp
