#ifndef KAHLER_PARSER_HPP
#define KAHLER_PARSER_HPP

#include <gmpxx.h>

#include <memory>
#include <string>

#include "kahler/symbols.hpp"

namespace kahler {

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

/// Expression tree: integer literals, symbols, arithmetic, the differential
/// constructor d(.), and the symbol-pair constructor {.,.}.
struct AstNode {
    enum class Type { Integer, Symbol, Unary, Binary, Diff, Pair };
    Type type;
    std::size_t pos = 0;
    mpz_class value;     // Integer
    std::string name;    // Symbol
    char op = 0;         // Unary ('-') and Binary ('+','-','*','/','^')
    AstPtr lhs, rhs;
};

/// Evaluated expression: a dual-number element a + eps*b of K[eps] (plain
/// elements have b = 0), an absolute form, or a Steinberg symbol.
struct Value {
    enum class Kind { Dual, Form, Symbol };
    Kind kind = Kind::Dual;
    FieldElem a, b;
    AbsoluteForm form;
    DualSymbol symbol;

    bool is_element() const { return kind == Kind::Dual && b.is_zero(); }
};

/// Recursive-descent parse with standard precedence (^ before unary minus
/// before * / before + -), left associativity, parentheses.  Unknown symbols
/// are rejected against the tower.
AstPtr parse_expression(const std::string& src, const TowerPtr& tower);

Value eval_ast(const AstNode& ast, const TowerPtr& tower);

/// parse + eval in one step.
Value eval_expression(const std::string& src, const TowerPtr& tower);

}  // namespace kahler

#endif
