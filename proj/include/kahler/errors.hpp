#ifndef KAHLER_ERRORS_HPP
#define KAHLER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kahler {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DuplicateSymbol : Error {
    explicit DuplicateSymbol(const std::string& name)
        : Error("duplicate symbol: " + name) {}
};

struct NonMonicMinimalPolynomial : Error {
    NonMonicMinimalPolynomial() : Error("minimal polynomial is not monic") {}
};

struct InseparableMinimalPolynomial : Error {
    InseparableMinimalPolynomial()
        : Error("minimal polynomial is not separable") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
};

struct MismatchedDecomposition : Error {
    MismatchedDecomposition()
        : Error("squarefree decomposition does not match the denominator") {}
};

struct NonUnit : Error {
    NonUnit() : Error("constant term vanishes: not a unit in K[eps]") {}
};

struct TypeMismatch : Error {
    explicit TypeMismatch(const std::string& what)
        : Error("type mismatch: " + what) {}
};

struct EpsSquared : Error {
    EpsSquared() : Error("eps-degree >= 2") {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

struct UnknownSymbol : Error {
    UnknownSymbol(const std::string& name, std::size_t pos)
        : Error("unknown symbol at position " + std::to_string(pos) + ": " + name),
          position(pos) {}
    std::size_t position;
};

}  // namespace kahler

#endif
