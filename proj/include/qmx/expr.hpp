#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmx/freealg.hpp"

namespace qmx {

/// Syntax error with the 0-based character offset where it happened.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Abstract syntax tree of the input language:
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' nat)*
///   primary := 'q' | q^-k | integer | integer '/' integer
///            | 'Z' '[' i ',' j ']' | '(' expr ')'
///
/// `*` is noncommutative concatenation on generator-valued subexpressions;
/// scalars commute with everything. `q^-k` is a single lexer token; negative
/// exponents never apply to anything else.
struct Expr {
    enum class Kind { Scalar, Gen, Add, Sub, Mul, Neg, Pow };

    Kind kind = Kind::Scalar;
    LaurentPoly scalar;      // Kind::Scalar
    Generator gen;           // Kind::Gen
    unsigned exponent = 0;   // Kind::Pow
    std::vector<Expr> kids;  // operands
};

/// Parse with generator indices checked against 1..n.
Expr parse_expr(std::string_view text, int n);

/// Evaluate to an element of the free algebra; scalar atoms are evaluated in
/// the given q-mode.
NCPoly eval_expr(const Expr& e, const QMode& mode);

inline NCPoly parse_poly(std::string_view text, int n, const QMode& mode = QMode::generic()) {
    return eval_expr(parse_expr(text, n), mode);
}

}  // namespace qmx
