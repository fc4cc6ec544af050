#pragma once

/*
 * ast.hpp
 * -------
 * The shared input grammar, parsed to an AST that preserves association (the
 * free algebra needs the exact product tree). Precedence: ^ then unary minus
 * then * then +/-. Rational literals are NUMBER '/' NUMBER; `/` is not an
 * operator. `*` is explicit and left-associative.
 */

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aut2 {

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::string reason;
    std::vector<std::string> expected;

    ParseError(std::size_t off, std::string why, std::vector<std::string> exp = {})
        : std::runtime_error(render(off, why, exp)),
          offset(off),
          reason(std::move(why)),
          expected(std::move(exp)) {}

    static std::string render(std::size_t off, const std::string& why,
                              const std::vector<std::string>& exp) {
        std::string s = "parse error at offset " + std::to_string(off) + ": " + why;
        if (!exp.empty()) {
            s += " (expected";
            for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? ", " : " ") + exp[i];
            s += ")";
        }
        return s;
    }
};

enum class AstKind { Number, Var1, Var2, VarT, Neg, Add, Sub, Mul, Pow };

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

struct AstNode {
    AstKind kind;
    std::size_t offset = 0;     // byte offset into the original input
    std::string num;            // Number: decimal digits
    std::string den = "1";      // Number: denominator digits for p/q literals
    AstPtr a, b;                // operands
    std::int64_t exponent = 0;  // Pow
};

// whole input must be a single expression
AstPtr parse_expression_text(std::string_view text);

// "f1 ; f2"
std::pair<AstPtr, AstPtr> parse_pair_text(std::string_view text);

}  // namespace aut2
