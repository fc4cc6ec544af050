#pragma once

/*
 * parser.hpp
 * ----------
 * Evaluation of the shared AST into each value type: commutative polynomials,
 * endomorphism pairs, scalars, and free(-commutative) algebra elements. The
 * AST preserves association, which is what the free evaluation consumes.
 */

#include "aut2/ast.hpp"
#include "aut2/endo2.hpp"
#include "aut2/freealg.hpp"
#include "aut2/poly2.hpp"

namespace aut2 {

template <euclidean_domain D>
typename D::Element number_in_domain(const AstNode& n) {
    const Integer num = int_from_string(n.num);
    const Integer den = int_from_string(n.den);
    auto e = D::from_rational(num, den);
    if (!e)
        throw ParseError(n.offset, "literal " + n.num + "/" + n.den +
                                       " is not an element of this coefficient ring");
    return *e;
}

template <euclidean_domain D>
typename D::Element t_in_domain(const AstNode& n) {
    auto t = D::generator_t();
    if (!t) throw ParseError(n.offset, "the symbol t is not available in this coefficient ring");
    return *t;
}

template <euclidean_domain D>
Poly2<D> eval_poly_ast(const AstPtr& n) {
    switch (n->kind) {
        case AstKind::Number: return Poly2<D>::constant(number_in_domain<D>(*n));
        case AstKind::VarT: return Poly2<D>::constant(t_in_domain<D>(*n));
        case AstKind::Var1: return Poly2<D>::variable(1);
        case AstKind::Var2: return Poly2<D>::variable(2);
        case AstKind::Neg: return negate(eval_poly_ast<D>(n->a));
        case AstKind::Add: return add(eval_poly_ast<D>(n->a), eval_poly_ast<D>(n->b));
        case AstKind::Sub: return sub(eval_poly_ast<D>(n->a), eval_poly_ast<D>(n->b));
        case AstKind::Mul: return mul(eval_poly_ast<D>(n->a), eval_poly_ast<D>(n->b));
        case AstKind::Pow: return pow(eval_poly_ast<D>(n->a), n->exponent);
    }
    throw std::logic_error("unreachable");
}

template <euclidean_domain D, bool C>
FreeElem<D, C> eval_free_ast(const AstPtr& n) {
    using F = FreeElem<D, C>;
    switch (n->kind) {
        case AstKind::Number: return F::constant(number_in_domain<D>(*n));
        case AstKind::VarT: return F::constant(t_in_domain<D>(*n));
        case AstKind::Var1: return F::generator(1);
        case AstKind::Var2: return F::generator(2);
        case AstKind::Neg: return negate(eval_free_ast<D, C>(n->a));
        case AstKind::Add: return add(eval_free_ast<D, C>(n->a), eval_free_ast<D, C>(n->b));
        case AstKind::Sub: return sub(eval_free_ast<D, C>(n->a), eval_free_ast<D, C>(n->b));
        case AstKind::Mul: return mul(eval_free_ast<D, C>(n->a), eval_free_ast<D, C>(n->b));
        case AstKind::Pow: return pow(eval_free_ast<D, C>(n->a), n->exponent);
    }
    throw std::logic_error("unreachable");
}

template <euclidean_domain D>
Poly2<D> parse_poly(std::string_view text) {
    return eval_poly_ast<D>(parse_expression_text(text));
}

template <euclidean_domain D>
EndoPair<D> parse_endo(std::string_view text) {
    auto [a, b] = parse_pair_text(text);
    return EndoPair<D>{eval_poly_ast<D>(a), eval_poly_ast<D>(b)};
}

template <euclidean_domain D>
typename D::Element parse_scalar(std::string_view text) {
    const AstPtr ast = parse_expression_text(text);
    Poly2<D> p = eval_poly_ast<D>(ast);
    if (degree(p) > 0) throw ParseError(ast->offset, "expected a scalar expression");
    return p.coeff(Word{0, 0});
}

template <euclidean_domain D, bool C = false>
FreeElem<D, C> parse_free(std::string_view text) {
    return eval_free_ast<D, C>(parse_expression_text(text));
}

template <euclidean_domain D, bool C = false>
FreeEndo<D, C> parse_free_endo(std::string_view text) {
    auto [a, b] = parse_pair_text(text);
    return FreeEndo<D, C>{eval_free_ast<D, C>(a), eval_free_ast<D, C>(b)};
}

}  // namespace aut2
