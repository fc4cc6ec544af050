#pragma once

/*
 * endo2.hpp
 * ---------
 * Endomorphisms of Phi[x1,x2] as component pairs, composition in the
 * substitute-first-argument convention, elementary moves with certificates,
 * the automorphism exponent D(phi) with its lexicographic order, the linear
 * base-form classification/decomposition, and affine coset representatives.
 *
 * Composition convention, fixed once: compose(phi, psi) evaluates psi's
 * coordinate polynomials on phi's components. Folding a certificate from the
 * identity applies its moves left to right; apply_move(phi, m) equals
 * compose-with-the-move's-elementary-automorphism on the right.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "aut2/poly2.hpp"

namespace aut2 {

template <euclidean_domain D>
struct EndoPair {
    Poly2<D> f1, f2;

    bool operator==(const EndoPair& o) const { return f1 == o.f1 && f2 == o.f2; }
    bool operator!=(const EndoPair& o) const { return !(*this == o); }
};

template <euclidean_domain D>
EndoPair<D> identity_endo() {
    return EndoPair<D>{Poly2<D>::variable(1), Poly2<D>::variable(2)};
}

template <euclidean_domain D>
EndoPair<D> compose(const EndoPair<D>& phi, const EndoPair<D>& psi) {
    return EndoPair<D>{substitute(psi.f1, phi.f1, phi.f2), substitute(psi.f2, phi.f1, phi.f2)};
}

// --------------------------------------------------------------------------
// elementary moves

template <euclidean_domain D>
struct ElementaryMove {
    int target = 1;                      // 1 or 2
    typename D::Element unit = D::one();  // must be a unit
    Poly2<D> addend;                     // univariate in the non-target variable

    bool operator==(const ElementaryMove& o) const {
        return target == o.target && D::equal(unit, o.unit) && addend == o.addend;
    }
};

template <euclidean_domain D>
void validate_move(const ElementaryMove<D>& m) {
    if (m.target != 1 && m.target != 2) throw std::invalid_argument("move target must be 1 or 2");
    if (!D::is_unit(m.unit))
        throw std::domain_error("elementary move scaling must be a unit");
    const bool ok = (m.target == 1) ? univariate_in_x2(m.addend) : univariate_in_x1(m.addend);
    if (!ok) throw std::invalid_argument("move addend must be univariate in the other variable");
}

template <euclidean_domain D>
EndoPair<D> apply_move(const EndoPair<D>& phi, const ElementaryMove<D>& m) {
    validate_move(m);
    const Poly2<D> evaluated = substitute(m.addend, phi.f1, phi.f2);
    if (m.target == 1) return EndoPair<D>{add(scalar_mul<D>(m.unit, phi.f1), evaluated), phi.f2};
    return EndoPair<D>{phi.f1, add(scalar_mul<D>(m.unit, phi.f2), evaluated)};
}

template <euclidean_domain D>
ElementaryMove<D> inverse_move(const ElementaryMove<D>& m) {
    const auto inv = D::unit_inverse(m.unit);
    return ElementaryMove<D>{m.target, inv, scalar_mul<D>(D::negate(inv), m.addend)};
}

template <euclidean_domain D>
struct TameCertificate {
    std::vector<ElementaryMove<D>> moves;  // application order from the identity

    bool operator==(const TameCertificate& o) const { return moves == o.moves; }
};

template <euclidean_domain D>
EndoPair<D> fold_certificate(const TameCertificate<D>& cert) {
    EndoPair<D> acc = identity_endo<D>();
    for (const auto& m : cert.moves) acc = apply_move(acc, m);
    return acc;
}

// --------------------------------------------------------------------------
// the automorphism exponent

struct DAut {
    Word u, v;  // sorted: u >= v
    Integer coeff_norm_sum;

    bool operator==(const DAut& o) const {
        return u == o.u && v == o.v && coeff_norm_sum == o.coeff_norm_sum;
    }
};

inline std::strong_ordering compare_d(const DAut& a, const DAut& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    const int n = cmp_integer(a.coeff_norm_sum, b.coeff_norm_sum);
    return n < 0 ? std::strong_ordering::less
                 : (n > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template <euclidean_domain D>
DAut d_aut(const EndoPair<D>& phi) {
    if (phi.f1.is_zero() || phi.f2.is_zero())
        throw std::domain_error("D-exponent of a pair with a zero component");
    const DExp a = d_exp(phi.f1);
    const DExp b = d_exp(phi.f2);
    DAut d;
    if (a.word >= b.word) {
        d.u = a.word;
        d.v = b.word;
    } else {
        d.u = b.word;
        d.v = a.word;
    }
    d.coeff_norm_sum = a.coeff_norm + b.coeff_norm;
    return d;
}

// D(id) = (x1, x2, 2e)
template <euclidean_domain D>
DAut base_daut() {
    const Integer e = D::norm(D::one());
    return DAut{Word{1, 0}, Word{0, 1}, e + e};
}

// --------------------------------------------------------------------------
// affine helpers

template <euclidean_domain D>
struct AffineParts {
    typename D::Element a1, b1, c1;  // f1 = a1 x1 + b1 x2 + c1
    typename D::Element a2, b2, c2;  // f2 = a2 x1 + b2 x2 + c2
};

template <euclidean_domain D>
std::optional<AffineParts<D>> affine_parts(const EndoPair<D>& phi) {
    if (degree(phi.f1) > 1 || degree(phi.f2) > 1) return std::nullopt;
    AffineParts<D> p{phi.f1.coeff(Word{1, 0}), phi.f1.coeff(Word{0, 1}), phi.f1.coeff(Word{0, 0}),
                     phi.f2.coeff(Word{1, 0}), phi.f2.coeff(Word{0, 1}), phi.f2.coeff(Word{0, 0})};
    return p;
}

template <euclidean_domain D>
typename D::Element affine_det(const AffineParts<D>& p) {
    return D::sub(D::mul(p.a1, p.b2), D::mul(p.b1, p.a2));
}

template <euclidean_domain D>
bool is_affine(const EndoPair<D>& phi) {
    return affine_parts(phi).has_value();
}

// member of H(Phi), the affine-triangular intersection: affine, no x1 in the
// second component, invertible
template <euclidean_domain D>
bool is_triangular_affine(const EndoPair<D>& phi) {
    auto p = affine_parts(phi);
    if (!p) return false;
    return D::is_zero(p->a2) && D::is_unit(affine_det(*p));
}

template <euclidean_domain D>
EndoPair<D> make_affine(const AffineParts<D>& p) {
    Poly2<D> f1, f2;
    f1.add_term(Word{1, 0}, p.a1);
    f1.add_term(Word{0, 1}, p.b1);
    f1.add_term(Word{0, 0}, p.c1);
    f2.add_term(Word{1, 0}, p.a2);
    f2.add_term(Word{0, 1}, p.b2);
    f2.add_term(Word{0, 0}, p.c2);
    return EndoPair<D>{f1, f2};
}

template <euclidean_domain D>
EndoPair<D> invert_affine(const EndoPair<D>& phi) {
    auto p = affine_parts(phi);
    if (!p) throw std::invalid_argument("invert_affine: not affine");
    const auto det = affine_det(*p);
    if (!D::is_unit(det)) throw std::domain_error("not an automorphism: non-unit determinant");
    const auto di = D::unit_inverse(det);
    AffineParts<D> q;
    q.a1 = D::mul(di, p->b2);
    q.b1 = D::negate(D::mul(di, p->b1));
    q.a2 = D::negate(D::mul(di, p->a2));
    q.b2 = D::mul(di, p->a1);
    // constants: c' = -A^{-1} c
    q.c1 = D::negate(D::add(D::mul(q.a1, p->c1), D::mul(q.b1, p->c2)));
    q.c2 = D::negate(D::add(D::mul(q.a2, p->c1), D::mul(q.b2, p->c2)));
    return make_affine(q);
}

// lambda and mu lie in the same left coset of H(Phi) iff lambda^{-1} o mu is
// triangular
template <euclidean_domain D>
bool same_affine_coset(const EndoPair<D>& lambda, const EndoPair<D>& mu) {
    return is_triangular_affine(compose(invert_affine(lambda), mu));
}

/*
 * Canonical representative of lambda * H(Phi). Right-multiplying by H scales
 * the bottom row by a unit and adds bottom-row multiples (plus translations)
 * to the top row, so the coset invariant is exactly the bottom-row direction.
 * The representative fixes: bottom row unit-normalized on its first nonzero
 * entry, top row the extended-gcd completion with determinant one, reduced
 * modulo the bottom row, no translation part.
 */
template <euclidean_domain D>
EndoPair<D> affine_coset_rep(const EndoPair<D>& lambda) {
    auto parts = affine_parts(lambda);
    if (!parts) throw std::invalid_argument("affine_coset_rep: not affine");
    if (!D::is_unit(affine_det(*parts)))
        throw std::domain_error("not an automorphism: non-unit determinant");

    using E = typename D::Element;
    E p = parts->a2, q = parts->b2;
    const E scale = D::is_zero(p) ? D::canonical_unit(q) : D::canonical_unit(p);
    p = D::mul(scale, p);
    q = D::mul(scale, q);

    auto [g, s, t] = extended_gcd<D>(p, q);
    if (!D::is_unit(g))
        throw std::domain_error("affine_coset_rep: bottom row not unimodular");
    const E gi = D::unit_inverse(g);
    E u = D::mul(gi, t);
    E v = D::negate(D::mul(gi, s));  // u*q - v*p = 1

    if (!D::is_zero(p)) {
        auto [k, r] = D::best_remainder(u, p);
        u = r;
        v = D::sub(v, D::mul(k, q));
    } else {
        auto [k, r] = D::best_remainder(v, q);
        v = r;
    }

    AffineParts<D> rep{u, v, D::zero(), p, q, D::zero()};
    return make_affine(rep);
}

// --------------------------------------------------------------------------
// linear base forms (2) and (3)

template <euclidean_domain D>
struct BaseForm {
    bool swapped;             // false: form (2); true: form (3)
    typename D::Element a;    // unit coefficient of x1 in the x1-leading component
    typename D::Element b;    // x2 coefficient in that component
    typename D::Element c;    // constant in that component
    typename D::Element beta;  // unit coefficient of x2 in the x2-leading component
    typename D::Element gamma;  // constant in that component
};

template <euclidean_domain D>
std::optional<BaseForm<D>> classify_base(const EndoPair<D>& phi) {
    if (compare_d(d_aut(phi), base_daut<D>()) != 0)
        throw std::invalid_argument("classify_base requires D(phi) = (x1, x2, 2e)");
    auto p = affine_parts(phi);
    if (!p) return std::nullopt;
    if (!D::is_zero(p->a1) && D::is_zero(p->a2)) {
        if (!D::is_unit(p->a1) || !D::is_unit(p->b2)) return std::nullopt;
        return BaseForm<D>{false, p->a1, p->b1, p->c1, p->b2, p->c2};
    }
    if (D::is_zero(p->a1) && !D::is_zero(p->a2)) {
        if (!D::is_unit(p->a2) || !D::is_unit(p->b1)) return std::nullopt;
        return BaseForm<D>{true, p->a2, p->b2, p->c2, p->b1, p->c1};
    }
    return std::nullopt;
}

namespace detail {

template <euclidean_domain D>
void push_move(std::vector<ElementaryMove<D>>& moves, int target, typename D::Element unit,
               Poly2<D> addend) {
    if (D::equal(unit, D::one()) && addend.is_zero()) return;  // no-op
    moves.push_back(ElementaryMove<D>{target, std::move(unit), std::move(addend)});
}

}  // namespace detail

/*
 * Elementary-move certificate for a linear base-form automorphism; folding
 * the moves from the identity reproduces the input. Form (3) routes through
 * the standard three-move unimodular swap.
 */
template <euclidean_domain D>
TameCertificate<D> decompose_linear(const EndoPair<D>& phi) {
    auto form = classify_base(phi);
    if (!form) throw std::domain_error("decompose_linear: not an automorphism");

    using E = typename D::Element;
    std::vector<ElementaryMove<D>> moves;
    const Poly2<D> x1 = Poly2<D>::variable(1);
    const Poly2<D> x2 = Poly2<D>::variable(2);

    if (!form->swapped) {
        // (a x1 + b x2 + c, beta x2 + gamma)
        detail::push_move<D>(moves, 2, form->beta, Poly2<D>::constant(form->gamma));
        const E bi = D::unit_inverse(form->beta);
        const E lin = D::mul(form->b, bi);
        Poly2<D> h = scalar_mul<D>(lin, x2);
        h.add_term(Word{0, 0}, D::sub(form->c, D::mul(lin, form->gamma)));
        detail::push_move<D>(moves, 1, form->a, std::move(h));
    } else {
        // (beta x2 + gamma, a x1 + b x2 + c) via the swap (x2, x1)
        moves.push_back(ElementaryMove<D>{1, D::negate(D::one()), x2});
        moves.push_back(ElementaryMove<D>{2, D::one(), negate(x1)});
        moves.push_back(ElementaryMove<D>{1, D::one(), x2});
        Poly2<D> h = scalar_mul<D>(form->b, x1);  // evaluated on f1 = x2 after the swap
        h.add_term(Word{0, 0}, form->c);
        detail::push_move<D>(moves, 2, form->a, std::move(h));
        detail::push_move<D>(moves, 1, form->beta, Poly2<D>::constant(form->gamma));
    }
    return TameCertificate<D>{std::move(moves)};
}

// --------------------------------------------------------------------------
// the Nagata automorphism over the polynomial algebra

template <euclidean_domain D>
Poly2<D> nagata_w(const typename D::Element& z) {
    // w = z x1 - x2^2
    Poly2<D> w;
    w.add_term(Word{1, 0}, z);
    w.add_term(Word{0, 2}, D::negate(D::one()));
    return w;
}

template <euclidean_domain D>
EndoPair<D> nagata_sigma(const typename D::Element& z) {
    if (D::is_zero(z)) throw std::domain_error("nagata_sigma: z must be nonzero");
    const Poly2<D> w = nagata_w<D>(z);
    const Poly2<D> x1 = Poly2<D>::variable(1);
    const Poly2<D> x2 = Poly2<D>::variable(2);
    const Poly2<D> two_x2w = scalar_mul<D>(D::from_int(2), mul(x2, w));
    Poly2<D> f = add(x1, add(two_x2w, scalar_mul<D>(z, mul(w, w))));
    Poly2<D> g = add(x2, scalar_mul<D>(z, w));
    return EndoPair<D>{std::move(f), std::move(g)};
}

}  // namespace aut2
