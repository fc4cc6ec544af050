#pragma once

/*
 * freealg.hpp
 * -----------
 * The free nonassociative algebra on x1, x2: monomials are binary trees over
 * the two generators, elements are finite linear combinations (a constant
 * term is permitted, making the algebra unital). The commutative variant
 * keeps every node's children in a fixed canonical order, so structurally
 * different spellings of the same commutative product coincide.
 *
 * Powers are left-normed: w^n = w^(n-1) * w.
 */

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "aut2/endo2.hpp"
#include "aut2/poly2.hpp"

namespace aut2 {

class MagmaWord {
public:
    static MagmaWord leaf(int var) {
        if (var != 1 && var != 2) throw std::invalid_argument("magma leaf variable must be 1 or 2");
        MagmaWord w;
        w.node_ = std::make_shared<const Node>(Node{var, nullptr, nullptr, 1});
        return w;
    }

    static MagmaWord node(const MagmaWord& l, const MagmaWord& r) {
        MagmaWord w;
        w.node_ = std::make_shared<const Node>(Node{0, l.node_, r.node_, l.degree() + r.degree()});
        return w;
    }

    bool is_leaf() const { return node_->var != 0; }
    int var() const {
        if (!is_leaf()) throw std::logic_error("var() on an interior node");
        return node_->var;
    }
    MagmaWord left() const { return MagmaWord(node_->l); }
    MagmaWord right() const { return MagmaWord(node_->r); }
    int degree() const { return node_->deg; }  // leaf count

    // total order: by degree, then leaf-before-node, then leaf tag (x1 < x2),
    // then recursively (left, right); also the canonical child order of the
    // commutative variant
    friend int magma_cmp(const MagmaWord& a, const MagmaWord& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
        if (a.is_leaf()) {
            if (a.var() != b.var()) return a.var() < b.var() ? -1 : 1;
            return 0;
        }
        if (int c = magma_cmp(a.left(), b.left()); c != 0) return c;
        return magma_cmp(a.right(), b.right());
    }

    bool operator==(const MagmaWord& o) const { return magma_cmp(*this, o) == 0; }
    bool operator!=(const MagmaWord& o) const { return magma_cmp(*this, o) != 0; }
    bool operator<(const MagmaWord& o) const { return magma_cmp(*this, o) < 0; }

    // leaf counts per variable, for abelianization
    void count_leaves(std::int64_t& n1, std::int64_t& n2) const {
        if (is_leaf()) {
            (var() == 1 ? n1 : n2) += 1;
            return;
        }
        left().count_leaves(n1, n2);
        right().count_leaves(n1, n2);
    }

private:
    struct Node {
        int var;  // 0 for interior nodes
        std::shared_ptr<const Node> l, r;
        int deg;
    };
    std::shared_ptr<const Node> node_;

    MagmaWord() = default;
    explicit MagmaWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// sort children recursively; idempotent by construction
inline MagmaWord canonicalize(const MagmaWord& w) {
    if (w.is_leaf()) return w;
    MagmaWord l = canonicalize(w.left());
    MagmaWord r = canonicalize(w.right());
    return magma_cmp(l, r) <= 0 ? MagmaWord::node(l, r) : MagmaWord::node(r, l);
}

template <euclidean_domain D, bool Commutative = false>
class FreeElem {
public:
    using Elem = typename D::Element;
    using TermMap = std::map<MagmaWord, Elem>;

    FreeElem() : constant_(D::zero()) {}

    static FreeElem zero() { return FreeElem(); }
    static FreeElem constant(const Elem& c) {
        FreeElem e;
        e.constant_ = c;
        return e;
    }
    static FreeElem generator(int var) {
        FreeElem e;
        e.add_term(MagmaWord::leaf(var), D::one());
        return e;
    }
    static FreeElem monomial(const MagmaWord& w, const Elem& c) {
        FreeElem e;
        e.add_term(w, c);
        return e;
    }

    bool is_zero() const { return terms_.empty() && D::is_zero(constant_); }
    const TermMap& terms() const { return terms_; }
    const Elem& constant_part() const { return constant_; }

    void add_constant(const Elem& c) { constant_ = D::add(constant_, c); }

    void add_term(const MagmaWord& w, const Elem& c) {
        if (D::is_zero(c)) return;
        const MagmaWord key = Commutative ? canonicalize(w) : w;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = D::add(it->second, c);
            if (D::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool operator==(const FreeElem& o) const {
        if (!D::equal(constant_, o.constant_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !D::equal(a->second, b->second)) return false;
        return true;
    }
    bool operator!=(const FreeElem& o) const { return !(*this == o); }

private:
    Elem constant_;
    TermMap terms_;
};

template <euclidean_domain D, bool C>
FreeElem<D, C> add(const FreeElem<D, C>& a, const FreeElem<D, C>& b) {
    FreeElem<D, C> r = a;
    r.add_constant(b.constant_part());
    for (const auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

template <euclidean_domain D, bool C>
FreeElem<D, C> negate(const FreeElem<D, C>& a) {
    FreeElem<D, C> r;
    r.add_constant(D::negate(a.constant_part()));
    for (const auto& [w, c] : a.terms()) r.add_term(w, D::negate(c));
    return r;
}

template <euclidean_domain D, bool C>
FreeElem<D, C> sub(const FreeElem<D, C>& a, const FreeElem<D, C>& b) {
    return add(a, negate(b));
}

template <euclidean_domain D, bool C>
FreeElem<D, C> scalar_mul(const typename D::Element& s, const FreeElem<D, C>& a) {
    FreeElem<D, C> r;
    if (D::is_zero(s)) return r;
    r.add_constant(D::mul(s, a.constant_part()));
    for (const auto& [w, c] : a.terms()) r.add_term(w, D::mul(s, c));
    return r;
}

// bilinear extension of the magma product; the commutative variant
// canonicalizes every created node (through add_term)
template <euclidean_domain D, bool C>
FreeElem<D, C> mul(const FreeElem<D, C>& a, const FreeElem<D, C>& b) {
    FreeElem<D, C> r;
    r.add_constant(D::mul(a.constant_part(), b.constant_part()));
    for (const auto& [w, c] : a.terms()) r.add_term(w, D::mul(c, b.constant_part()));
    for (const auto& [w, c] : b.terms()) r.add_term(w, D::mul(a.constant_part(), c));
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            r.add_term(MagmaWord::node(wa, wb), D::mul(ca, cb));
    return r;
}

// left-normed power: a^n = a^(n-1) * a
template <euclidean_domain D, bool C>
FreeElem<D, C> pow(const FreeElem<D, C>& a, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative power in the free algebra");
    FreeElem<D, C> r = FreeElem<D, C>::constant(D::one());
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

template <euclidean_domain D, bool C>
FreeElem<D, C> operator+(const FreeElem<D, C>& a, const FreeElem<D, C>& b) { return add(a, b); }
template <euclidean_domain D, bool C>
FreeElem<D, C> operator-(const FreeElem<D, C>& a, const FreeElem<D, C>& b) { return sub(a, b); }
template <euclidean_domain D, bool C>
FreeElem<D, C> operator-(const FreeElem<D, C>& a) { return negate(a); }
template <euclidean_domain D, bool C>
FreeElem<D, C> operator*(const FreeElem<D, C>& a, const FreeElem<D, C>& b) { return mul(a, b); }

// endomorphism given by the images of the generators
template <euclidean_domain D, bool C = false>
struct FreeEndo {
    FreeElem<D, C> b1, b2;
};

template <euclidean_domain D, bool C>
FreeElem<D, C> apply_free_endo(const FreeEndo<D, C>& e, const FreeElem<D, C>& f) {
    const auto image_of_word = [&](const MagmaWord& w, const auto& self) -> FreeElem<D, C> {
        if (w.is_leaf()) return w.var() == 1 ? e.b1 : e.b2;
        return mul(self(w.left(), self), self(w.right(), self));
    };
    FreeElem<D, C> r = FreeElem<D, C>::constant(f.constant_part());
    for (const auto& [w, c] : f.terms())
        r = add(r, scalar_mul<D, C>(c, image_of_word(w, image_of_word)));
    return r;
}

template <euclidean_domain D, bool C>
FreeEndo<D, C> identity_free_endo() {
    return FreeEndo<D, C>{FreeElem<D, C>::generator(1), FreeElem<D, C>::generator(2)};
}

// same convention as EndoPair composition: the second argument's images are
// pushed through the first
template <euclidean_domain D, bool C>
FreeEndo<D, C> compose_free(const FreeEndo<D, C>& e1, const FreeEndo<D, C>& e2) {
    return FreeEndo<D, C>{apply_free_endo(e1, e2.b1), apply_free_endo(e1, e2.b2)};
}

// --------------------------------------------------------------------------
// the Nagata analogue and its generator-recovery chain

template <euclidean_domain D, bool C = false>
FreeElem<D, C> nagata_free_w(const typename D::Element& z) {
    const auto x1 = FreeElem<D, C>::generator(1);
    const auto x2 = FreeElem<D, C>::generator(2);
    return sub(scalar_mul<D, C>(z, x1), mul(x2, x2));
}

template <euclidean_domain D, bool C = false>
FreeEndo<D, C> nagata_eta(const typename D::Element& z) {
    if (D::is_zero(z) || D::is_unit(z))
        throw std::domain_error("z must be a nonzero nonunit");
    const auto x1 = FreeElem<D, C>::generator(1);
    const auto x2 = FreeElem<D, C>::generator(2);
    const auto w = nagata_free_w<D, C>(z);
    // b1 = x1 + x2*w + w*x2 + z*w^2,  b2 = x2 + z*w
    FreeElem<D, C> b1 = add(add(x1, mul(x2, w)), add(mul(w, x2), scalar_mul<D, C>(z, mul(w, w))));
    FreeElem<D, C> b2 = add(x2, scalar_mul<D, C>(z, w));
    return FreeEndo<D, C>{std::move(b1), std::move(b2)};
}

// commutative-magma analogue: (x + 2y(zx - y^2) + z(zx - y^2)^2, y + z(zx - y^2))
template <euclidean_domain D>
FreeEndo<D, true> nagata_omega(const typename D::Element& z) {
    if (D::is_zero(z) || D::is_unit(z))
        throw std::domain_error("z must be a nonzero nonunit");
    const auto x1 = FreeElem<D, true>::generator(1);
    const auto x2 = FreeElem<D, true>::generator(2);
    const auto w = nagata_free_w<D, true>(z);
    FreeElem<D, true> b1 =
        add(x1, add(scalar_mul<D, true>(D::from_int(2), mul(x2, w)),
                    scalar_mul<D, true>(z, mul(w, w))));
    FreeElem<D, true> b2 = add(x2, scalar_mul<D, true>(z, w));
    return FreeEndo<D, true>{std::move(b1), std::move(b2)};
}

/*
 * Generator recovery:
 *   s1 = z b1 - b2^2
 *   s2 = b2 - z s1
 *   s3 = z b1 - b2^2 + s2^2   (= s1 + s2^2)
 *   s4 = b1 - s2 s3 + s2 s2^2 - s3 s2 + s2^2 s2
 *           - z s3^2 + z s3 s2^2 + z s2^2 s3 - z s2^2 s2^2
 * True iff s2 = x2 and s4 = x1 exactly, which exhibits both generators inside
 * the image subalgebra.
 */
template <euclidean_domain D, bool C>
bool generator_recovery_chain(const FreeEndo<D, C>& e, const typename D::Element& z) {
    using F = FreeElem<D, C>;
    const F x1 = F::generator(1);
    const F x2 = F::generator(2);
    const F b1 = e.b1, b2 = e.b2;

    const F s1 = sub(scalar_mul<D, C>(z, b1), mul(b2, b2));
    const F s2 = sub(b2, scalar_mul<D, C>(z, s1));
    const F s2sq = mul(s2, s2);
    const F s3 = add(s1, s2sq);

    F s4 = b1;
    s4 = sub(s4, mul(s2, s3));
    s4 = add(s4, mul(s2, s2sq));
    s4 = sub(s4, mul(s3, s2));
    s4 = add(s4, mul(s2sq, s2));
    s4 = sub(s4, scalar_mul<D, C>(z, mul(s3, s3)));
    s4 = add(s4, scalar_mul<D, C>(z, mul(s3, s2sq)));
    s4 = add(s4, scalar_mul<D, C>(z, mul(s2sq, s3)));
    s4 = sub(s4, scalar_mul<D, C>(z, mul(s2sq, s2sq)));

    return s2 == x2 && s4 == x1;
}

// --------------------------------------------------------------------------
// abelianization: forget association and order

template <euclidean_domain D, bool C>
Poly2<D> abelianize(const FreeElem<D, C>& f) {
    Poly2<D> r;
    r.add_term(Word{0, 0}, f.constant_part());
    for (const auto& [w, c] : f.terms()) {
        std::int64_t n1 = 0, n2 = 0;
        w.count_leaves(n1, n2);
        r.add_term(Word{n1, n2}, c);
    }
    return r;
}

template <euclidean_domain D, bool C>
EndoPair<D> tau_star(const FreeEndo<D, C>& e) {
    return EndoPair<D>{abelianize(e.b1), abelianize(e.b2)};
}

}  // namespace aut2
