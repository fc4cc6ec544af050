#pragma once

/*
 * poly2.hpp
 * ---------
 * Sparse bivariate polynomials over a Euclidean domain, ordered by the word
 * order so the leading term is the first map entry. Carries the leading data
 * (word, coefficient) and the D-exponent D(f) = (leading word, |lc(f)|).
 */

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "aut2/domain.hpp"
#include "aut2/word.hpp"

namespace aut2 {

// degree(0); a sentinel below every attainable degree keeps affine-shape
// checks free of zero special cases
inline constexpr std::int64_t kDegreeNegInf = std::numeric_limits<std::int64_t>::min();

// D(f) of a nonzero polynomial
struct DExp {
    Word word;
    Integer coeff_norm;

    bool operator==(const DExp& o) const { return word == o.word && coeff_norm == o.coeff_norm; }
};

inline std::strong_ordering compare_dexp(const DExp& a, const DExp& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    const int n = cmp_integer(a.coeff_norm, b.coeff_norm);
    return n < 0 ? std::strong_ordering::less
                 : (n > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template <euclidean_domain D>
class Poly2 {
public:
    using Elem = typename D::Element;
    using TermMap = std::map<Word, Elem, WordGreater>;  // descending words

    Poly2() = default;

    static Poly2 zero() { return Poly2(); }
    static Poly2 constant(const Elem& c) {
        Poly2 p;
        p.add_term(Word{0, 0}, c);
        return p;
    }
    static Poly2 from_int(std::int64_t v) { return constant(D::from_int(v)); }
    // i is 1 or 2
    static Poly2 variable(int i) {
        Poly2 p;
        p.add_term(i == 1 ? Word{1, 0} : Word{0, 1}, D::one());
        return p;
    }
    static Poly2 monomial(const Word& w, const Elem& c) {
        Poly2 p;
        p.add_term(w, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Elem coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? D::zero() : it->second;
    }

    std::pair<Word, Elem> leading() const {
        if (terms_.empty()) throw std::domain_error("leading of zero");
        return *terms_.begin();
    }
    Word leading_word() const { return leading().first; }

    void add_term(const Word& w, const Elem& c) {
        if (D::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second = D::add(it->second, c);
            if (D::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool operator==(const Poly2& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !D::equal(a->second, b->second)) return false;
        return true;
    }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

template <euclidean_domain D>
DExp d_exp(const Poly2<D>& f) {
    auto [w, c] = f.leading();
    return DExp{w, D::norm(c)};
}

template <euclidean_domain D>
Poly2<D> add(const Poly2<D>& a, const Poly2<D>& b) {
    Poly2<D> r = a;
    for (const auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

template <euclidean_domain D>
Poly2<D> negate(const Poly2<D>& a) {
    Poly2<D> r;
    for (const auto& [w, c] : a.terms()) r.add_term(w, D::negate(c));
    return r;
}

template <euclidean_domain D>
Poly2<D> sub(const Poly2<D>& a, const Poly2<D>& b) {
    Poly2<D> r = a;
    for (const auto& [w, c] : b.terms()) r.add_term(w, D::negate(c));
    return r;
}

template <euclidean_domain D>
Poly2<D> mul(const Poly2<D>& a, const Poly2<D>& b) {
    Poly2<D> r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(word_mul(wa, wb), D::mul(ca, cb));
    return r;
}

template <euclidean_domain D>
Poly2<D> scalar_mul(const typename D::Element& s, const Poly2<D>& a) {
    Poly2<D> r;
    if (D::is_zero(s)) return r;
    for (const auto& [w, c] : a.terms()) r.add_term(w, D::mul(s, c));
    return r;
}

template <euclidean_domain D>
Poly2<D> pow(const Poly2<D>& a, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly2<D> r = Poly2<D>::constant(D::one());
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

template <euclidean_domain D>
Poly2<D> operator+(const Poly2<D>& a, const Poly2<D>& b) { return add(a, b); }
template <euclidean_domain D>
Poly2<D> operator-(const Poly2<D>& a, const Poly2<D>& b) { return sub(a, b); }
template <euclidean_domain D>
Poly2<D> operator-(const Poly2<D>& a) { return negate(a); }
template <euclidean_domain D>
Poly2<D> operator*(const Poly2<D>& a, const Poly2<D>& b) { return mul(a, b); }

template <euclidean_domain D>
std::int64_t degree(const Poly2<D>& f) {
    if (f.is_zero()) return kDegreeNegInf;
    std::int64_t d = 0;
    for (const auto& [w, c] : f.terms()) d = std::max(d, w.degree());
    return d;  // the leading word has maximal degree, but keep this shape-agnostic
}

// i is 1 or 2
template <euclidean_domain D>
std::int64_t degree_in(const Poly2<D>& f, int i) {
    if (f.is_zero()) return kDegreeNegInf;
    std::int64_t d = 0;
    for (const auto& [w, c] : f.terms()) d = std::max(d, i == 1 ? w.l : w.m);
    return d;
}

template <euclidean_domain D>
bool univariate_in_x2(const Poly2<D>& f) {
    for (const auto& [w, c] : f.terms())
        if (w.l != 0) return false;
    return true;
}

template <euclidean_domain D>
bool univariate_in_x1(const Poly2<D>& f) {
    for (const auto& [w, c] : f.terms())
        if (w.m != 0) return false;
    return true;
}

// Horner-style exact evaluation of f at x1 <- g1, x2 <- g2. Terms are grouped
// by the x1-exponent; each row is folded in g2 with gap powers, then the rows
// are folded in g1.
template <euclidean_domain D>
Poly2<D> substitute(const Poly2<D>& f, const Poly2<D>& g1, const Poly2<D>& g2) {
    if (f.is_zero()) return Poly2<D>();

    // rows[l] = sorted (m desc, coeff) of terms x1^l x2^m
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, typename D::Element>>,
             std::greater<>>
        rows;
    for (const auto& [w, c] : f.terms()) rows[w.l].emplace_back(w.m, c);

    auto horner_row = [&](const std::vector<std::pair<std::int64_t, typename D::Element>>& row) {
        Poly2<D> acc;
        std::int64_t prev_m = 0;
        bool first = true;
        for (const auto& [m, c] : row) {  // m descending (insertion order from the term map)
            if (first) {
                acc = Poly2<D>::constant(c);
                prev_m = m;
                first = false;
            } else {
                acc = mul(acc, pow(g2, prev_m - m));
                acc = add(acc, Poly2<D>::constant(c));
                prev_m = m;
            }
        }
        if (prev_m > 0) acc = mul(acc, pow(g2, prev_m));
        return acc;
    };

    Poly2<D> result;
    std::int64_t prev_l = 0;
    bool first = true;
    for (const auto& [l, row] : rows) {  // l descending
        Poly2<D> row_val = horner_row(row);
        if (first) {
            result = row_val;
            prev_l = l;
            first = false;
        } else {
            result = mul(result, pow(g1, prev_l - l));
            result = add(result, row_val);
            prev_l = l;
        }
    }
    if (prev_l > 0) result = mul(result, pow(g1, prev_l));
    return result;
}

}  // namespace aut2
