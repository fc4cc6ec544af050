#pragma once

/*
 * domain.hpp
 * ----------
 * The Euclidean-domain abstraction and its three concrete instances:
 *
 *   IntegerDomain        Z with the absolute value as norm (e = 1)
 *   RationalFieldDomain  Q in degenerate "field mode" (norm == 0, e = 0);
 *                        every nonzero element is a unit, so division is
 *                        exact and E1/E2 hold trivially
 *   RatPolyDomain        Q[t] with the degree as norm (e = 0)
 *
 * Domains are stateless types with static operations over their Element
 * type; everything downstream (polynomials, endomorphisms, the decider) is
 * templated on the domain.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "aut2/numbers.hpp"
#include "aut2/ratpoly.hpp"
#include "aut2/rng.hpp"

namespace aut2 {

enum class DomainKind { Integers, RationalField, RatPoly1 };

struct DomainDescriptor {
    DomainKind kind;
    unsigned unit_norm_e;  // norm(1)
};

template <typename D>
concept euclidean_domain = requires(const typename D::Element& a, const typename D::Element& b) {
    typename D::Element;
    { D::zero() } -> std::convertible_to<typename D::Element>;
    { D::one() } -> std::convertible_to<typename D::Element>;
    { D::from_int(std::int64_t{}) } -> std::convertible_to<typename D::Element>;
    { D::is_zero(a) } -> std::convertible_to<bool>;
    { D::equal(a, b) } -> std::convertible_to<bool>;
    { D::add(a, b) } -> std::convertible_to<typename D::Element>;
    { D::sub(a, b) } -> std::convertible_to<typename D::Element>;
    { D::mul(a, b) } -> std::convertible_to<typename D::Element>;
    { D::negate(a) } -> std::convertible_to<typename D::Element>;
    { D::norm(a) } -> std::convertible_to<Integer>;
    { D::div_rem(a, b) } -> std::convertible_to<std::pair<typename D::Element, typename D::Element>>;
    { D::best_remainder(a, b) } -> std::convertible_to<std::pair<typename D::Element, typename D::Element>>;
    { D::is_unit(a) } -> std::convertible_to<bool>;
    { D::unit_inverse(a) } -> std::convertible_to<typename D::Element>;
    { D::divides_exactly(a, b) } -> std::convertible_to<std::optional<typename D::Element>>;
    { D::canonical_unit(a) } -> std::convertible_to<typename D::Element>;
    { D::to_string(a) } -> std::convertible_to<std::string>;
};

struct IntegerDomain {
    using Element = Integer;
    static constexpr bool is_field = false;

    static DomainDescriptor descriptor() { return {DomainKind::Integers, 1}; }
    static Element zero() { return Integer(0); }
    static Element one() { return Integer(1); }
    static Element from_int(std::int64_t v) { return Integer(static_cast<long>(v)); }
    static bool is_zero(const Element& a) { return a == 0; }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element sub(const Element& a, const Element& b) { return a - b; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static Element negate(const Element& a) { return -a; }

    static Integer norm(const Element& a) {
        if (a == 0) throw std::domain_error("norm of zero undefined");
        return int_abs(a);
    }

    static std::pair<Element, Element> div_rem(const Element& a, const Element& b) {
        Integer q, r;
        int_divmod(a, b, q, r);
        return {q, r};
    }

    // Balanced remainder: |r| minimal over the coset a + bZ, ties broken
    // toward nonnegative r. A single division with this remainder detects
    // every possible coefficient-norm drop.
    static std::pair<Element, Element> best_remainder(const Element& a, const Element& b) {
        Integer q0, r0;
        int_divmod(a, b, q0, r0);
        Integer best_q = q0, best_r = r0;
        for (int d = -1; d <= 1; d += 2) {
            Integer q = q0 + d;
            Integer r = a - b * q;
            const int c = cmp(int_abs(r), int_abs(best_r));
            if (c < 0 || (c == 0 && best_r < 0 && r >= 0)) {
                best_q = q;
                best_r = r;
            }
        }
        return {best_q, best_r};
    }

    static bool is_unit(const Element& a) { return a == 1 || a == -1; }
    static Element unit_inverse(const Element& a) {
        if (!is_unit(a)) throw std::domain_error("not a unit");
        return a;
    }

    static std::optional<Element> divides_exactly(const Element& a, const Element& b) {
        auto [q, r] = div_rem(a, b);
        if (r != 0) return std::nullopt;
        return q;
    }

    static Element canonical_unit(const Element& a) {
        if (a == 0) throw std::domain_error("canonical unit of zero");
        return a < 0 ? Integer(-1) : Integer(1);
    }

    static std::string to_string(const Element& a) { return aut2::to_string(a); }

    static std::optional<Element> from_rational(const Integer& num, const Integer& den) {
        Rat q = make_rat(num, den);
        if (q.get_den() != 1) return std::nullopt;
        return Integer(q.get_num());
    }
    static std::optional<Element> generator_t() { return std::nullopt; }

    static Element random_element(Rng& rng, long bound) { return Integer(rng.range(-bound, bound)); }
    static Element random_nonzero(Rng& rng, long bound) {
        Element e;
        do {
            e = random_element(rng, bound);
        } while (e == 0);
        return e;
    }
    static Element random_unit(Rng& rng) { return Integer(rng.coin() ? 1 : -1); }
};

struct RationalFieldDomain {
    using Element = Rat;
    static constexpr bool is_field = true;

    static DomainDescriptor descriptor() { return {DomainKind::RationalField, 0}; }
    static Element zero() { return Rat(0); }
    static Element one() { return Rat(1); }
    static Element from_int(std::int64_t v) { return Rat(static_cast<long>(v)); }
    static bool is_zero(const Element& a) { return a == 0; }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element sub(const Element& a, const Element& b) { return a - b; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static Element negate(const Element& a) { return -a; }

    static Integer norm(const Element& a) {
        if (a == 0) throw std::domain_error("norm of zero undefined");
        return Integer(0);
    }

    static std::pair<Element, Element> div_rem(const Element& a, const Element& b) {
        if (b == 0) throw std::domain_error("division by zero");
        return {a / b, Rat(0)};
    }
    static std::pair<Element, Element> best_remainder(const Element& a, const Element& b) {
        return div_rem(a, b);
    }

    static bool is_unit(const Element& a) { return a != 0; }
    static Element unit_inverse(const Element& a) {
        if (a == 0) throw std::domain_error("inversion of zero");
        return 1 / a;
    }

    static std::optional<Element> divides_exactly(const Element& a, const Element& b) {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }

    static Element canonical_unit(const Element& a) { return unit_inverse(a); }

    static std::string to_string(const Element& a) { return aut2::to_string(a); }

    static std::optional<Element> from_rational(const Integer& num, const Integer& den) {
        return make_rat(num, den);
    }
    static std::optional<Element> generator_t() { return std::nullopt; }

    static Element random_element(Rng& rng, long bound) {
        return make_rat(Integer(rng.range(-bound, bound)), Integer(rng.range(1, bound)));
    }
    static Element random_nonzero(Rng& rng, long bound) {
        Element e;
        do {
            e = random_element(rng, bound);
        } while (e == 0);
        return e;
    }
    static Element random_unit(Rng& rng) { return random_nonzero(rng, 3); }
};

struct RatPolyDomain {
    using Element = RatPoly;
    static constexpr bool is_field = false;

    static DomainDescriptor descriptor() { return {DomainKind::RatPoly1, 0}; }
    static Element zero() { return RatPoly(); }
    static Element one() { return RatPoly(1); }
    static Element from_int(std::int64_t v) { return RatPoly(Rat(static_cast<long>(v))); }
    static bool is_zero(const Element& a) { return a.is_zero(); }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element sub(const Element& a, const Element& b) { return a - b; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static Element negate(const Element& a) { return -a; }

    static Integer norm(const Element& a) {
        if (a.is_zero()) throw std::domain_error("norm of zero undefined");
        return Integer(a.degree());
    }

    static std::pair<Element, Element> div_rem(const Element& a, const Element& b) {
        return RatPoly::div_rem(a, b);
    }
    // Over field coefficients the division remainder is the unique coset
    // representative of degree < deg b, hence already norm-minimal.
    static std::pair<Element, Element> best_remainder(const Element& a, const Element& b) {
        return RatPoly::div_rem(a, b);
    }

    static bool is_unit(const Element& a) { return !a.is_zero() && a.degree() == 0; }
    static Element unit_inverse(const Element& a) {
        if (!is_unit(a)) throw std::domain_error("not a unit");
        return RatPoly(Rat(1 / a.leading()));
    }

    static std::optional<Element> divides_exactly(const Element& a, const Element& b) {
        auto [q, r] = RatPoly::div_rem(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    static Element canonical_unit(const Element& a) {
        if (a.is_zero()) throw std::domain_error("canonical unit of zero");
        return RatPoly(Rat(1 / a.leading()));
    }

    static std::string to_string(const Element& a) { return a.to_string(); }

    static std::optional<Element> from_rational(const Integer& num, const Integer& den) {
        return RatPoly(make_rat(num, den));
    }
    static std::optional<Element> generator_t() { return RatPoly::t(); }

    static Element random_element(Rng& rng, long bound) {
        const long deg = rng.range(0, 2);
        std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = Rat(rng.range(-bound, bound));
        return RatPoly(std::move(c));
    }
    static Element random_nonzero(Rng& rng, long bound) {
        Element e;
        do {
            e = random_element(rng, bound);
        } while (e.is_zero());
        return e;
    }
    static Element random_unit(Rng& rng) {
        return RatPoly(Rat(rng.range(1, 3) * (rng.coin() ? 1 : -1)));
    }
};

static_assert(euclidean_domain<IntegerDomain>);
static_assert(euclidean_domain<RationalFieldDomain>);
static_assert(euclidean_domain<RatPolyDomain>);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g. Works in any of the
// supported domains through div_rem.
template <euclidean_domain D>
std::tuple<typename D::Element, typename D::Element, typename D::Element> extended_gcd(
    typename D::Element a, typename D::Element b) {
    using E = typename D::Element;
    E s0 = D::one(), t0 = D::zero();
    E s1 = D::zero(), t1 = D::one();
    while (!D::is_zero(b)) {
        auto [q, r] = D::div_rem(a, b);
        E s2 = D::sub(s0, D::mul(q, s1));
        E t2 = D::sub(t0, D::mul(q, t1));
        a = b;
        b = r;
        s0 = s1;
        t0 = t1;
        s1 = s2;
        t1 = t2;
    }
    return {a, s0, t0};
}

}  // namespace aut2
