#pragma once

/*
 * fraction.hpp
 * ------------
 * Fields of fractions for the shipped domains. Q(Z) is Q itself; Q(Q[t]) is
 * the field of rational functions, represented by reduced fractions with a
 * monic denominator. FractionTraits<D> names the field domain and provides
 * embed / is_integral.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "aut2/domain.hpp"

namespace aut2 {

// Reduced rational function: gcd(num, den) = 1, den monic, zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(RatPoly(1)) {}
    explicit RatFunc(const RatPoly& p) : num_(p), den_(RatPoly(1)) {}
    RatFunc(const RatPoly& num, const RatPoly& den) : num_(num), den_(den) { reduce(); }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("inversion of zero");
        return RatFunc(den_, num_);
    }

    std::string to_string() const {
        if (den_ == RatPoly(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    RatPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("division by zero");
        if (num_.is_zero()) {
            den_ = RatPoly(1);
            return;
        }
        RatPoly g = ratpoly_gcd(num_, den_);
        num_ = RatPoly::div_rem(num_, g).first;
        den_ = RatPoly::div_rem(den_, g).first;
        const Rat lead = den_.leading();
        den_ = den_.scaled(1 / lead);
        num_ = num_.scaled(1 / lead);
    }
};

struct RatFuncDomain {
    using Element = RatFunc;
    static constexpr bool is_field = true;

    static Element zero() { return RatFunc(); }
    static Element one() { return RatFunc(RatPoly(1)); }
    static Element from_int(std::int64_t v) { return RatFunc(RatPoly(Rat(static_cast<long>(v)))); }
    static bool is_zero(const Element& a) { return a.is_zero(); }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element sub(const Element& a, const Element& b) { return a - b; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static Element negate(const Element& a) { return -a; }

    static Integer norm(const Element& a) {
        if (a.is_zero()) throw std::domain_error("norm of zero undefined");
        return Integer(0);
    }
    static std::pair<Element, Element> div_rem(const Element& a, const Element& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return {a * b.inverse(), RatFunc()};
    }
    static std::pair<Element, Element> best_remainder(const Element& a, const Element& b) {
        return div_rem(a, b);
    }
    static bool is_unit(const Element& a) { return !a.is_zero(); }
    static Element unit_inverse(const Element& a) { return a.inverse(); }
    static std::optional<Element> divides_exactly(const Element& a, const Element& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * b.inverse();
    }
    static Element canonical_unit(const Element& a) { return a.inverse(); }
    static std::string to_string(const Element& a) { return a.to_string(); }

    static std::optional<Element> from_rational(const Integer& num, const Integer& den) {
        return RatFunc(RatPoly(make_rat(num, den)));
    }
    static std::optional<Element> generator_t() { return RatFunc(RatPoly::t()); }

    static Element random_element(Rng& rng, long bound) {
        return RatFunc(RatPolyDomain::random_element(rng, bound));
    }
    static Element random_nonzero(Rng& rng, long bound) {
        return RatFunc(RatPolyDomain::random_nonzero(rng, bound));
    }
    static Element random_unit(Rng& rng) { return RatFunc(RatPolyDomain::random_unit(rng)); }
};

static_assert(euclidean_domain<RatFuncDomain>);

template <typename D>
struct FractionTraits;

template <>
struct FractionTraits<IntegerDomain> {
    using Field = RationalFieldDomain;
    static Rat embed(const Integer& a) { return Rat(a); }
    static std::optional<Integer> is_integral(const Rat& x) {
        if (x.get_den() != 1) return std::nullopt;
        return Integer(x.get_num());
    }
};

template <>
struct FractionTraits<RationalFieldDomain> {
    using Field = RationalFieldDomain;
    static Rat embed(const Rat& a) { return a; }
    static std::optional<Rat> is_integral(const Rat& x) { return x; }
};

template <>
struct FractionTraits<RatPolyDomain> {
    using Field = RatFuncDomain;
    static RatFunc embed(const RatPoly& a) { return RatFunc(a); }
    static std::optional<RatPoly> is_integral(const RatFunc& x) {
        if (x.den() != RatPoly(1)) return std::nullopt;
        return x.num();
    }
};

}  // namespace aut2
