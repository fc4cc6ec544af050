#pragma once

/*
 * ratpoly.hpp
 * -----------
 * Dense univariate polynomials in the reserved symbol `t` with exact rational
 * coefficients. This is the RatPoly1 coefficient domain carrier: the norm is
 * the degree, units are the nonzero constants.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aut2/numbers.hpp"

namespace aut2 {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit RatPoly(long constant) : RatPoly(Rat(constant)) {}

    static RatPoly t() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    // coeffs[i] is the coefficient of t^i; trailing zeros are stripped.
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention here
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rat& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly operator-() const {
        std::vector<Rat> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return RatPoly(std::move(r));
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RatPoly(std::move(r));
    }

    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RatPoly(std::move(r));
    }

    RatPoly scaled(const Rat& s) const {
        std::vector<Rat> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return RatPoly(std::move(r));
    }

    // a = b*q + r with r = 0 or deg r < deg b
    static std::pair<RatPoly, RatPoly> div_rem(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        RatPoly rem = a;
        std::vector<Rat> q;
        if (a.degree() >= b.degree()) q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const long shift = rem.degree() - b.degree();
            const Rat factor = rem.leading() / b.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
            sub.push_back(factor);
            rem = rem - b * RatPoly(std::move(sub));
        }
        return {RatPoly(std::move(q)), rem};
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        return scaled(1 / leading());
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long d = degree(); d >= 0; --d) {
            const Rat& c = c_[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            const bool neg = c < 0;
            Rat mag = neg ? Rat(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const bool unit_coeff = (mag == 1) && d > 0;
            if (!unit_coeff) s += aut2::to_string(mag);
            if (d > 0) {
                if (!unit_coeff) s += "*";
                s += "t";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : c_)
            if (c != 0) ++n;
        return n;
    }

private:
    std::vector<Rat> c_;

    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// monic gcd; gcd(0,0) = 0
inline RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = RatPoly::div_rem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace aut2
