#pragma once

/*
 * numbers.hpp
 * -----------
 * Exact scalar arithmetic used throughout: arbitrary-precision integers and
 * rationals (GMP-backed). Rationals are kept canonical by mpq: lowest terms,
 * positive denominator.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aut2 {

using Integer = mpz_class;
using Rat = mpq_class;

inline Integer int_from_string(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (i == digits.size()) throw std::invalid_argument("bare sign is not an integer literal");
    for (; i < digits.size(); ++i)
        if (digits[i] < '0' || digits[i] > '9')
            throw std::invalid_argument("bad digit in integer literal");
    return Integer(std::string(digits), 10);
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Rat make_rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("division by zero");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Integer int_abs(const Integer& a) { return abs(a); }

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Truncated division: a = b*q + r with sign(r) = sign(a) and |r| < |b|.
inline void int_divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (b == 0) throw std::domain_error("division by zero");
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline int cmp_integer(const Integer& a, const Integer& b) { return cmp(a, b); }

}  // namespace aut2
