#pragma once

/*
 * word.hpp
 * --------
 * Basis words x1^l * x2^m of the rank-2 polynomial algebra and their total
 * order: first by total degree, ties by the x1-degree (so x1 > x2).
 */

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aut2 {

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent cap; degree growth under composition is multiplicative, and the
// cap turns runaway inputs into a diagnostic instead of unbounded work.
inline std::int64_t& exponent_cap_ref() {
    static std::int64_t cap = (std::int64_t{1} << 31) - 1;
    return cap;
}
inline std::int64_t exponent_cap() { return exponent_cap_ref(); }
inline void set_exponent_cap(std::int64_t cap) {
    if (cap < 1) throw std::invalid_argument("exponent cap must be positive");
    exponent_cap_ref() = cap;
}

struct Word {
    std::int64_t l = 0;  // exponent of x1
    std::int64_t m = 0;  // exponent of x2

    std::int64_t degree() const { return l + m; }
    bool is_empty() const { return l == 0 && m == 0; }

    bool operator==(const Word&) const = default;

    // the word order
    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return l <=> o.l;
    }
};

inline std::strong_ordering compare_words(const Word& a, const Word& b) { return a <=> b; }

struct WordGreater {
    bool operator()(const Word& a, const Word& b) const { return a > b; }
};

inline Word word_mul(const Word& a, const Word& b) {
    const std::int64_t cap = exponent_cap();
    if (a.l > cap - b.l || a.m > cap - b.m)
        throw OverflowError("exponent overflow in word multiplication");
    return Word{a.l + b.l, a.m + b.m};
}

inline Word word_pow(const Word& w, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative word power");
    const std::int64_t cap = exponent_cap();
    if (e > 0 && (w.l > cap / e || w.m > cap / e))
        throw OverflowError("exponent overflow in word power");
    return Word{w.l * e, w.m * e};
}

// All words <= w, in decreasing order. Finiteness of this set is the
// well-foundedness witness behind the decider's termination.
inline std::vector<Word> enumerate_words_leq(const Word& w) {
    std::vector<Word> out;
    for (std::int64_t d = w.degree(); d >= 0; --d) {
        const std::int64_t l_top = (d == w.degree()) ? w.l : d;
        for (std::int64_t l = l_top; l >= 0; --l) out.push_back(Word{l, d - l});
    }
    return out;
}

inline std::string word_to_string(const Word& w) {
    if (w.is_empty()) return "1";
    std::string s;
    if (w.l > 0) {
        s += "x1";
        if (w.l > 1) s += "^" + std::to_string(w.l);
    }
    if (w.m > 0) {
        if (!s.empty()) s += "*";
        s += "x2";
        if (w.m > 1) s += "^" + std::to_string(w.m);
    }
    return s;
}

}  // namespace aut2
