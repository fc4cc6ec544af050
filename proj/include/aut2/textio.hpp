#pragma once

/*
 * textio.hpp
 * ----------
 * Printers for every value type (all output re-parses to an equal value) and
 * the JSON serialization of certificates, reduction traces, and verdicts.
 */

#include <string>

#include <json.hpp>

#include "aut2/decider.hpp"
#include "aut2/freealg.hpp"
#include "aut2/parser.hpp"

namespace aut2 {

// how a coefficient renders inside a product
struct CoeffDisplay {
    bool negative = false;   // sign to fold into the term joiner
    std::string magnitude;   // text without the folded sign
    bool needs_parens = false;
};

inline CoeffDisplay coeff_display(const Integer& a) {
    return {a < 0, to_string(Integer(int_abs(a))), false};
}

inline CoeffDisplay coeff_display(const Rat& a) {
    return {a < 0, to_string(Rat(abs(a))), false};
}

inline CoeffDisplay coeff_display(const RatPoly& a) {
    if (a.term_count() <= 1) {
        const bool neg = a.leading() < 0;
        return {neg, (neg ? (-a).to_string() : a.to_string()), false};
    }
    return {false, a.to_string(), true};
}

inline CoeffDisplay coeff_display(const RatFunc& a) {
    if (a.den() == RatPoly(1)) return coeff_display(a.num());
    return {false, a.to_string(), true};
}

namespace detail {

inline void join_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        if (negative) out += "-";
        out += body;
        return;
    }
    out += negative ? " - " : " + ";
    out += body;
}

template <typename Elem>
std::string term_body(const Elem& coeff, const std::string& monomial, bool& negative) {
    const CoeffDisplay d = coeff_display(coeff);
    negative = d.negative;
    if (monomial.empty()) return d.needs_parens ? "(" + d.magnitude + ")" : d.magnitude;
    if (!d.needs_parens && d.magnitude == "1") return monomial;
    const std::string c = d.needs_parens ? "(" + d.magnitude + ")" : d.magnitude;
    return c + "*" + monomial;
}

}  // namespace detail

template <euclidean_domain D>
std::string to_string(const Poly2<D>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        bool neg = false;
        const std::string body =
            detail::term_body(c, w.is_empty() ? std::string() : word_to_string(w), neg);
        detail::join_term(out, neg, body);
    }
    return out;
}

template <euclidean_domain D>
std::string to_string(const EndoPair<D>& phi) {
    return to_string(phi.f1) + " ; " + to_string(phi.f2);
}

// minimal parentheses for the left-normed convention: left children print
// bare, interior right children parenthesized
inline std::string magma_to_string(const MagmaWord& w) {
    if (w.is_leaf()) return w.var() == 1 ? "x1" : "x2";
    const MagmaWord r = w.right();
    return magma_to_string(w.left()) + "*" +
           (r.is_leaf() ? magma_to_string(r) : "(" + magma_to_string(r) + ")");
}

template <euclidean_domain D, bool C>
std::string to_string(const FreeElem<D, C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    // highest-degree monomials first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        bool neg = false;
        const std::string body = detail::term_body(it->second, magma_to_string(it->first), neg);
        detail::join_term(out, neg, body);
    }
    if (!D::is_zero(f.constant_part())) {
        bool neg = false;
        const std::string body = detail::term_body(f.constant_part(), std::string(), neg);
        detail::join_term(out, neg, body);
    }
    return out;
}

template <euclidean_domain D, bool C>
std::string to_string(const FreeEndo<D, C>& e) {
    return to_string(e.b1) + " ; " + to_string(e.b2);
}

// --------------------------------------------------------------------------
// JSON serialization

template <euclidean_domain D>
nlohmann::json move_to_json(const ElementaryMove<D>& m) {
    return nlohmann::json{
        {"target", m.target}, {"unit", D::to_string(m.unit)}, {"addend", to_string(m.addend)}};
}

template <euclidean_domain D>
ElementaryMove<D> move_from_json(const nlohmann::json& j) {
    ElementaryMove<D> m;
    m.target = j.at("target").get<int>();
    m.unit = parse_scalar<D>(j.at("unit").get<std::string>());
    m.addend = parse_poly<D>(j.at("addend").get<std::string>());
    validate_move(m);
    return m;
}

template <euclidean_domain D>
nlohmann::json certificate_to_json(const TameCertificate<D>& c) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : c.moves) moves.push_back(move_to_json(m));
    return nlohmann::json{{"moves", moves}};
}

template <euclidean_domain D>
TameCertificate<D> certificate_from_json(const nlohmann::json& j) {
    TameCertificate<D> c;
    for (const auto& jm : j.at("moves")) c.moves.push_back(move_from_json<D>(jm));
    return c;
}

inline nlohmann::json daut_to_json(const DAut& d) {
    return nlohmann::json{{"u", word_to_string(d.u)},
                          {"v", word_to_string(d.v)},
                          {"norm_sum", to_string(d.coeff_norm_sum)}};
}

template <euclidean_domain D>
nlohmann::json step_to_json(const ReductionStep<D>& s) {
    return nlohmann::json{{"move", move_to_json(s.move)},
                          {"before", daut_to_json(s.before)},
                          {"after", daut_to_json(s.after)}};
}

template <euclidean_domain D>
nlohmann::json trace_to_json(const std::vector<ReductionStep<D>>& trace) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : trace) a.push_back(step_to_json(s));
    return a;
}

inline const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Tame: return "TAME";
        case VerdictKind::Wild: return "WILD";
        case VerdictKind::NotAutomorphism: return "NOT_AUTOMORPHISM";
        case VerdictKind::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

template <euclidean_domain D>
nlohmann::json verdict_to_json(const Verdict<D>& v,
                               const std::vector<ReductionStep<D>>* tame_trace = nullptr) {
    nlohmann::json j{{"verdict", verdict_name(v.kind)}};
    switch (v.kind) {
        case VerdictKind::Tame:
            j["certificate"] = certificate_to_json(v.certificate);
            if (tame_trace) j["trace"] = trace_to_json(*tame_trace);
            break;
        case VerdictKind::Wild:
            j["stuck"] = nlohmann::json{{"f1", to_string(v.stuck.f1)}, {"f2", to_string(v.stuck.f2)}};
            j["trace"] = trace_to_json(v.trace);
            break;
        case VerdictKind::NotAutomorphism: j["reason"] = v.reason; break;
        case VerdictKind::Undecided: j["diagnostics"] = v.diagnostics; break;
    }
    return j;
}

template <euclidean_domain D>
std::string step_to_text(const ReductionStep<D>& s) {
    const auto show = [](const DAut& d) {
        return "(" + word_to_string(d.u) + ", " + word_to_string(d.v) + ", " +
               to_string(d.coeff_norm_sum) + ")";
    };
    return "target=" + std::to_string(s.move.target) + " unit=" + D::to_string(s.move.unit) +
           " addend=" + to_string(s.move.addend) + " | D " + show(s.before) + " -> " +
           show(s.after);
}

template <euclidean_domain D>
std::string verdict_to_text(const Verdict<D>& v,
                            const std::vector<ReductionStep<D>>* tame_trace = nullptr) {
    std::string out = verdict_name(v.kind);
    out += "\n";
    switch (v.kind) {
        case VerdictKind::Tame:
            out += certificate_to_json(v.certificate).dump(2);
            out += "\n";
            if (tame_trace) {
                out += "trace: " + std::to_string(tame_trace->size()) + " steps\n";
                for (const auto& s : *tame_trace) out += "  " + step_to_text(s) + "\n";
            }
            break;
        case VerdictKind::Wild:
            out += "stuck: " + to_string(v.stuck) + "\n";
            out += "trace: " + std::to_string(v.trace.size()) + " steps\n";
            for (const auto& s : v.trace) out += "  " + step_to_text(s) + "\n";
            break;
        case VerdictKind::NotAutomorphism: out += "reason: " + v.reason + "\n"; break;
        case VerdictKind::Undecided: out += "diagnostics: " + v.diagnostics + "\n"; break;
    }
    return out;
}

}  // namespace aut2
