/*
 * cli.cpp
 * -------
 * Subcommands: decide, reduce, compose, invert, verify, nagata, tame-random.
 * The coefficient ring is selected with --ring {int, ratpoly, rat}; inputs use
 * the shared grammar (variables x1, x2; the symbol t only for --ring ratpoly).
 * AUT2_EXP_CAP bounds monomial exponents; exceeding it yields UNDECIDED.
 */

#include "aut2/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "aut2/sampler.hpp"
#include "aut2/textio.hpp"

namespace aut2 {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitWild = 3;
constexpr int kExitNotAutomorphism = 4;
constexpr int kExitUndecided = 5;

int verdict_exit_code(VerdictKind k) {
    switch (k) {
        case VerdictKind::Tame: return kExitOk;
        case VerdictKind::Wild: return kExitWild;
        case VerdictKind::NotAutomorphism: return kExitNotAutomorphism;
        case VerdictKind::Undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

struct CommonOpts {
    std::string ring = "int";
    bool json = false;
    bool trace = false;
    bool z_free = false;  // input is explicit: no parameter substitution is performed
};

struct NagataOpts {
    std::string z;
    std::string form = "poly";
};

struct SampleCliOpts {
    std::uint64_t seed = 0;
    int syllables = 2;
    int max_h_deg = 3;
    long coeff_bound = 2;
};

template <euclidean_domain D>
int cmd_decide(const std::string& input, const CommonOpts& o, std::ostream& out) {
    const EndoPair<D> phi = parse_endo<D>(input);
    const Verdict<D> v = decide(phi);
    std::vector<ReductionStep<D>> tame_trace;
    const bool want_tame_trace = o.trace && v.kind == VerdictKind::Tame;
    if (want_tame_trace) tame_trace = reduction_trace(phi);
    const auto* tt = want_tame_trace ? &tame_trace : nullptr;
    if (o.json)
        out << verdict_to_json(v, tt).dump(2) << "\n";
    else
        out << verdict_to_text(v, tt);
    return verdict_exit_code(v.kind);
}

template <euclidean_domain D>
int cmd_reduce(const std::string& input, const CommonOpts& o, std::ostream& out) {
    const EndoPair<D> phi = parse_endo<D>(input);
    const auto outcome = reduce_to_base(phi);
    if (o.json) {
        nlohmann::json j{{"steps", trace_to_json(outcome.steps)},
                         {"final", to_string(outcome.final)},
                         {"reached_base", outcome.reached_base}};
        out << j.dump(2) << "\n";
    } else {
        out << "steps: " << outcome.steps.size() << "\n";
        for (const auto& s : outcome.steps) out << "  " << step_to_text(s) << "\n";
        out << (outcome.reached_base ? "base: " : "stuck: ") << to_string(outcome.final) << "\n";
    }
    return kExitOk;
}

template <euclidean_domain D>
int cmd_compose(const std::string& first, const std::string& second, std::ostream& out) {
    const EndoPair<D> phi = parse_endo<D>(first);
    const EndoPair<D> psi = parse_endo<D>(second);
    out << to_string(compose(phi, psi)) << "\n";
    return kExitOk;
}

template <euclidean_domain D>
int cmd_invert(const std::string& input, const CommonOpts& o, std::ostream& out,
               std::ostream& err) {
    const EndoPair<D> phi = parse_endo<D>(input);
    const auto res = verify_automorphism(phi);
    if (!res.inverse) {
        err << "NOT_AUTOMORPHISM: " << res.fail_reason << "\n";
        return kExitNotAutomorphism;
    }
    if (o.json)
        out << nlohmann::json{{"inverse", to_string(*res.inverse)}}.dump(2) << "\n";
    else
        out << to_string(*res.inverse) << "\n";
    return kExitOk;
}

template <euclidean_domain D>
int cmd_verify(const std::string& input, const CommonOpts& o, std::ostream& out) {
    const EndoPair<D> phi = parse_endo<D>(input);
    const auto res = verify_automorphism(phi);
    if (o.json) {
        nlohmann::json j{{"automorphism", res.inverse.has_value()}};
        if (res.inverse)
            j["inverse"] = to_string(*res.inverse);
        else
            j["reason"] = res.fail_reason;
        out << j.dump(2) << "\n";
        return res.inverse ? kExitOk : kExitNotAutomorphism;
    }
    if (res.inverse) {
        out << "AUTOMORPHISM\ninverse: " << to_string(*res.inverse) << "\n";
        return kExitOk;
    }
    out << "NOT_AUTOMORPHISM\nreason: " << res.fail_reason << "\n";
    return kExitNotAutomorphism;
}

template <euclidean_domain D>
int cmd_nagata(const NagataOpts& n, std::ostream& out, std::ostream& err) {
    const auto z = parse_scalar<D>(n.z);
    if (n.form == "poly") {
        out << to_string(nagata_sigma<D>(z)) << "\n";
        return kExitOk;
    }
    if (n.form == "free") {
        out << to_string(nagata_eta<D>(z)) << "\n";
        return kExitOk;
    }
    if (n.form == "comm") {
        out << to_string(nagata_omega<D>(z)) << "\n";
        return kExitOk;
    }
    err << "unknown --form value\n";
    return kExitUsage;
}

template <euclidean_domain D>
int cmd_tame_random(const SampleCliOpts& s, const CommonOpts& o, std::ostream& out) {
    Rng rng(s.seed);
    SampleOptions opts;
    opts.syllables = s.syllables;
    opts.max_h_deg = s.max_h_deg;
    opts.coeff_bound = s.coeff_bound;
    auto [nf, pair] = sample_tame<D>(rng, opts);
    if (o.json) {
        nlohmann::json syl = nlohmann::json::array();
        for (std::size_t i = 0; i < nf.hs.size(); ++i)
            syl.push_back(nlohmann::json{{"sigma", to_string(nf.sigmas[i])},
                                         {"h", to_string(nf.hs[i])}});
        nlohmann::json j{{"pair", to_string(pair)},
                         {"syllables", syl},
                         {"lambda", to_string(nf.lambda)}};
        out << j.dump(2) << "\n";
    } else {
        out << to_string(pair) << "\n";
    }
    return kExitOk;
}

template <typename F>
int with_ring(const std::string& ring, std::ostream& err, F&& f) {
    if (ring == "int") return f(IntegerDomain{});
    if (ring == "rat") return f(RationalFieldDomain{});
    if (ring == "ratpoly") return f(RatPolyDomain{});
    err << "unknown ring '" << ring << "'\n";
    return kExitUsage;
}

int apply_exponent_cap_env(std::ostream& err) {
    const char* cap = std::getenv("AUT2_EXP_CAP");
    if (!cap) return kExitOk;
    try {
        const long long v = std::stoll(cap);
        set_exponent_cap(v);
    } catch (const std::exception&) {
        err << "invalid AUT2_EXP_CAP value '" << cap << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tame/wild recognition for automorphisms of rank-2 polynomial algebras "
                 "over Euclidean domains"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string input, second_input;
    NagataOpts nagata_opts;
    SampleCliOpts sample_opts;

    const auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", common.ring, "coefficient ring")
            ->check(CLI::IsMember({"int", "ratpoly", "rat"}))
            ->capture_default_str();
    };

    CLI::App* c_decide = app.add_subcommand("decide", "classify a pair as tame or wild");
    add_ring(c_decide);
    c_decide->add_option("input", input, "automorphism 'f1 ; f2'")->required();
    c_decide->add_flag("--trace", common.trace, "include the reduction trace");
    c_decide->add_flag("--json", common.json, "machine-readable output");
    c_decide->add_flag("--z-free", common.z_free,
                       "declare that the input is explicit (no parameter substitution)");

    CLI::App* c_reduce = app.add_subcommand("reduce", "replay the D-reduction loop");
    add_ring(c_reduce);
    c_reduce->add_option("input", input, "pair 'f1 ; f2'")->required();
    c_reduce->add_flag("--json", common.json, "machine-readable output");

    CLI::App* c_compose = app.add_subcommand("compose", "compose two pairs");
    add_ring(c_compose);
    c_compose->add_option("first", input, "pair applied first")->required();
    c_compose->add_option("second", second_input, "pair applied second")->required();

    CLI::App* c_invert = app.add_subcommand("invert", "inverse over the base ring");
    add_ring(c_invert);
    c_invert->add_option("input", input, "pair 'f1 ; f2'")->required();
    c_invert->add_flag("--json", common.json, "machine-readable output");

    CLI::App* c_verify = app.add_subcommand("verify", "check the automorphism property");
    add_ring(c_verify);
    c_verify->add_option("input", input, "pair 'f1 ; f2'")->required();
    c_verify->add_flag("--json", common.json, "machine-readable output");

    CLI::App* c_nagata = app.add_subcommand("nagata", "print a Nagata-type map");
    add_ring(c_nagata);
    c_nagata->add_option("--z", nagata_opts.z, "parameter z (scalar in the ring)")->required();
    c_nagata->add_option("--form", nagata_opts.form, "poly | free | comm")
        ->check(CLI::IsMember({"poly", "free", "comm"}))
        ->capture_default_str();

    CLI::App* c_random = app.add_subcommand("tame-random", "sample a tame automorphism");
    add_ring(c_random);
    c_random->add_option("--seed", sample_opts.seed, "deterministic seed")->required();
    c_random->add_option("--syllables", sample_opts.syllables, "syllable count k >= 1")
        ->capture_default_str();
    c_random->add_option("--max-h-deg", sample_opts.max_h_deg, "max deg h_i (>= 2)")
        ->capture_default_str();
    c_random->add_option("--coeff-bound", sample_opts.coeff_bound, "coefficient magnitude bound")
        ->capture_default_str();
    c_random->add_flag("--json", common.json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    if (int rc = apply_exponent_cap_env(err); rc != kExitOk) return rc;

    try {
        return with_ring(common.ring, err, [&](auto ring) {
            using D = decltype(ring);
            if (c_decide->parsed()) return cmd_decide<D>(input, common, out);
            if (c_reduce->parsed()) return cmd_reduce<D>(input, common, out);
            if (c_compose->parsed()) return cmd_compose<D>(input, second_input, out);
            if (c_invert->parsed()) return cmd_invert<D>(input, common, out, err);
            if (c_verify->parsed()) return cmd_verify<D>(input, common, out);
            if (c_nagata->parsed()) return cmd_nagata<D>(nagata_opts, out, err);
            if (c_random->parsed()) return cmd_tame_random<D>(sample_opts, common, out);
            err << "no subcommand\n";
            return kExitUsage;
        });
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const OverflowError& e) {
        if (common.json)
            out << nlohmann::json{{"verdict", "UNDECIDED"}, {"diagnostics", e.what()}}.dump(2)
                << "\n";
        else
            out << "UNDECIDED\ndiagnostics: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace aut2
