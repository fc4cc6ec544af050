#pragma once

/*
 * sampler.hpp
 * -----------
 * Sampling of tame automorphisms in amalgamated normal form
 *
 *   phi = sigma_1 o tau_1 o sigma_2 o tau_2 o ... o sigma_k o tau_k o lambda
 *
 * with sigma_i drawn from the affine coset-representative set (sigma_2..k not
 * in H), tau_i = (x1 + h_i(x2), x2) with h_i in x2^2*Phi[x2] of degree >= 2,
 * and a trailing affine lambda with unit determinant.
 */

#include <cstdint>
#include <vector>

#include "aut2/endo2.hpp"
#include "aut2/rng.hpp"

namespace aut2 {

template <euclidean_domain D>
struct NormalFormWord {
    std::vector<EndoPair<D>> sigmas;  // k entries; sigmas[0] may be the identity
    std::vector<Poly2<D>> hs;         // k entries; h_i univariate in x2, deg >= 2
    EndoPair<D> lambda;               // trailing affine
};

struct SampleOptions {
    int syllables = 1;       // k >= 1
    int max_h_deg = 3;       // n_i drawn from [2, max_h_deg]
    long coeff_bound = 2;    // magnitude bound for drawn domain elements
    bool identity_sigma1 = false;
    bool identity_lambda = false;
};

template <euclidean_domain D>
EndoPair<D> tau_from_h(const Poly2<D>& h) {
    return EndoPair<D>{add(Poly2<D>::variable(1), h), Poly2<D>::variable(2)};
}

namespace detail {

// a random unimodular affine map, built from the identity by a few random
// row operations (plus optional translations)
template <euclidean_domain D>
EndoPair<D> random_unimodular_affine(Rng& rng, long bound, bool with_translation) {
    AffineParts<D> p{D::one(), D::zero(), D::zero(), D::zero(), D::one(), D::zero()};
    const int ops = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < ops; ++i) {
        switch (rng.range(0, 3)) {
            case 0: {  // row1 += r * row2
                const auto r = D::random_element(rng, bound);
                p.a1 = D::add(p.a1, D::mul(r, p.a2));
                p.b1 = D::add(p.b1, D::mul(r, p.b2));
                break;
            }
            case 1: {  // row2 += r * row1
                const auto r = D::random_element(rng, bound);
                p.a2 = D::add(p.a2, D::mul(r, p.a1));
                p.b2 = D::add(p.b2, D::mul(r, p.b1));
                break;
            }
            case 2: {  // scale row1 by a unit
                const auto u = D::random_unit(rng);
                p.a1 = D::mul(u, p.a1);
                p.b1 = D::mul(u, p.b1);
                break;
            }
            default: {  // swap rows, negating one to keep the determinant a unit
                std::swap(p.a1, p.a2);
                std::swap(p.b1, p.b2);
                p.a1 = D::negate(p.a1);
                p.b1 = D::negate(p.b1);
                break;
            }
        }
    }
    if (with_translation) {
        p.c1 = D::random_element(rng, bound);
        p.c2 = D::random_element(rng, bound);
    }
    return make_affine(p);
}

template <euclidean_domain D>
Poly2<D> random_h(Rng& rng, int max_deg, long bound) {
    const long n = rng.range(2, max_deg);
    Poly2<D> h;
    h.add_term(Word{0, n}, D::random_nonzero(rng, bound));
    for (long d = 2; d < n; ++d) h.add_term(Word{0, d}, D::random_element(rng, bound));
    return h;
}

}  // namespace detail

template <euclidean_domain D>
std::pair<NormalFormWord<D>, EndoPair<D>> sample_tame(Rng& rng, const SampleOptions& opts) {
    if (opts.syllables < 1) throw std::invalid_argument("sample_tame: need at least one syllable");
    if (opts.max_h_deg < 2) throw std::invalid_argument("sample_tame: max_h_deg must be >= 2");

    NormalFormWord<D> nf;
    for (int i = 0; i < opts.syllables; ++i) {
        EndoPair<D> sigma;
        if (i == 0 && opts.identity_sigma1) {
            sigma = identity_endo<D>();
        } else {
            // rejection-sample the non-H representatives for i >= 1
            do {
                sigma = affine_coset_rep(
                    detail::random_unimodular_affine<D>(rng, opts.coeff_bound, false));
            } while (i > 0 && sigma == identity_endo<D>());
        }
        nf.sigmas.push_back(sigma);
        nf.hs.push_back(detail::random_h<D>(rng, opts.max_h_deg, opts.coeff_bound));
    }
    nf.lambda = opts.identity_lambda
                    ? identity_endo<D>()
                    : detail::random_unimodular_affine<D>(rng, opts.coeff_bound, true);

    EndoPair<D> acc = nf.sigmas[0];
    for (std::size_t i = 0; i < nf.hs.size(); ++i) {
        acc = compose(acc, tau_from_h(nf.hs[i]));
        if (i + 1 < nf.sigmas.size()) acc = compose(acc, nf.sigmas[i + 1]);
    }
    acc = compose(acc, nf.lambda);
    return {std::move(nf), std::move(acc)};
}

}  // namespace aut2
