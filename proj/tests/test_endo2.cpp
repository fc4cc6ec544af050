#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace aut2;
using aut2::test::random_int_poly;

namespace {
using D = IntegerDomain;
using P = Poly2<D>;
using E = EndoPair<D>;

P x1() { return P::variable(1); }
P x2() { return P::variable(2); }

E random_tame(Rng& rng, int syllables = 2, int max_h = 3) {
    SampleOptions opts;
    opts.syllables = syllables;
    opts.max_h_deg = max_h;
    return sample_tame<D>(rng, opts).second;
}
}  // namespace

TEST_CASE("compose follows the displayed formula") {
    const E id = identity_endo<D>();
    const E phi{add(x1(), mul(x2(), x2())), x2()};
    const E psi{x1(), add(x2(), x1())};
    CHECK(compose(id, psi) == psi);
    CHECK(compose(phi, id) == phi);

    // (g1(f1,f2), g2(f1,f2)) = (x1 + x2^2, x2 + x1 + x2^2)
    const E expected{add(x1(), mul(x2(), x2())), add(x2(), add(x1(), mul(x2(), x2())))};
    CHECK(compose(phi, psi) == expected);
}

TEST_CASE("compose is associative with two-sided identity") {
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        const E a = random_tame(rng, 1, 3);
        const E b = random_tame(rng, 1, 3);
        const E c = random_tame(rng, 1, 2);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, identity_endo<D>()) == a);
        CHECK(compose(identity_endo<D>(), a) == a);
    }
}

TEST_CASE("the tame chain over the fraction field composes to the Nagata map") {
    using Q = RationalFieldDomain;
    using PQ = Poly2<Q>;
    const Rat z(2);
    std::vector<ElementaryMove<Q>> chain;
    chain.push_back({1, z, PQ::zero()});                                     // (z x1, x2)
    chain.push_back({1, Rat(1), negate(mul(PQ::variable(2), PQ::variable(2)))});  // - x2^2
    chain.push_back({2, Rat(1), scalar_mul<Q>(z, PQ::variable(1))});         // x2 + z f1
    chain.push_back({1, Rat(1), mul(PQ::variable(2), PQ::variable(2))});     // + f2^2
    chain.push_back({1, make_rat(1, 2), PQ::zero()});                        // divide by z
    const TameCertificate<Q> cert{chain};
    CHECK(fold_certificate(cert) == nagata_sigma<Q>(z));
}

TEST_CASE("apply_move and its inverse") {
    const E id = identity_endo<D>();
    const ElementaryMove<D> m{1, Integer(1), mul(x2(), x2())};
    const E moved = apply_move(id, m);
    CHECK(moved == E{add(x1(), mul(x2(), x2())), x2()});
    CHECK(apply_move(moved, inverse_move(m)) == id);

    // scaling by a non-unit is not invertible and must be rejected
    CHECK_THROWS_AS(apply_move(id, ElementaryMove<D>{1, Integer(2), P::zero()}),
                    std::domain_error);
    // addend must be univariate in the other variable
    CHECK_THROWS_AS(apply_move(id, ElementaryMove<D>{1, Integer(1), x1()}),
                    std::invalid_argument);

    Rng rng(32);
    for (int it = 0; it < 100; ++it) {
        const E phi{random_int_poly(rng, 3, 5, 3), random_int_poly(rng, 3, 5, 3)};
        const int target = rng.coin() ? 1 : 2;
        P h;
        const long deg = rng.range(0, 3);
        for (long d = 0; d <= deg; ++d)
            h.add_term(target == 1 ? Word{0, d} : Word{d, 0}, Integer(rng.range(-4, 4)));
        const ElementaryMove<D> mv{target, IntegerDomain::random_unit(rng), h};
        CHECK(apply_move(apply_move(phi, mv), inverse_move(mv)) == phi);
    }
}

TEST_CASE("the first Nagata chain move requires z to be a unit") {
    // over K the move (x1,x2) -> (z x1, x2) is elementary; over Z with z = 2 it is not
    const ElementaryMove<RationalFieldDomain> over_k{1, Rat(2), Poly2<RationalFieldDomain>::zero()};
    CHECK(apply_move(identity_endo<RationalFieldDomain>(), over_k).f1 ==
          scalar_mul<RationalFieldDomain>(Rat(2), Poly2<RationalFieldDomain>::variable(1)));
    CHECK_THROWS_AS(apply_move(identity_endo<D>(), ElementaryMove<D>{1, Integer(2), P::zero()}),
                    std::domain_error);
}

TEST_CASE("D of an automorphism") {
    CHECK(d_aut(identity_endo<D>()) == base_daut<D>());
    CHECK(base_daut<D>() == DAut{Word{1, 0}, Word{0, 1}, Integer(2)});
    CHECK(base_daut<RationalFieldDomain>() == DAut{Word{1, 0}, Word{0, 1}, Integer(0)});
    CHECK(base_daut<RatPolyDomain>() == DAut{Word{1, 0}, Word{0, 1}, Integer(0)});

    const auto sigma = nagata_sigma<D>(Integer(2));
    CHECK(d_aut(sigma) == DAut{Word{0, 4}, Word{0, 2}, Integer(4)});

    Rng rng(33);
    for (int it = 0; it < 100; ++it) {
        P f = random_int_poly(rng, 4, 6, 4);
        P g = random_int_poly(rng, 4, 6, 4);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(d_aut(E{f, g}) == d_aut(E{g, f}));  // swap invariance
    }
    CHECK_THROWS_AS(d_aut(E{P::zero(), x2()}), std::domain_error);
}

TEST_CASE("compare_d is lexicographic") {
    CHECK(compare_d(DAut{Word{0, 4}, Word{0, 2}, Integer(4)},
                    DAut{Word{0, 2}, Word{0, 1}, Integer(3)}) == std::strong_ordering::greater);
    CHECK(compare_d(DAut{Word{1, 0}, Word{0, 1}, Integer(2)},
                    DAut{Word{1, 0}, Word{0, 1}, Integer(2)}) == std::strong_ordering::equal);

    // the identity exponent is the minimum over sampled automorphisms
    Rng rng(34);
    for (int it = 0; it < 50; ++it) {
        const E phi = random_tame(rng, 1 + static_cast<int>(rng.range(0, 2)), 3);
        CHECK(compare_d(d_aut(phi), base_daut<D>()) != std::strong_ordering::less);
    }
}

TEST_CASE("classify_base recognizes forms (2) and (3)") {
    P f1 = add(add(x1(), scalar_mul<D>(Integer(5), x2())), P::from_int(7));
    P f2 = add(scalar_mul<D>(Integer(-1), x2()), P::from_int(4));
    auto form = classify_base(E{f1, f2});
    REQUIRE(form.has_value());
    CHECK_FALSE(form->swapped);
    CHECK(form->a == 1);
    CHECK(form->b == 5);
    CHECK(form->beta == -1);

    // (3x2, x1 + x2) is form (3); its x2-coefficient 3 is a unit in field mode
    using Q = RationalFieldDomain;
    using PQ = Poly2<Q>;
    auto form3 = classify_base(EndoPair<Q>{scalar_mul<Q>(Rat(3), PQ::variable(2)),
                                           add(PQ::variable(1), PQ::variable(2))});
    REQUIRE(form3.has_value());
    CHECK(form3->swapped);
    CHECK(form3->a == 1);
    CHECK(form3->beta == 3);

    // precondition: D(phi) must equal the base exponent; over Z the same pair
    // has norm sum 4 != 2e and is rejected upstream
    CHECK_THROWS_AS(classify_base(E{add(x1(), mul(x2(), x2())), x2()}), std::invalid_argument);
    CHECK_THROWS_AS(classify_base(E{scalar_mul<D>(Integer(3), x2()), add(x1(), x2())}),
                    std::invalid_argument);
}

TEST_CASE("decompose_linear folds back exactly") {
    const E a{add(add(x1(), scalar_mul<D>(Integer(5), x2())), P::from_int(7)),
              add(scalar_mul<D>(Integer(-1), x2()), P::from_int(4))};
    CHECK(fold_certificate(decompose_linear(a)) == a);

    CHECK(decompose_linear(identity_endo<D>()).moves.empty());

    const E swap{x2(), x1()};
    const auto cert = decompose_linear(swap);
    CHECK(cert.moves.size() == 3);  // the standard unimodular swap decomposition
    CHECK(fold_certificate(cert) == swap);

    Rng rng(35);
    for (int it = 0; it < 100; ++it) {
        // random base-form automorphism, both shapes
        AffineParts<D> p{IntegerDomain::random_unit(rng), Integer(rng.range(-5, 5)),
                         Integer(rng.range(-5, 5)), Integer(0),
                         IntegerDomain::random_unit(rng), Integer(rng.range(-5, 5))};
        E phi = make_affine(p);
        if (rng.coin()) phi = E{phi.f2, phi.f1};
        CHECK(fold_certificate(decompose_linear(phi)) == phi);
    }
}

TEST_CASE("affine coset representatives") {
    // triangular affines represent the identity coset
    Rng rng(36);
    for (int it = 0; it < 50; ++it) {
        AffineParts<D> p{IntegerDomain::random_unit(rng), Integer(rng.range(-4, 4)),
                         Integer(rng.range(-4, 4)), Integer(0),
                         IntegerDomain::random_unit(rng), Integer(rng.range(-4, 4))};
        CHECK(affine_coset_rep(make_affine(p)) == identity_endo<D>());
    }

    // swap: bottom row normalizes to (1, 0)
    const E swap{x2(), x1()};
    const E rep = affine_coset_rep(swap);
    const auto parts = affine_parts(rep);
    REQUIRE(parts.has_value());
    CHECK(parts->a2 == 1);
    CHECK(parts->b2 == 0);
    CHECK(parts->c1 == 0);
    CHECK(parts->c2 == 0);
    CHECK(same_affine_coset(swap, rep));

    // lambda and lambda o (triangular affine) share a representative
    for (int it = 0; it < 100; ++it) {
        const E lambda = aut2::detail::random_unimodular_affine<D>(rng, 3, true);
        AffineParts<D> h{IntegerDomain::random_unit(rng), Integer(rng.range(-4, 4)),
                         Integer(rng.range(-4, 4)), Integer(0),
                         IntegerDomain::random_unit(rng), Integer(rng.range(-4, 4))};
        const E mu = compose(lambda, make_affine(h));
        CHECK(affine_coset_rep(lambda) == affine_coset_rep(mu));
        CHECK(same_affine_coset(lambda, mu));
        CHECK(same_affine_coset(lambda, affine_coset_rep(lambda)));
        // idempotence
        CHECK(affine_coset_rep(affine_coset_rep(lambda)) == affine_coset_rep(lambda));
    }

    CHECK_THROWS_AS(affine_coset_rep(E{scalar_mul<D>(Integer(2), x1()), x2()}),
                    std::domain_error);
}

TEST_CASE("sample_tame composes its own normal form") {
    // k = 1, h = x2^2, sigma = lambda = id gives the triangular map itself
    const E tau = tau_from_h(P::monomial(Word{0, 2}, Integer(1)));
    CHECK(tau == E{add(x1(), mul(x2(), x2())), x2()});
    CHECK(compose(compose(identity_endo<D>(), tau), identity_endo<D>()) == tau);
}

TEST_CASE("normal-form degree product law on sampled words") {
    Rng rng(37);
    SampleOptions opts;
    opts.identity_lambda = true;
    opts.identity_sigma1 = true;
    for (int it = 0; it < 25; ++it) {
        opts.syllables = 1 + static_cast<int>(rng.range(0, 2));
        opts.max_h_deg = 4;
        auto [nf, phi] = sample_tame<D>(rng, opts);
        std::int64_t prod = 1, prod_minus_last = 1;
        for (std::size_t i = 0; i < nf.hs.size(); ++i) {
            prod *= degree(nf.hs[i]);
            if (i + 1 < nf.hs.size()) prod_minus_last *= degree(nf.hs[i]);
        }
        CHECK(degree(phi.f1) == prod);
        CHECK(degree(phi.f2) == prod_minus_last);
    }
}

TEST_CASE("sampled pairs are verifiable automorphisms") {
    Rng rng(38);
    for (int it = 0; it < 10; ++it) {
        const E phi = random_tame(rng, 2, 3);
        const auto res = verify_automorphism(phi);
        REQUIRE(res.inverse.has_value());
        CHECK(compose(phi, *res.inverse) == identity_endo<D>());
        const auto back = verify_automorphism(*res.inverse);
        REQUIRE(back.inverse.has_value());
        CHECK(*back.inverse == phi);  // double inverse
    }
}

TEST_CASE("nagata sigma matches its defining formula") {
    const Integer z(2);
    const P w = nagata_w<D>(z);
    const auto sigma = nagata_sigma<D>(z);
    CHECK(sigma.f1 ==
          add(x1(), add(scalar_mul<D>(Integer(2), mul(x2(), w)), scalar_mul<D>(z, mul(w, w)))));
    CHECK(sigma.f2 == add(x2(), scalar_mul<D>(z, w)));
    CHECK_THROWS_AS(nagata_sigma<D>(Integer(0)), std::domain_error);
}
