#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "aut2/fraction.hpp"
#include "test_support.hpp"

using namespace aut2;

namespace {

// exhaustive best-remainder oracle over a window of quotients
std::pair<long, long> best_remainder_scan(long a, long b) {
    const long center = b == 0 ? 0 : a / b;
    const long width = std::abs(center) + 2;
    long best_q = 0, best_r = a;
    bool first = true;
    for (long q = center - width; q <= center + width; ++q) {
        const long r = a - b * q;
        if (first || std::abs(r) < std::abs(best_r) ||
            (std::abs(r) == std::abs(best_r) && best_r < 0 && r >= 0)) {
            best_q = q;
            best_r = r;
            first = false;
        }
    }
    return {best_q, best_r};
}

}  // namespace

TEST_CASE("integer norm and unit characterization") {
    CHECK(IntegerDomain::norm(Integer(-5)) == 5);
    CHECK(IntegerDomain::norm(Integer(1)) == 1);  // e = 1 in Z
    CHECK(IntegerDomain::descriptor().unit_norm_e == 1);
    CHECK_THROWS_AS(IntegerDomain::norm(Integer(0)), std::domain_error);

    CHECK(IntegerDomain::is_unit(Integer(-1)));
    CHECK_FALSE(IntegerDomain::is_unit(Integer(2)));
    CHECK_FALSE(IntegerDomain::is_unit(Integer(0)));
}

TEST_CASE("ratpoly norm is the degree, units are nonzero constants") {
    const RatPoly p(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});  // t^2 + 1
    CHECK(RatPolyDomain::norm(p) == 2);
    CHECK(RatPolyDomain::norm(RatPoly(7)) == 0);  // e = 0 in Q[t]
    CHECK(RatPolyDomain::descriptor().unit_norm_e == 0);
    CHECK(RatPolyDomain::is_unit(RatPoly(make_rat(3, 4))));
    CHECK_FALSE(RatPolyDomain::is_unit(RatPoly::t()));
}

TEST_CASE("rational field mode is degenerate: norm 0, every nonzero a unit") {
    CHECK(RationalFieldDomain::norm(Rat(5)) == 0);
    CHECK(RationalFieldDomain::descriptor().unit_norm_e == 0);
    CHECK(RationalFieldDomain::is_unit(make_rat(-3, 7)));
    CHECK_FALSE(RationalFieldDomain::is_unit(Rat(0)));
}

TEST_CASE("div_rem examples") {
    {
        auto [q, r] = IntegerDomain::div_rem(Integer(7), Integer(3));
        CHECK(q == 2);
        CHECK(r == 1);
    }
    {
        auto [q, r] = IntegerDomain::div_rem(Integer(6), Integer(3));
        CHECK(q == 2);
        CHECK(r == 0);
    }
    {
        // t^2 + 1 = (2t)(t/2) + 1
        const RatPoly a(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
        const RatPoly b(std::vector<Rat>{Rat(0), Rat(2)});
        auto [q, r] = RatPolyDomain::div_rem(a, b);
        CHECK(q == RatPoly(std::vector<Rat>{Rat(0), make_rat(1, 2)}));
        CHECK(r == RatPoly(1));
        CHECK(b * q + r == a);
    }
    CHECK_THROWS_AS(IntegerDomain::div_rem(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("best_remainder on integers matches the exhaustive scan") {
    {
        auto [q, r] = IntegerDomain::best_remainder(Integer(7), Integer(3));
        CHECK(q == 2);
        CHECK(r == 1);
    }
    {
        auto [q, r] = IntegerDomain::best_remainder(Integer(8), Integer(3));
        CHECK(q == 3);
        CHECK(r == -1);
    }
    for (long a = -100; a <= 100; ++a) {
        for (long b = -100; b <= 100; ++b) {
            if (b == 0) continue;
            auto [q, r] = IntegerDomain::best_remainder(Integer(a), Integer(b));
            auto [oq, orr] = best_remainder_scan(a, b);
            CHECK(r == orr);
            CHECK(Integer(a) == Integer(b) * q + r);
        }
    }
}

TEST_CASE("best_remainder in field mode divides exactly") {
    auto [q, r] = RationalFieldDomain::best_remainder(Rat(5), Rat(2));
    CHECK(q == make_rat(5, 2));
    CHECK(r == 0);
}

TEST_CASE("divides_exactly") {
    auto q = IntegerDomain::divides_exactly(Integer(6), Integer(-3));
    REQUIRE(q.has_value());
    CHECK(*q == -2);
    CHECK_FALSE(IntegerDomain::divides_exactly(Integer(7), Integer(3)).has_value());

    const RatPoly t = RatPoly::t();
    const RatPoly a = t * t - RatPoly(1);
    const RatPoly b = t - RatPoly(1);
    auto qq = RatPolyDomain::divides_exactly(a, b);
    REQUIRE(qq.has_value());
    CHECK(*qq == t + RatPoly(1));
    CHECK(b * *qq == a);
}

TEST_CASE("E1 sampled: norm grows under multiplication, equality iff unit") {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const Integer a = IntegerDomain::random_nonzero(rng, 50);
        const Integer b = IntegerDomain::random_nonzero(rng, 50);
        CHECK(IntegerDomain::norm(a * b) >= IntegerDomain::norm(a));
        CHECK((IntegerDomain::norm(a * b) == IntegerDomain::norm(a)) ==
              IntegerDomain::is_unit(b));
    }
    for (int it = 0; it < 200; ++it) {
        const RatPoly a = RatPolyDomain::random_nonzero(rng, 4);
        const RatPoly b = RatPolyDomain::random_nonzero(rng, 4);
        CHECK(RatPolyDomain::norm(a * b) >= RatPolyDomain::norm(a));
        CHECK((RatPolyDomain::norm(a * b) == RatPolyDomain::norm(a)) ==
              RatPolyDomain::is_unit(b));
    }
    for (int it = 0; it < 100; ++it) {
        const Rat a = RationalFieldDomain::random_nonzero(rng, 9);
        const Rat b = RationalFieldDomain::random_nonzero(rng, 9);
        CHECK(RationalFieldDomain::norm(a * b) >= RationalFieldDomain::norm(a));
        CHECK(RationalFieldDomain::is_unit(b));
    }
}

TEST_CASE("unit invariance of the norm") {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        const Integer a = IntegerDomain::random_nonzero(rng, 1000);
        const Integer u = IntegerDomain::random_unit(rng);
        CHECK(IntegerDomain::norm(u * a) == IntegerDomain::norm(a));
    }
    for (int it = 0; it < 100; ++it) {
        const RatPoly a = RatPolyDomain::random_nonzero(rng, 5);
        const RatPoly u = RatPolyDomain::random_unit(rng);
        CHECK(RatPolyDomain::norm(u * a) == RatPolyDomain::norm(a));
    }
}

TEST_CASE("div_rem contract on random inputs") {
    Rng rng(13);
    for (int it = 0; it < 500; ++it) {
        const Integer a = IntegerDomain::random_element(rng, 1000);
        const Integer b = IntegerDomain::random_nonzero(rng, 1000);
        auto [q, r] = IntegerDomain::div_rem(a, b);
        CHECK(a == b * q + r);
        if (r != 0) CHECK(IntegerDomain::norm(r) < IntegerDomain::norm(b));
    }
    for (int it = 0; it < 200; ++it) {
        const RatPoly a = RatPolyDomain::random_nonzero(rng, 5);
        const RatPoly b = RatPolyDomain::random_nonzero(rng, 5);
        auto [q, r] = RatPolyDomain::div_rem(a, b);
        CHECK(b * q + r == a);
        if (!r.is_zero()) CHECK(RatPolyDomain::norm(r) < RatPolyDomain::norm(b));
    }
}

TEST_CASE("unit inverses") {
    CHECK(IntegerDomain::unit_inverse(Integer(-1)) == -1);
    CHECK_THROWS_AS(IntegerDomain::unit_inverse(Integer(3)), std::domain_error);
    CHECK(RationalFieldDomain::unit_inverse(make_rat(2, 3)) == make_rat(3, 2));
    CHECK_THROWS_AS(RationalFieldDomain::unit_inverse(Rat(0)), std::domain_error);
    CHECK(RatPolyDomain::unit_inverse(RatPoly(make_rat(1, 2))) == RatPoly(2));
}

TEST_CASE("fraction field of Z") {
    using FT = FractionTraits<IntegerDomain>;
    CHECK(FT::embed(Integer(3)) / FT::embed(Integer(6)) == make_rat(1, 2));
    auto back = FT::is_integral(make_rat(4, 2));
    REQUIRE(back.has_value());
    CHECK(*back == 2);
    CHECK_FALSE(FT::is_integral(make_rat(1, 2)).has_value());

    Rng rng(14);
    for (int it = 0; it < 200; ++it) {
        const Integer a = IntegerDomain::random_element(rng, 100);
        const Integer b = IntegerDomain::random_element(rng, 100);
        CHECK(FT::embed(a + b) == FT::embed(a) + FT::embed(b));
        CHECK(FT::embed(a * b) == FT::embed(a) * FT::embed(b));
        auto c = FT::is_integral(FT::embed(a));
        REQUIRE(c.has_value());
        CHECK(*c == a);
    }
}

TEST_CASE("fraction field of Q[t]: reduced, monic denominator") {
    const RatPoly t = RatPoly::t();
    const RatFunc x(t * t - RatPoly(1), t - RatPoly(1));
    CHECK(x.num() == t + RatPoly(1));
    CHECK(x.den() == RatPoly(1));

    const RatFunc y(RatPoly(1), RatPoly(std::vector<Rat>{Rat(1), Rat(2)}));  // 1 / (2t + 1)
    CHECK(y.den().leading() == 1);  // monic
    CHECK(y * y.inverse() == RatFuncDomain::one());
    CHECK_THROWS_AS(RatFunc(RatPoly(1), RatPoly()), std::domain_error);
    CHECK_THROWS_AS(RatFuncDomain::unit_inverse(RatFunc()), std::domain_error);

    Rng rng(15);
    using FT = FractionTraits<RatPolyDomain>;
    for (int it = 0; it < 100; ++it) {
        const RatPoly a = RatPolyDomain::random_element(rng, 3);
        const RatPoly b = RatPolyDomain::random_element(rng, 3);
        CHECK(FT::embed(a + b) == FT::embed(a) + FT::embed(b));
        CHECK(FT::embed(a * b) == FT::embed(a) * FT::embed(b));
        auto back = FT::is_integral(FT::embed(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    for (int it = 0; it < 100; ++it) {
        const RatFunc a = RatFuncDomain::random_nonzero(rng, 3);
        const RatFunc b = RatFuncDomain::random_nonzero(rng, 3);
        CHECK(a * a.inverse() == RatFuncDomain::one());
        CHECK(a * b == b * a);
        CHECK((a + b) * a == a * a + b * a);
    }
}

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    const Rat q = make_rat(Integer(3), Integer(-6));
    CHECK(q.get_num() == -1);
    CHECK(q.get_den() == 2);
    CHECK_THROWS_AS(make_rat(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("extended gcd") {
    Rng rng(16);
    for (int it = 0; it < 300; ++it) {
        const Integer a = IntegerDomain::random_element(rng, 500);
        const Integer b = IntegerDomain::random_element(rng, 500);
        if (a == 0 && b == 0) continue;
        auto [g, s, t] = extended_gcd<IntegerDomain>(a, b);
        CHECK(s * a + t * b == g);
        CHECK(int_abs(g) == int_gcd(a, b));
    }
    for (int it = 0; it < 100; ++it) {
        const RatPoly a = RatPolyDomain::random_nonzero(rng, 3);
        const RatPoly b = RatPolyDomain::random_nonzero(rng, 3);
        auto [g, s, t] = extended_gcd<RatPolyDomain>(a, b);
        CHECK(s * a + t * b == g);
        CHECK(RatPolyDomain::divides_exactly(a, g).has_value());
        CHECK(RatPolyDomain::divides_exactly(b, g).has_value());
    }
}
