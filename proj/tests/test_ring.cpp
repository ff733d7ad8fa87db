#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <rmbispec/ring.hpp>

using namespace rmb;

TEST_CASE("rational construction and canonical form") {
    Rational a = rational(6, -4);
    CHECK(a == rational(-3, 2));
    CHECK(to_string(a) == "-3/2");
    CHECK(rational_from_string("-3/2") == a);
    CHECK(rational_from_string("7") == 7);
    CHECK_THROWS(rational(1, 0));
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("rational field ops and integer powers") {
    Rational q = rational(2, 7), t = rational(3, 5);
    CHECK(q + t == rational(31, 35));
    CHECK(q * t == rational(6, 35));
    CHECK(q / t == rational(10, 21));
    CHECK(pow_int(q, 3) == rational(8, 343));
    CHECK(pow_int(q, -2) == rational(49, 4));
    CHECK(pow_int(Rational(0), 5) == 0);
    CHECK_THROWS(pow_int(Rational(0), -1));
}

TEST_CASE("rational arithmetic exceeds machine word sizes") {
    Rational b = pow_int(rational(10), 40) + 1;
    Rational c = b * b - (b - 1) * (b + 1);
    CHECK(c == 1);
}

TEST_CASE("eps-laurent: window inverse long-division example") {
    // (eps - eps^2)^{-1} on window [-3,3] is eps^{-1} + 1 + eps + eps^2 + eps^3(+...)
    EpsLaurent v(0, -3, 3);
    v += EpsLaurent::eps(-3, 3);
    v -= EpsLaurent::eps(-3, 3) * EpsLaurent::eps(-3, 3);
    EpsLaurent inv = v.inverse();
    // certified exponents: inverse of a valuation-1 value costs 2 exponents
    for (int k = -1; k <= 1; ++k) CHECK(inv.coeff(k) == 1);
    CHECK(inv.coeff(-2) == 0);
    CHECK(inv.coeff(-3) == 0);
    // product restores 1 on the certified range
    EpsLaurent prod = v * inv;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
}

TEST_CASE("eps-laurent: pole order probing") {
    EpsLaurent one(1, -4, 4);
    EpsLaurent eps = EpsLaurent::eps();
    EpsLaurent pinch = EpsLaurent::one_plus_eps(); // 1 + eps

    SUBCASE("regular value has order <= 0") {
        PoleOrder p = pinch.pole_order();
        CHECK(p.confirmed(0));
    }
    SUBCASE("simple pole") {
        EpsLaurent v = one / (pinch - one); // 1/eps
        PoleOrder p = v.pole_order();
        CHECK(p.confirmed(1));
    }
    SUBCASE("double pole") {
        EpsLaurent v = one / (eps * eps);
        CHECK(v.pole_order().confirmed(2));
    }
    SUBCASE("floor saturation is reported, never a confirmed order") {
        EpsLaurent v = one;
        for (int i = 0; i < 5; ++i) v = v / eps; // eps^{-5}, below the floor
        CHECK(v.pole_order().kind == PoleOrder::Kind::FloorSaturated);
        // and saturation is sticky through arithmetic
        EpsLaurent w = v * eps * eps;
        CHECK(w.pole_order().kind == PoleOrder::Kind::FloorSaturated);
    }
    SUBCASE("zero detection") {
        EpsLaurent v = pinch - pinch;
        CHECK(v.pole_order().kind == PoleOrder::Kind::Zero);
    }
    SUBCASE("division by zero throws") {
        EpsLaurent z(0, -4, 4);
        CHECK_THROWS(z.inverse());
    }
}

TEST_CASE("eps-laurent: ring identities on random values") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> cd(-5, 5);
    auto rnd = [&] {
        EpsLaurent v(0, -4, 4);
        EpsLaurent e = EpsLaurent::eps();
        EpsLaurent p = EpsLaurent(1, -4, 4);
        for (int k = 0; k <= 3; ++k) {
            v += EpsLaurent(Rational(cd(rng)), -4, 4) * p;
            p = p * e;
        }
        return v;
    };
    for (int it = 0; it < 50; ++it) {
        EpsLaurent a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("eps-laurent: a/b*b == a on certified exponents for units") {
    EpsLaurent a(3, -4, 4);
    a += EpsLaurent::eps() * EpsLaurent(Rational(rational(5, 7)), -4, 4);
    EpsLaurent b = EpsLaurent::one_plus_eps();
    EpsLaurent r = (a / b) * b;
    for (int k = -4; k <= 4; ++k) CHECK(r.coeff(k) == a.coeff(k));
}

TEST_CASE("real: basic arithmetic and precision policy") {
    Real a(rational(1, 3), 128);
    Real b(rational(1, 7), 256);
    Real c = a + b;
    CHECK(c.precision() == 256);
    CHECK((c - Real(rational(10, 21), 256)).abs() < Real(1e-30, 64));
    CHECK_THROWS(Real(1L, 32)); // below the 64-bit floor
    CHECK_THROWS(a / Real(0L));
    CHECK(Real(2L).pow(-3) == Real(0.125));
}

TEST_CASE("real: doubling precision refines consistently") {
    // sum_{k<60} (1/3)^k / k! style smooth quantity via plain ops
    auto compute = [](long prec) {
        Real x(rational(1, 3), prec);
        Real acc(0L, prec), term(1L, prec);
        for (long k = 1; k <= 60; ++k) {
            term = term * x / Real(k, prec);
            acc += term;
        }
        return acc;
    };
    Real lo = compute(128), hi = compute(256);
    CHECK((lo - hi).abs() < Real(1L).pow(0) * Real(2L).pow(-100));
}
