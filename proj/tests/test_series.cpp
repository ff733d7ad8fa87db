#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <rmbispec/series.hpp>

using namespace rmb;

static Rational rq(long a, long b) { return rational(a, b); }

static Series<Rational> random_series(const VarSig& sig, std::mt19937& rng, bool unit) {
    std::uniform_int_distribution<long> cd(-4, 4);
    std::uniform_int_distribution<int> ed(0, 2);
    Series<Rational> s(sig);
    for (int tries = 0; tries < 12; ++tries) {
        Mono m = Mono::unit(sig.slots());
        for (int i = 0; i < sig.slots(); ++i) { m.ze[i] = ed(rng); m.we[i] = ed(rng); }
        long c = cd(rng);
        if (c) s.add_term(m, Rational(c));
    }
    if (unit) s.add_term(Mono::unit(sig.slots()), Rational(2) - s.coeff_at(Mono::unit(sig.slots())));
    return s;
}

TEST_CASE("monomial ordering is graded lex, z-block first") {
    MonoCmp cmp;
    Mono a{{1, 0}, {0, 0}}, b{{0, 1}, {0, 0}}, c{{0, 0}, {2, 0}}, u{{0, 0}, {0, 0}};
    CHECK(cmp(u, a));
    CHECK(cmp(c, a));      // any z-degree beats pure w-degree
    CHECK(cmp(b, a));      // lex within equal z-degree: (0,1) < (1,0)
    CHECK(!cmp(a, a));
}

TEST_CASE("arithmetic obeys ring axioms under truncation") {
    std::mt19937 rng(424242);
    VarSig sig{3, 4, 4};
    for (int it = 0; it < 30; ++it) {
        auto a = random_series(sig, rng, false);
        auto b = random_series(sig, rng, false);
        auto c = random_series(sig, rng, false);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == Series<Rational>(sig));
    }
}

TEST_CASE("inverse of a unit multiplies back to one") {
    std::mt19937 rng(7);
    VarSig sig{3, 3, 3};
    for (int it = 0; it < 10; ++it) {
        auto a = random_series(sig, rng, true);
        CHECK(a * a.inverse() == Series<Rational>::one(sig));
    }
    Series<Rational> z(sig);
    CHECK_THROWS(z.inverse());
}

TEST_CASE("geometric series oracle: 1/(1-z_1) on caps") {
    VarSig sig{2, 5, 0};
    Series<Rational> d = Series<Rational>::one(sig);
    Mono z1{{1}, {0}};
    d.add_term(z1, Rational(-1));
    Series<Rational> inv = d.inverse();
    Mono m = Mono::unit(1);
    for (int k = 0; k <= 5; ++k) {
        CHECK(inv.coeff_at(m) == 1);
        m = m * z1;
    }
}

TEST_CASE("qshift acts as the substitution x_i -> q^{shift_i} x_i") {
    VarSig sig{3, 4, 4};
    Rational q = rq(2, 7);
    Series<Rational> s(sig);
    Mono m{{1, 0}, {0, 0}}; // x_2/x_1
    s.add_term(m, Rational(1));
    // shift e_1: x_1 -> q x_1 turns x_2/x_1 into q^{-1} x_2/x_1
    auto r = s.qshift(true, {1, 0, 0}, q);
    CHECK(r.coeff_at(m) == 1 / q);
    // shift e_2: x_2 -> q x_2 gives factor q
    r = s.qshift(true, {0, 1, 0}, q);
    CHECK(r.coeff_at(m) == q);
    // x_3/x_1 = z_1 z_2 under simultaneous shift of all variables is fixed
    Series<Rational> s2(sig);
    s2.add_term(Mono{{1, 1}, {0, 0}}, Rational(5));
    CHECK(s2.qshift(true, {1, 1, 1}, q) == s2);
    // w-block shift leaves z-monomials alone
    CHECK(s.qshift(false, {2, 0, 1}, q) == s);
}

TEST_CASE("qshift composes additively") {
    std::mt19937 rng(99);
    VarSig sig{3, 4, 4};
    Rational q = rq(2, 7);
    auto a = random_series(sig, rng, false);
    auto once = a.qshift(true, {1, 0, 2}, q).qshift(true, {0, 1, 1}, q);
    auto direct = a.qshift(true, {1, 1, 3}, q);
    CHECK(once == direct);
}

TEST_CASE("block swap is an involution exchanging caps") {
    std::mt19937 rng(5);
    VarSig sig{3, 4, 2};
    auto a = random_series(sig, rng, false);
    auto sw = a.swap_blocks();
    CHECK(sw.sig().dz == 2);
    CHECK(sw.sig().dw == 4);
    CHECK(sw.swap_blocks() == a);
}

TEST_CASE("restriction to the leading face") {
    VarSig sig{3, 4, 4};
    Series<Rational> s(sig);
    s.add_term(Mono{{0, 0}, {0, 0}}, Rational(1));
    s.add_term(Mono{{0, 2}, {0, 1}}, rq(3, 2));   // survives: z_2^2 w_2
    s.add_term(Mono{{1, 0}, {0, 0}}, Rational(7)); // killed: has z_1
    bool clean = true;
    auto r = s.restrict_front(2, &clean);
    CHECK(clean);
    CHECK(r.sig().n == 2);
    CHECK(r.coeff_at(Mono{{0}, {0}}) == 1);
    CHECK(r.coeff_at(Mono{{2}, {1}}) == rq(3, 2));
    // a term on the z-face carrying a dropped w-slot marks the result unclean
    s.add_term(Mono{{0, 1}, {1, 0}}, Rational(2));
    s.restrict_front(2, &clean);
    CHECK(!clean);
}

TEST_CASE("pochhammer factors as series") {
    VarSig sig{2, 6, 6};
    Rational q = rq(2, 7), c = rq(3, 5);
    Mono z1 = ratio_mono_z(sig, 1, 2);
    // finite: (c z;q)_2 = 1 - c(1+q) z + c^2 q z^2
    auto f = poch_series(sig, c, z1, q, 2);
    CHECK(f.coeff_at(Mono::unit(1)) == 1);
    CHECK(f.coeff_at(z1) == -c * (1 + q));
    CHECK(f.coeff_at(z1 * z1) == c * c * q);
    // infinite against its reciprocal
    auto inf = poch_inf_series(sig, c, z1, q);
    auto rec = poch_inf_series_recip(sig, c, z1, q);
    CHECK(inf * rec == Series<Rational>::one(sig));
    // (c m;q)_inf = (1 - c m)(c q m;q)_inf functional equation
    auto shifted = poch_inf_series(sig, c * q, z1, q);
    Series<Rational> lin = Series<Rational>::one(sig);
    lin.add_term(z1, -c);
    CHECK(inf == lin * shifted);
}

TEST_CASE("ratio monomials address consecutive slots") {
    VarSig sig{4, 3, 3};
    Mono m = ratio_mono_w(sig, 2, 4);
    CHECK(m.we == std::vector<int>{0, 1, 1});
    CHECK(ratio_mono_z(sig, 1, 2).ze == std::vector<int>{1, 0, 0});
}

TEST_CASE("embedding into a wider signature") {
    VarSig small{2, 3, 3}, big{3, 3, 3};
    Series<Rational> s(small);
    s.add_term(Mono{{2}, {1}}, rq(5, 3));
    auto e = s.embed(big);
    CHECK(e.coeff_at(Mono{{2, 0}, {1, 0}}) == rq(5, 3));
}

TEST_CASE("numeric evaluation of an exact series") {
    VarSig sig{2, 8, 0};
    Series<Rational> d = Series<Rational>::one(sig);
    d.add_term(Mono{{1}, {0}}, Rational(-1));
    auto geo = d.inverse();
    Real z(rq(1, 10));
    Real v = geo.eval<Real>({z}, {Real(0L)});
    // 1/(1-1/10) truncated at degree 8
    Real expect = (Real(1L) - z.pow(9)) / (Real(1L) - z);
    CHECK((v - expect).abs() < Real(2L).pow(-200));
}
